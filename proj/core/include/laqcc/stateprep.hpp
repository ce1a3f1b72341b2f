// Copyright 2026 The LAQCC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAQCC_STATEPREP_HPP_
#define LAQCC_STATEPREP_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "json.hpp"

#include "laqcc/builder.hpp"
#include "laqcc/fragments.hpp"

namespace laqcc {

// A protocol program together with the state it should leave on `outputs`
// (bit i of the target is qubit outputs[i]).
struct Protocol {
  LaqccProgram program;
  SparseState target;
  std::vector<Qubit> outputs;
  nlohmann::json info;
};

SparseState uniform_target(uint64_t q);
SparseState dicke_target(int n, int k);
SparseState w_target(int n);

int uniform_width(uint64_t q);
// Unitary: reg (|reg| >= ceil(log2 q), in |0>) -> q^{-1/2} sum_{i<q} |i>.
// Powers of two take a Hadamard layer; other q amplify with Greaterthan
// against a loaded constant. Writes the chosen path into *info if given.
void uniform_fragment(ProgramBuilder& b, const std::vector<Qubit>& reg, uint64_t q,
                      nlohmann::json* info = nullptr);

Protocol uniform(uint64_t q);
Protocol ghz_protocol(int n);

// Uniform index load, then Uncompress (fanout index copies, Equal_l per
// position, unfanout) and Compress (Hadamard, fanout, CZ phase cancellation,
// unfanout, Hadamard).
Protocol w_state(int n, FanoutBackend backend = FanoutBackend::kSemantic);
// Row l holds index_l[0], system[l], index_l[1]; needs the semantic
// backend and n in {2, 4}. Throws LayoutError otherwise.
GridLayout w_state_layout(const Protocol& w);

struct DickeOptions {
  // Cleaning by the controlled-phase sequence with gadget fanouts; the
  // default picks it for n <= 4 and the register map otherwise.
  enum class Cleaning { kAuto, kGadget, kSemantic };
  Cleaning cleaning = Cleaning::kAuto;
};

// Filling, Filtering (amplified), Ordering (one measured round) and
// Cleaning. Throws PolicyError unless n >= 2 and 1 <= k <= ceil(sqrt(n)).
Protocol dicke_small_k(int n, int k, const DickeOptions& options = {});
bool dicke_small_k_allowed(int n, int k);

// Uniform factoradic digits, sys ^= A(y), (Z, O) ^= decompose(y),
// y ^= comb_to_fac(sys, Z, O), then the inverse digit preparations on Z, O.
Protocol dicke_factoradic(int n, int k);

struct IqpGate {
  std::vector<int> support;
  std::vector<Complex> matrix;
};

IqpGate iqp_diagonal(std::vector<int> support, const std::vector<Complex>& phases);
std::vector<IqpGate> random_iqp(int n, int count, std::mt19937_64& rng);
// Hadamards, the commuting gates in one parallel block, Hadamards, and a
// terminal measurement labelled "sample". Non-diagonal gates throw
// NonCommutingError.
Protocol iqp(int n, const std::vector<IqpGate>& gates, FanoutBackend backend = FanoutBackend::kSemantic);
// Outcome distribution of the same circuit applied gate by gate.
std::map<BasisKey, double> iqp_direct_distribution(int n, const std::vector<IqpGate>& gates);

}  // namespace laqcc

#endif  // LAQCC_STATEPREP_HPP_
