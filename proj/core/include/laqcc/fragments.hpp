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

#ifndef LAQCC_FRAGMENTS_HPP_
#define LAQCC_FRAGMENTS_HPP_

#include <optional>
#include <vector>

#include "laqcc/builder.hpp"

namespace laqcc {

enum class FanoutBackend { kSemantic, kGadget };

const char* backend_name(FanoutBackend b);

namespace frag {

// targets ^= control. The gadget prepares a cat state with parity checks,
// measures, and applies one round of Pauli corrections.
void fanout(ProgramBuilder& b, Qubit control, const std::vector<Qubit>& targets,
            FanoutBackend backend = FanoutBackend::kSemantic);

struct FanoutTask {
  Qubit control;
  std::vector<Qubit> targets;
};
// Several disjoint fanouts side by side. Gadget ancillas are all acquired
// up front so the corrections share one round.
void fanout_parallel(ProgramBuilder& b, const std::vector<FanoutTask>& tasks,
                     FanoutBackend backend = FanoutBackend::kSemantic);

void or_n(ProgramBuilder& b, const std::vector<Qubit>& inputs, Qubit out);
void and_n(ProgramBuilder& b, const std::vector<Qubit>& inputs, Qubit out);
void equal_i(ProgramBuilder& b, const std::vector<Qubit>& reg, uint64_t value, Qubit out);

// y = y +/- x mod 2^n.
void add_n(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y);
void sub_n(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y);
// out ^= [x == y] via subtract, Equal_0, re-add.
void equality(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y, Qubit out);
// out ^= [x > y] via subtraction modulo 2^{n+1} into one extra high bit.
void greaterthan(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y, Qubit out);

int hammingweight_width(int n);
// out (hammingweight_width(|x|) bits) ^= |x|.
void hammingweight(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& out);
// out ^= [|x| == t] through a Hamming-weight scratch register.
void exact_t(ProgramBuilder& b, const std::vector<Qubit>& x, int t, Qubit out);
// out ^= [|x| >= t] as the OR of exact_j for j >= t.
void threshold_t(ProgramBuilder& b, const std::vector<Qubit>& x, int t, Qubit out);
// out ^= [sum_i w_i x_i >= t]; weights and t must be integers.
void weighted_threshold(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<double>& weights,
                        double t, Qubit out);

void qft(ProgramBuilder& b, const std::vector<Qubit>& reg, bool inverse = false);

// A gate on target[support[i]] with dense matrix (local bit i = support[i]),
// optionally controlled by a qubit outside the target register.
struct CommutingGate {
  std::vector<int> support;
  std::vector<Complex> matrix;
  std::optional<Qubit> control;
};

// Applies prod_i U_i in a single layer of diagonal gates: rotate by the
// per-qubit diagonalizer T, fan each qubit out to one copy per user, apply
// every T U_i T^dag on its own copies, undo the fanout and rotation.
// Throws NonCommutingError if some T U_i T^dag is not diagonal.
void parallelize_commuting(ProgramBuilder& b, const std::vector<Qubit>& target,
                           const std::vector<CommutingGate>& gates, const std::vector<Unitary>& diagonalizer,
                           FanoutBackend backend = FanoutBackend::kSemantic);

}  // namespace frag
}  // namespace laqcc

#endif  // LAQCC_FRAGMENTS_HPP_
