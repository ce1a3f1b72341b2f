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

#ifndef LAQCC_AMPLIFIER_HPP_
#define LAQCC_AMPLIFIER_HPP_

#include <cstdint>
#include <vector>

#include "laqcc/builder.hpp"

namespace laqcc {

struct AmplificationPlan {
  uint64_t N = 1;
  uint64_t m = 1;
  int J = 0;
  double beta = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  // Good-subspace probability after J iterations in the 2D model.
  double success = 1.0;
};

// Throws ValidationError unless 1 <= m <= N.
AmplificationPlan plan(uint64_t N, uint64_t m);
// Good-subspace probability of J phase-matched iterations from sin^2(beta) = m/N.
double simulate_plan(double beta, int J, double phi, double theta);

// Runs a measurement-free fragment on s in place.
void apply_fragment(SparseState& s, const Fragment& f);
// Probability that the oracle raises `flag` on prep|0>.
double good_probability(int num_qubits, const Fragment& prep, const Fragment& oracle, Qubit flag);

struct AmplifyOptions {
  // Compare good_probability against m/N and throw PlanMismatchError.
  bool verify = false;
};

// Appends prep, then J rounds of: oracle phase on the good set, then the
// reflection prep^-1, Exact_0(reg) phase, prep. The oracle XORs membership
// into `flag` and must be self-inverse; prep must only touch `reg` and
// scratch it restores.
void amplify(ProgramBuilder& b, const std::vector<Qubit>& reg, const Fragment& prep, const Fragment& oracle,
             Qubit flag, const AmplificationPlan& plan, const AmplifyOptions& options = {});

}  // namespace laqcc

#endif  // LAQCC_AMPLIFIER_HPP_
