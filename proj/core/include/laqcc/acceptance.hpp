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

#ifndef LAQCC_ACCEPTANCE_HPP_
#define LAQCC_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace laqcc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  // Upper bound on n for the W-state and Dicke small-k criteria.
  int max_n = 8;
  uint64_t seed = 2026;
};

inline constexpr int kAcceptanceCriteria = 10;
// Multiplier c in the charged-rounds bound c * max(1, ceil(log2 n)).
inline constexpr int kFactoradicRoundConstant = 16;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);

}  // namespace laqcc

#endif  // LAQCC_ACCEPTANCE_HPP_
