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

#ifndef LAQCC_VERIFY_HPP_
#define LAQCC_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "laqcc/stateprep.hpp"

namespace laqcc {

inline constexpr double kFidelityTolerance = 1e-9;

struct BranchPolicy {
  enum class Mode { kExhaustive, kSample };
  Mode mode = Mode::kExhaustive;
  int samples = 100;
  uint64_t seed = 1;
  size_t max_frontier = size_t{1} << 14;
  // Leaves the named labels unmerged so their outcomes stay distinguishable.
  std::vector<std::string> keep_labels;
};

// "exhaustive" or "sample:N". Throws ValidationError.
BranchPolicy parse_branch_policy(const std::string& s, uint64_t seed);

struct BranchSummary {
  double fidelity = 1.0;
  double probability = 0.0;
  double leaves = 1.0;
  MeasurementRecord record;
};

struct ProtocolReport {
  std::string protocol;
  nlohmann::json params = nlohmann::json::object();
  double fidelity = 0.0;
  int width = 0;
  int64_t charged_width = 0;
  int quantum_depth = 0;
  int rounds = 0;
  int charged_rounds = 0;
  std::string classical_depth_class = "NC1";
  size_t support_max = 0;
  double branches_checked = 0.0;
  size_t classes = 0;
  double total_probability = 0.0;
  bool ancilla_clean = true;
  std::string branch_mode = "exhaustive";
  bool downgraded = false;
  uint64_t seed = 0;
  double wall_time_ms = 0.0;
  std::vector<std::string> warnings;
  nlohmann::json info = nlohmann::json::object();
  std::vector<BranchSummary> branches;
  bool passed = false;

  nlohmann::json to_json(bool with_time = true) const;
};

// Runs every branch (or seeded samples), comparing the output registers with
// the target and checking that every other qubit returns to |0>. Exhaustive
// mode falls back to sampling when the frontier exceeds max_frontier.
ProtocolReport verify_protocol(const Protocol& p, const BranchPolicy& policy);

}  // namespace laqcc

#endif  // LAQCC_VERIFY_HPP_
