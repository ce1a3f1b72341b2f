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

#include "laqcc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "laqcc/error.hpp"

namespace laqcc {

namespace {

// Integral counts print as integers; beyond 2^63 the real value is kept.
nlohmann::json count_json(double v) {
  if (v >= 0 && v < 9.2e18 && v == std::floor(v)) return static_cast<uint64_t>(v);
  return v;
}

}  // namespace

BranchPolicy parse_branch_policy(const std::string& s, uint64_t seed) {
  BranchPolicy p;
  p.seed = seed;
  if (s == "exhaustive") return p;
  if (s.rfind("sample:", 0) == 0) {
    const std::string num = s.substr(7);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("sample count must be a positive integer");
    }
    p.mode = BranchPolicy::Mode::kSample;
    p.samples = std::stoi(num);
    if (p.samples < 1) throw ValidationError("sample count must be a positive integer");
    return p;
  }
  throw ValidationError("branch policy must be 'exhaustive' or 'sample:N'");
}

nlohmann::json ProtocolReport::to_json(bool with_time) const {
  nlohmann::json j = {{"protocol", protocol},
                      {"fidelity", fidelity},
                      {"width", width},
                      {"charged_width", charged_width},
                      {"quantum_depth", quantum_depth},
                      {"rounds", rounds},
                      {"charged_rounds", charged_rounds},
                      {"classical_depth_class", classical_depth_class},
                      {"support_max", support_max},
                      {"branches_checked", count_json(branches_checked)},
                      {"branch_classes", classes},
                      {"branch_mode", branch_mode},
                      {"total_probability", total_probability},
                      {"ancilla_clean", ancilla_clean},
                      {"seed", seed},
                      {"passed", passed}};
  for (const char* key : {"n", "k", "q"}) j[key] = params.contains(key) ? params[key] : nlohmann::json(nullptr);
  if (downgraded) j["downgraded"] = true;
  if (!warnings.empty()) j["warnings"] = warnings;
  if (!info.empty()) j["info"] = info;
  if (with_time) j["wall_time_ms"] = wall_time_ms;
  return j;
}

namespace {

struct Check {
  double fidelity;
  bool clean;
};

Check check_state(const Protocol& p, const SparseState& s, const std::vector<Qubit>& others) {
  Check c;
  c.fidelity = p.target.num_qubits() == 0 ? 1.0 : std::min(1.0, reduced_fidelity(s, p.outputs, p.target));
  c.clean = qubits_clear(s, others);
  return c;
}

}  // namespace

ProtocolReport verify_protocol(const Protocol& p, const BranchPolicy& policy) {
  const auto start = std::chrono::steady_clock::now();
  ProtocolReport r;
  r.protocol = p.program.name();
  r.seed = policy.seed;
  r.info = p.info;
  for (const char* key : {"n", "k", "q"}) {
    if (p.info.contains(key)) r.params[key] = p.info[key];
  }
  const ResourceProfile res = resources(p.program);
  r.width = res.width;
  r.charged_width = res.charged_width;
  r.quantum_depth = res.quantum_depth;
  r.rounds = res.rounds;
  r.charged_rounds = res.charged_rounds;
  r.classical_depth_class = depth_class_name(res.classical_depth_class);

  std::set<Qubit> outs(p.outputs.begin(), p.outputs.end());
  std::vector<Qubit> others;
  for (Qubit q = 0; q < p.program.num_qubits(); ++q) {
    if (!outs.count(q)) others.push_back(q);
  }

  double fid = 1.0;
  bool clean = true;
  bool sample = policy.mode == BranchPolicy::Mode::kSample;
  if (!sample) {
    EnumerationOptions opt;
    opt.max_frontier = policy.max_frontier;
    opt.keep_labels.insert(policy.keep_labels.begin(), policy.keep_labels.end());
    try {
      EnumerationResult e = enumerate_branches(p.program, opt);
      for (const auto& cls : e.classes) {
        Check c = check_state(p, cls.state, others);
        fid = std::min(fid, c.fidelity);
        clean = clean && c.clean;
        r.branches.push_back({c.fidelity, cls.probability, cls.leaves, cls.record});
      }
      r.branches_checked = e.leaves;
      r.classes = e.classes.size();
      r.support_max = e.support_max;
      r.total_probability = e.total_probability;
    } catch (const RangeError& ex) {
      sample = true;
      r.downgraded = true;
      r.warnings.push_back(std::string("exhaustive enumeration downgraded to sampling: ") + ex.what());
    }
  }
  if (sample) {
    r.branch_mode = "sample";
    r.branches.clear();
    const int count = policy.mode == BranchPolicy::Mode::kSample ? policy.samples : 100;
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
      ExecutionResult ex = execute(p.program, ExecutionPolicy::seeded(policy.seed + static_cast<uint64_t>(i)));
      Check c = check_state(p, ex.state, others);
      fid = std::min(fid, c.fidelity);
      clean = clean && c.clean;
      const double prob = record_probability(ex.record);
      r.branches.push_back({c.fidelity, prob, 1.0, ex.record});
      r.support_max = std::max(r.support_max, ex.support_max);
      total += 1.0;
    }
    r.branches_checked = total;
    r.classes = static_cast<size_t>(count);
    r.total_probability = 1.0;
  }
  r.fidelity = fid;
  r.ancilla_clean = clean;
  r.passed = fid >= 1.0 - kFidelityTolerance && clean && std::abs(r.total_probability - 1.0) <= 1e-9;
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace laqcc
