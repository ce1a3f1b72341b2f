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

#include "laqcc/charges.hpp"

#include <cmath>
#include <fstream>

#include "laqcc/error.hpp"

namespace laqcc {

namespace {

ChargeTable build_defaults() {
  // Mirrors data/charge_table.json.
  nlohmann::json j = {
      {"add", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 0.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"and", {{"coeff", 2.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 6}}},
      {"comb_to_fac", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"diagonal", {{"coeff", 1.0}, {"n_power", 1.0}, {"log_power", 0.0}, {"t_power", 0.0}, {"rounds", 0}, {"rounds_log", 0}, {"depth", 1}}},
      {"dicke_clean", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"equal", {{"coeff", 2.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 6}}},
      {"exact", {{"coeff", 1.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"fac_decompose", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"fac_to_comb", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 0}, {"rounds_log", 1}, {"depth", 8}}},
      {"fanout", {{"coeff", 2.0}, {"n_power", 1.0}, {"log_power", 0.0}, {"t_power", 0.0}, {"rounds", 1}, {"rounds_log", 0}, {"depth", 4}}},
      {"hammingweight", {{"coeff", 1.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"or", {{"coeff", 2.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 6}}},
      {"permutation", {{"coeff", 1.0}, {"n_power", 2.0}, {"log_power", 0.0}, {"t_power", 0.0}, {"rounds", 1}, {"rounds_log", 0}, {"depth", 4}}},
      {"qft", {{"coeff", 1.0}, {"n_power", 3.0}, {"log_power", 1.0}, {"t_power", 0.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"threshold", {{"coeff", 1.0}, {"n_power", 1.0}, {"log_power", 1.0}, {"t_power", 1.0}, {"rounds", 2}, {"rounds_log", 0}, {"depth", 8}}},
      {"truth_table", {{"coeff", 1.0}, {"n_power", 1.0}, {"log_power", 0.0}, {"t_power", 0.0}, {"rounds", 1}, {"rounds_log", 0}, {"depth", 4}}},
  };
  return ChargeTable::from_json(j);
}

}  // namespace

int ceil_log2(uint64_t n) {
  int r = 0;
  while ((uint64_t{1} << r) < n) ++r;
  return r;
}

const ChargeTable& ChargeTable::defaults() {
  static const ChargeTable table = build_defaults();
  return table;
}

ChargeTable ChargeTable::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("charge table must be a JSON object");
  ChargeTable t;
  for (const auto& [name, v] : j.items()) {
    ChargeEntry e;
    e.coeff = v.value("coeff", 1.0);
    e.n_power = v.value("n_power", 1.0);
    e.log_power = v.value("log_power", 0.0);
    e.t_power = v.value("t_power", 0.0);
    e.rounds = v.value("rounds", 0);
    e.rounds_log = v.value("rounds_log", 0);
    e.depth = v.value("depth", 1);
    if (e.coeff < 0 || e.rounds < 0 || e.rounds_log < 0 || e.depth < 0) {
      throw ValidationError("negative charge for " + name);
    }
    t.table_[name] = e;
  }
  return t;
}

ChargeTable ChargeTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open charge table " + path);
  return from_json(nlohmann::json::parse(in));
}

nlohmann::json ChargeTable::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, e] : table_) {
    j[name] = {{"coeff", e.coeff},     {"n_power", e.n_power},
               {"log_power", e.log_power}, {"t_power", e.t_power},
               {"rounds", e.rounds},   {"rounds_log", e.rounds_log},
               {"depth", e.depth}};
  }
  return j;
}

const ChargeEntry& ChargeTable::entry(const std::string& name) const {
  auto it = table_.find(name);
  if (it == table_.end()) throw ValidationError("no charge entry for " + name);
  return it->second;
}

int64_t ChargeTable::width(const std::string& name, int n, int t) const {
  const ChargeEntry& e = entry(name);
  if (n <= 0) return 0;
  const double lg = std::max(1.0, std::log2(static_cast<double>(n)));
  const double w = e.coeff * std::pow(std::max(1, t), e.t_power) *
                   std::pow(n, e.n_power) * std::pow(lg, e.log_power);
  return static_cast<int64_t>(std::ceil(w - 1e-9));
}

int ChargeTable::rounds(const std::string& name, int n) const {
  const ChargeEntry& e = entry(name);
  return e.rounds + e.rounds_log * ceil_log2(static_cast<uint64_t>(std::max(1, n)));
}

int ChargeTable::depth(const std::string& name) const { return entry(name).depth; }

}  // namespace laqcc
