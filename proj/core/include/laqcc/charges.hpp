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

#ifndef LAQCC_CHARGES_HPP_
#define LAQCC_CHARGES_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace laqcc {

// Analytic cost of one macro application. Width is
// ceil(coeff * t^t_power * n^n_power * lg(n)^log_power) with lg(n) = max(1, log2 n);
// rounds are rounds + rounds_log * ceil(log2 n).
struct ChargeEntry {
  double coeff = 1.0;
  double n_power = 1.0;
  double log_power = 0.0;
  double t_power = 0.0;
  int rounds = 0;
  int rounds_log = 0;
  int depth = 1;
};

class ChargeTable {
 public:
  static const ChargeTable& defaults();
  static ChargeTable from_json(const nlohmann::json& j);
  static ChargeTable load(const std::string& path);
  nlohmann::json to_json() const;

  const ChargeEntry& entry(const std::string& name) const;
  int64_t width(const std::string& name, int n, int t = 1) const;
  int rounds(const std::string& name, int n) const;
  int depth(const std::string& name) const;
  const std::map<std::string, ChargeEntry>& entries() const { return table_; }

 private:
  std::map<std::string, ChargeEntry> table_;
};

int ceil_log2(uint64_t n);

}  // namespace laqcc

#endif  // LAQCC_CHARGES_HPP_
