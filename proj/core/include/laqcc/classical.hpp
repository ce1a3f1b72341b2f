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

#ifndef LAQCC_CLASSICAL_HPP_
#define LAQCC_CLASSICAL_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "laqcc/state.hpp"

namespace laqcc {

enum class DepthClass { kNC1, kAll };

const char* depth_class_name(DepthClass d);
DepthClass depth_class_from_name(const std::string& s);

inline constexpr int kMaxTruthTableInputs = 20;

// Pure function from measurement bits to control bits.
class ClassicalFunction {
 public:
  enum class Kind { kLinear, kTruthTable, kNamed };

  // out_i = constant_i xor (rows[i] . in) over GF(2).
  static ClassicalFunction linear(int inputs, std::vector<Bits> rows, Bits constant = {});
  // out = table[in], in packed with input bit 0 least significant.
  static ClassicalFunction truth_table(int inputs, int outputs, std::vector<uint64_t> table);
  // Registry-backed function; see named_function_names().
  static ClassicalFunction named(const std::string& name, const nlohmann::json& params);

  Kind kind() const { return kind_; }
  int input_width() const { return in_; }
  int output_width() const { return out_; }
  Bits eval(const Bits& in) const;

  // Linear form, when kind() == kLinear.
  const std::vector<Bits>& rows() const { return rows_; }
  const Bits& constant() const { return const_; }
  // True iff output bit i equals input bit j with no other dependence.
  bool is_identity_bit(int i, int* j) const;

  bool has_circuit_form() const;
  // Packed table of every output; throws ValidationError beyond 20 inputs.
  std::vector<uint64_t> tabulate() const;

  nlohmann::json to_json() const;
  static ClassicalFunction from_json(const nlohmann::json& j);
  std::string name() const { return name_; }

 private:
  Kind kind_ = Kind::kLinear;
  int in_ = 0;
  int out_ = 0;
  std::vector<Bits> rows_;
  Bits const_;
  std::vector<uint64_t> table_;
  std::string name_;
  nlohmann::json params_;
  std::function<Bits(const Bits&)> fn_;
};

std::vector<std::string> named_function_names();

// Lexicographically ordered permutations of 0..k-1.
std::vector<std::vector<int>> all_permutations(int k);

}  // namespace laqcc

#endif  // LAQCC_CLASSICAL_HPP_
