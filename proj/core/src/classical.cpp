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

#include "laqcc/classical.hpp"

#include <algorithm>
#include <numeric>

#include "laqcc/error.hpp"

namespace laqcc {

const char* depth_class_name(DepthClass d) { return d == DepthClass::kNC1 ? "NC1" : "ALL"; }

DepthClass depth_class_from_name(const std::string& s) {
  if (s == "NC1") return DepthClass::kNC1;
  if (s == "ALL") return DepthClass::kAll;
  throw ValidationError("unknown depth class '" + s + "'");
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

struct NamedSpec {
  int in = 0;
  int out = 0;
  std::function<Bits(const Bits&)> fn;
};

NamedSpec make_named(const std::string& name, const nlohmann::json& p) {
  // k rank registers of rank_bits each (LSB first) to a one-hot vector over
  // all_permutations(k); entry perm[a] is the rank held by register a.
  if (name == "dicke_ordering_perm") {
    const int k = p.at("k").get<int>();
    const int r = p.at("rank_bits").get<int>();
    if (k < 1 || k > 8 || r < 1) throw ValidationError("dicke_ordering_perm needs 1 <= k <= 8");
    auto perms = std::make_shared<std::vector<std::vector<int>>>(all_permutations(k));
    NamedSpec s;
    s.in = k * r;
    s.out = static_cast<int>(perms->size());
    s.fn = [k, r, perms](const Bits& in) {
      std::vector<int> rank(static_cast<size_t>(k));
      for (int a = 0; a < k; ++a) {
        int v = 0;
        for (int b = 0; b < r; ++b) v |= in[static_cast<size_t>(a * r + b)] << b;
        rank[static_cast<size_t>(a)] = v;
      }
      Bits out(perms->size(), 0);
      auto it = std::find(perms->begin(), perms->end(), rank);
      if (it != perms->end()) out[static_cast<size_t>(it - perms->begin())] = 1;
      return out;
    };
    return s;
  }
  throw ValidationError("unknown classical function '" + name + "'");
}

}  // namespace

ClassicalFunction ClassicalFunction::linear(int inputs, std::vector<Bits> rows, Bits constant) {
  ClassicalFunction f;
  f.kind_ = Kind::kLinear;
  f.in_ = inputs;
  f.out_ = static_cast<int>(rows.size());
  for (const Bits& r : rows) {
    if (static_cast<int>(r.size()) != inputs) throw ValidationError("linear row width mismatch");
  }
  if (constant.empty()) constant.assign(rows.size(), 0);
  if (constant.size() != rows.size()) throw ValidationError("linear constant length mismatch");
  f.rows_ = std::move(rows);
  f.const_ = std::move(constant);
  f.name_ = "linear";
  return f;
}

ClassicalFunction ClassicalFunction::truth_table(int inputs, int outputs, std::vector<uint64_t> table) {
  if (inputs < 0 || inputs > kMaxTruthTableInputs || outputs < 1 || outputs > 64) {
    throw ValidationError("truth table widths out of range");
  }
  if (table.size() != (size_t{1} << inputs)) throw ValidationError("truth table needs 2^inputs rows");
  ClassicalFunction f;
  f.kind_ = Kind::kTruthTable;
  f.in_ = inputs;
  f.out_ = outputs;
  f.table_ = std::move(table);
  f.name_ = "truth_table";
  return f;
}

ClassicalFunction ClassicalFunction::named(const std::string& name, const nlohmann::json& params) {
  NamedSpec s;
  try {
    s = make_named(name, params);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("bad parameters for " + name + ": " + e.what());
  }
  ClassicalFunction f;
  f.kind_ = Kind::kNamed;
  f.in_ = s.in;
  f.out_ = s.out;
  f.fn_ = std::move(s.fn);
  f.name_ = name;
  f.params_ = params;
  return f;
}

Bits ClassicalFunction::eval(const Bits& in) const {
  if (static_cast<int>(in.size()) != in_) {
    throw ValidationError("classical function " + name_ + " expects " + std::to_string(in_) +
                          " inputs, got " + std::to_string(in.size()));
  }
  switch (kind_) {
    case Kind::kLinear: {
      Bits out(static_cast<size_t>(out_));
      for (int i = 0; i < out_; ++i) {
        uint8_t v = const_[static_cast<size_t>(i)];
        const Bits& r = rows_[static_cast<size_t>(i)];
        for (int j = 0; j < in_; ++j) v ^= r[static_cast<size_t>(j)] & in[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = v & 1;
      }
      return out;
    }
    case Kind::kTruthTable: {
      uint64_t idx = 0;
      for (int j = 0; j < in_; ++j) idx |= static_cast<uint64_t>(in[static_cast<size_t>(j)] & 1) << j;
      const uint64_t v = table_[idx];
      Bits out(static_cast<size_t>(out_));
      for (int i = 0; i < out_; ++i) out[static_cast<size_t>(i)] = (v >> i) & 1;
      return out;
    }
    case Kind::kNamed:
      return fn_(in);
  }
  return {};
}

bool ClassicalFunction::is_identity_bit(int i, int* j) const {
  if (kind_ != Kind::kLinear || const_[static_cast<size_t>(i)]) return false;
  const Bits& r = rows_[static_cast<size_t>(i)];
  int hit = -1;
  for (int c = 0; c < in_; ++c) {
    if (r[static_cast<size_t>(c)]) {
      if (hit >= 0) return false;
      hit = c;
    }
  }
  if (hit < 0) return false;
  if (j) *j = hit;
  return true;
}

bool ClassicalFunction::has_circuit_form() const {
  return kind_ == Kind::kLinear || in_ <= kMaxTruthTableInputs;
}

std::vector<uint64_t> ClassicalFunction::tabulate() const {
  if (in_ > kMaxTruthTableInputs) throw ValidationError("classical function too wide to tabulate");
  if (out_ > 64) throw ValidationError("classical function output too wide to tabulate");
  std::vector<uint64_t> t(size_t{1} << in_);
  Bits in(static_cast<size_t>(in_));
  for (uint64_t x = 0; x < t.size(); ++x) {
    for (int j = 0; j < in_; ++j) in[static_cast<size_t>(j)] = (x >> j) & 1;
    const Bits out = eval(in);
    uint64_t v = 0;
    for (int i = 0; i < out_; ++i) v |= static_cast<uint64_t>(out[static_cast<size_t>(i)]) << i;
    t[x] = v;
  }
  return t;
}

nlohmann::json ClassicalFunction::to_json() const {
  switch (kind_) {
    case Kind::kLinear:
      return {{"kind", "linear"}, {"inputs", in_}, {"rows", rows_}, {"constant", const_}};
    case Kind::kTruthTable:
      return {{"kind", "truth_table"}, {"inputs", in_}, {"outputs", out_}, {"table", table_}};
    case Kind::kNamed:
      return {{"kind", "named"}, {"name", name_}, {"params", params_}};
  }
  return {};
}

ClassicalFunction ClassicalFunction::from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear") {
      return linear(j.at("inputs").get<int>(), j.at("rows").get<std::vector<Bits>>(),
                    j.value("constant", Bits{}));
    }
    if (kind == "truth_table") {
      return truth_table(j.at("inputs").get<int>(), j.at("outputs").get<int>(),
                         j.at("table").get<std::vector<uint64_t>>());
    }
    if (kind == "named") return named(j.at("name").get<std::string>(), j.value("params", nlohmann::json::object()));
    throw ValidationError("unknown classical function kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed classical function: ") + e.what());
  }
}

std::vector<std::string> named_function_names() { return {"dicke_ordering_perm"}; }

}  // namespace laqcc
