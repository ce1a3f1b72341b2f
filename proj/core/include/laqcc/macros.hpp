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

#ifndef LAQCC_MACROS_HPP_
#define LAQCC_MACROS_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "laqcc/basis.hpp"
#include "laqcc/state.hpp"

namespace laqcc {

class Macro;
using MacroPtr = std::shared_ptr<const Macro>;

// A multi-qubit gate executed directly on basis states. Classical-reversible
// macros act as basis permutations; the rest expand into superpositions.
class Macro {
 public:
  virtual ~Macro() = default;

  virtual std::string kind() const = 0;
  virtual int arity() const = 0;
  virtual bool is_permutation() const { return true; }
  // Image of `key` under the macro acting on `qubits` (size arity()).
  virtual void permute(BasisKey& key, std::span<const Qubit> qubits) const;
  virtual void expand(const BasisKey& key, std::span<const Qubit> qubits,
                      std::vector<std::pair<BasisKey, Complex>>& out) const;
  virtual MacroPtr inverse() const = 0;
  virtual nlohmann::json params() const = 0;

  // Charge table entry and the size/threshold fed to its formula.
  virtual std::string charge_name() const { return kind(); }
  virtual int charge_size() const { return arity(); }
  virtual int charge_t() const { return 1; }
};

// Applies m (optionally controlled) in place.
void apply_macro(SparseState& s, const Macro& m, std::span<const Qubit> qubits,
                 std::span<const Qubit> controls = {});

// Rebuilds a macro from kind and params. Throws ValidationError.
MacroPtr make_macro(const std::string& kind, const nlohmann::json& params);

namespace macros {

// [control, t_1..t_m]: t_i ^= control.
MacroPtr fanout(int targets);
// [y_0..y_{n-1}] -> output position i holds the input at perm[i].
MacroPtr permutation(std::vector<int> perm);
// [y_0..y_{n-1}, out]
MacroPtr or_gate(int n);
MacroPtr and_gate(int n);
// [j (n bits, LSB first), out]: out ^= [j == value].
MacroPtr equal(int n, uint64_t value);
// [x (nx), y (ny)]: y = y +/- x mod 2^ny.
MacroPtr add(int nx, int ny, bool subtract = false);
// [x (n), out (w)]: out ^= |x| mod 2^w.
MacroPtr hammingweight(int n, int w);
// [x (n), out]: out ^= [|x| == t].
MacroPtr exact(int n, int t);
// [x (n), out]: out ^= [sum_i w_i x_i >= t].
MacroPtr threshold(std::vector<int64_t> weights, int64_t t);
// Exact QFT, x LSB first.
MacroPtr qft(int n, bool inverse = false);
// Diagonal unitary with phases[local index].
MacroPtr diagonal(std::vector<Complex> phases);
// [in (nin), out (nout)]: out ^= table[in].
MacroPtr truth_table(int nin, int nout, std::vector<uint64_t> table);

// Number-system register maps (XOR form, self-inverse); digit j of a
// factoradic occupies numbers::digit_width(j) qubits, digits y_{n-1}..y_1 in
// that order, LSB first inside each digit.
// [y, s (n)]: s ^= A(y).
MacroPtr fac_to_comb(int n, int k);
// [y, Z, O]: (Z, O) ^= decompose(y).
MacroPtr fac_decompose(int n, int k);
// [s (n), Z, O, y]: y ^= comb_to_fac(s, Z, O).
MacroPtr comb_to_fac(int n, int k);
// [s (n), idx_0..idx_{k-1} (L bits each)]: idx_m ^= position of the m-th one
// of s counted from position 0 (rank order), for |s| = k; identity otherwise.
MacroPtr dicke_clean(int n, int k, int index_bits);

// Qubit count of a packed factoradic register of length n.
int factoradic_register_width(int n);

}  // namespace macros

}  // namespace laqcc

#endif  // LAQCC_MACROS_HPP_
