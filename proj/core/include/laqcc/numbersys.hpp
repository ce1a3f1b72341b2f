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

#ifndef LAQCC_NUMBERSYS_HPP_
#define LAQCC_NUMBERSYS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace laqcc::numbers {

using BigInt = boost::multiprecision::cpp_int;

// bits[j] is position j; position n-1 prints leftmost.
using Bitstring = std::vector<uint8_t>;

// Mixed-radix digits (y_{n-1}, ..., y_0) with 0 <= y_j <= j, stored
// most significant first.
class Factoradic {
 public:
  Factoradic() = default;
  explicit Factoradic(std::vector<int> digits_msf);
  static Factoradic zero(int n);

  int size() const { return static_cast<int>(d_.size()); }
  // y_j
  int digit(int j) const { return d_[static_cast<size_t>(size() - 1 - j)]; }
  void set_digit(int j, int v);
  const std::vector<int>& digits() const { return d_; }
  std::string to_string() const;

  friend bool operator==(const Factoradic&, const Factoradic&) = default;
  friend bool operator<(const Factoradic& a, const Factoradic& b) { return a.d_ < b.d_; }

 private:
  std::vector<int> d_;
};

// c_k > c_{k-1} > ... > c_1 >= 0, stored c_k first.
struct CombIndex {
  int k = 0;
  std::vector<int> c;
  friend bool operator==(const CombIndex&, const CombIndex&) = default;
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

BigInt factoradic_to_int(const Factoradic& y);
Factoradic int_to_factoradic(const BigInt& m, int n);

BigInt comb_to_int(const CombIndex& c);
CombIndex int_to_comb(const BigInt& m, int k, int n);
Bitstring comb_to_bitstring(const CombIndex& c, int n);
CombIndex bitstring_to_comb(const Bitstring& s);

// Weight-k string emitted from position n-1 down to 0.
Bitstring fac_to_comb(const Factoradic& y, int k);
Factoradic comb_to_fac(const Bitstring& s, const Factoradic& z, const Factoradic& o);

struct Decomposition {
  Bitstring s;
  Factoradic z;
  Factoradic o;
};
Decomposition fac_decompose(const Factoradic& y, int k);

struct BirthdayBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
// lhs = n!/(n^k (n-k)!), rhs = exp(-2k^2/n); requires 0 <= k < n/2.
// Strict for k >= 1; both sides equal 1 at k = 0.
BirthdayBound birthday_bound_check(int n, int k);
// lhs alone, valid for 0 <= k <= n.
double distinct_fraction(int n, int k);

std::string to_string(const Bitstring& s);
Bitstring bitstring_from_string(const std::string& s);
int weight(const Bitstring& s);

// Qubits needed to hold a digit in 0..j.
int digit_width(int j);

// Calls fn on every n-digit factoradic in increasing order.
template <typename Fn>
void for_each_factoradic(int n, Fn&& fn) {
  std::vector<int> d(static_cast<size_t>(n), 0);
  Factoradic y(d);
  while (true) {
    fn(y);
    int j = 0;
    while (j < n) {
      if (y.digit(j) < j) {
        y.set_digit(j, y.digit(j) + 1);
        break;
      }
      y.set_digit(j, 0);
      ++j;
    }
    if (j >= n) return;
  }
}

}  // namespace laqcc::numbers

#endif  // LAQCC_NUMBERSYS_HPP_
