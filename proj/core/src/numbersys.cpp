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

#include "laqcc/numbersys.hpp"

#include <cmath>

#include "laqcc/error.hpp"

namespace laqcc::numbers {

Factoradic::Factoradic(std::vector<int> digits_msf) : d_(std::move(digits_msf)) {
  for (int j = 0; j < size(); ++j) {
    const int v = digit(j);
    if (v < 0 || v > j) {
      throw RangeError("factoradic digit y_" + std::to_string(j) + " = " +
                       std::to_string(v) + " outside [0, " + std::to_string(j) + "]");
    }
  }
}

Factoradic Factoradic::zero(int n) {
  if (n < 0) throw RangeError("negative factoradic length");
  return Factoradic(std::vector<int>(static_cast<size_t>(n), 0));
}

void Factoradic::set_digit(int j, int v) {
  if (j < 0 || j >= size()) throw RangeError("factoradic digit index out of range");
  if (v < 0 || v > j) throw RangeError("factoradic digit value out of range");
  d_[static_cast<size_t>(size() - 1 - j)] = v;
}

std::string Factoradic::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d_[i]);
  }
  return s + ")";
}

BigInt factorial(int n) {
  if (n < 0) throw RangeError("factorial of negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factoradic_to_int(const Factoradic& y) {
  BigInt m = 0;
  BigInt f = 1;
  for (int j = 0; j < y.size(); ++j) {
    if (j > 0) f *= j;
    m += f * y.digit(j);
  }
  return m;
}

Factoradic int_to_factoradic(const BigInt& m, int n) {
  if (n < 0 || m < 0 || m >= factorial(n)) {
    throw RangeError("integer outside [0, n!) for factoradic conversion");
  }
  Factoradic y = Factoradic::zero(n);
  BigInt rest = m;
  for (int j = n - 1; j >= 0; --j) {
    const BigInt f = factorial(j);
    y.set_digit(j, static_cast<int>(rest / f));
    rest %= f;
  }
  return y;
}

BigInt comb_to_int(const CombIndex& c) {
  if (static_cast<int>(c.c.size()) != c.k) throw RangeError("CombIndex length differs from k");
  BigInt m = 0;
  for (int i = 0; i < c.k; ++i) {
    const int ci = c.c[static_cast<size_t>(i)];
    if (ci < 0) throw RangeError("CombIndex entries must be non-negative");
    if (i > 0 && ci >= c.c[static_cast<size_t>(i - 1)]) {
      throw RangeError("CombIndex must be strictly decreasing");
    }
    m += binomial(ci, c.k - i);
  }
  return m;
}

CombIndex int_to_comb(const BigInt& m, int k, int n) {
  if (k < 0 || k > n || m < 0 || m >= binomial(n, k)) {
    throw RangeError("integer outside [0, C(n,k)) for combinatorial conversion");
  }
  CombIndex out{k, {}};
  BigInt rest = m;
  int bound = n;
  for (int i = k; i >= 1; --i) {
    int c = bound - 1;
    while (binomial(c, i) > rest) --c;
    out.c.push_back(c);
    rest -= binomial(c, i);
    bound = c;
  }
  return out;
}

Bitstring comb_to_bitstring(const CombIndex& c, int n) {
  comb_to_int(c);
  Bitstring s(static_cast<size_t>(n), 0);
  for (int p : c.c) {
    if (p >= n) throw RangeError("CombIndex position exceeds string length");
    s[static_cast<size_t>(p)] = 1;
  }
  return s;
}

CombIndex bitstring_to_comb(const Bitstring& s) {
  CombIndex c;
  for (int p = static_cast<int>(s.size()) - 1; p >= 0; --p) {
    if (s[static_cast<size_t>(p)]) c.c.push_back(p);
  }
  c.k = static_cast<int>(c.c.size());
  return c;
}

Bitstring fac_to_comb(const Factoradic& y, int k) {
  const int n = y.size();
  if (k < 0 || k > n) throw RangeError("weight outside [0, n]");
  Bitstring s(static_cast<size_t>(n), 0);
  int h = 0;
  for (int p = n - 1; p >= 0; --p) {
    if (y.digit(p) < k - h) {
      s[static_cast<size_t>(p)] = 1;
      ++h;
    }
  }
  return s;
}

Factoradic comb_to_fac(const Bitstring& s, const Factoradic& z, const Factoradic& o) {
  const int n = static_cast<int>(s.size());
  const int k = weight(s);
  if (o.size() != k || z.size() != n - k) {
    throw RangeError("Z and O lengths must be n-k and k");
  }
  Factoradic y = Factoradic::zero(n);
  int h = 0;
  int zeros = 0;
  for (int p = n - 1; p >= 0; --p) {
    if (s[static_cast<size_t>(p)]) {
      y.set_digit(p, o.digit(k - h - 1));
      ++h;
    } else {
      y.set_digit(p, k - h + z.digit(n - k - 1 - zeros));
      ++zeros;
    }
  }
  return y;
}

Decomposition fac_decompose(const Factoradic& y, int k) {
  const int n = y.size();
  Decomposition d{fac_to_comb(y, k), Factoradic::zero(n - k), Factoradic::zero(k)};
  int h = 0;
  int zeros = 0;
  for (int p = n - 1; p >= 0; --p) {
    if (d.s[static_cast<size_t>(p)]) {
      d.o.set_digit(k - h - 1, y.digit(p));
      ++h;
    } else {
      d.z.set_digit(n - k - 1 - zeros, y.digit(p) - (k - h));
      ++zeros;
    }
  }
  return d;
}

double distinct_fraction(int n, int k) {
  if (n <= 0 || k < 0 || k > n) throw RangeError("need 0 <= k <= n, n >= 1");
  double lg = 0.0;
  for (int i = 0; i < k; ++i) lg += std::log(static_cast<double>(n - i) / n);
  return std::exp(lg);
}

BirthdayBound birthday_bound_check(int n, int k) {
  if (n <= 0 || k < 0 || 2 * k >= n) throw RangeError("birthday bound requires 0 <= k < n/2");
  BirthdayBound b;
  b.lhs = distinct_fraction(n, k);
  b.rhs = std::exp(-2.0 * k * k / n);
  b.holds = k == 0 ? b.lhs >= b.rhs : b.lhs > b.rhs;
  return b;
}

std::string to_string(const Bitstring& s) {
  std::string out(s.size(), '0');
  for (size_t p = 0; p < s.size(); ++p) {
    if (s[p]) out[s.size() - 1 - p] = '1';
  }
  return out;
}

Bitstring bitstring_from_string(const std::string& s) {
  Bitstring b(s.size(), 0);
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[s.size() - 1 - i];
    if (c != '0' && c != '1') throw RangeError("bitstring must contain only 0/1");
    b[i] = c == '1';
  }
  return b;
}

int weight(const Bitstring& s) {
  int w = 0;
  for (uint8_t v : s) w += v != 0;
  return w;
}

int digit_width(int j) {
  int w = 0;
  while ((1 << w) < j + 1) ++w;
  return w;
}

}  // namespace laqcc::numbers
