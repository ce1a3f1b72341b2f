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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "laqcc/error.hpp"
#include "laqcc/numbersys.hpp"

namespace laqcc::numbers {
namespace {

Bitstring bs(const std::string& s) { return bitstring_from_string(s); }

TEST(Factoradic, ToIntExamples) {
  EXPECT_EQ(factoradic_to_int(Factoradic({0, 0, 0})), 0);
  EXPECT_EQ(factoradic_to_int(Factoradic({2, 1, 0})), 5);
  EXPECT_EQ(factoradic_to_int(Factoradic({2, 1, 0})), factorial(3) - 1);
}

TEST(Factoradic, FromIntExamples) {
  EXPECT_EQ(int_to_factoradic(0, 3), Factoradic({0, 0, 0}));
  EXPECT_EQ(int_to_factoradic(5, 3), Factoradic({2, 1, 0}));
  EXPECT_EQ(int_to_factoradic(23, 4), Factoradic({3, 2, 1, 0}));
  EXPECT_THROW(int_to_factoradic(24, 4), RangeError);
  EXPECT_THROW(Factoradic({1, 1}), RangeError);
}

TEST(Factoradic, DigitSumIdentity) {
  for (int k = 0; k <= 20; ++k) {
    BigInt s = 0;
    for (int i = 0; i <= k; ++i) s += BigInt(i) * factorial(i);
    EXPECT_EQ(s, factorial(k + 1) - 1);
  }
}

TEST(Factoradic, IntBijection) {
  for (int n = 1; n <= 6; ++n) {
    BigInt m = 0;
    for_each_factoradic(n, [&](const Factoradic& y) {
      EXPECT_EQ(factoradic_to_int(y), m);
      EXPECT_EQ(int_to_factoradic(m, n), y);
      ++m;
    });
    EXPECT_EQ(m, factorial(n));
  }
}

TEST(Combinatorial, Examples) {
  CombIndex c0 = int_to_comb(0, 2, 4);
  EXPECT_EQ(c0.c, (std::vector<int>{1, 0}));
  EXPECT_EQ(to_string(comb_to_bitstring(c0, 4)), "0011");
  CombIndex c5 = int_to_comb(5, 2, 4);
  EXPECT_EQ(c5.c, (std::vector<int>{3, 2}));
  EXPECT_EQ(to_string(comb_to_bitstring(c5, 4)), "1100");
  EXPECT_THROW(int_to_comb(6, 2, 4), RangeError);
}

TEST(Combinatorial, RankMatchesBinomialSum) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (BigInt m = 0; m < binomial(n, k); ++m) {
        CombIndex c = int_to_comb(m, k, n);
        BigInt sum = 0;
        for (int i = 0; i < k; ++i) sum += binomial(c.c[static_cast<size_t>(i)], k - i);
        EXPECT_EQ(sum, m);
        EXPECT_EQ(comb_to_int(bitstring_to_comb(comb_to_bitstring(c, n))), m);
      }
    }
  }
}

TEST(AlgorithmA, Examples) {
  for (int y1 = 0; y1 <= 1; ++y1) EXPECT_EQ(to_string(fac_to_comb(Factoradic({0, y1, 0}), 1)), "100");
  EXPECT_EQ(to_string(fac_to_comb(Factoradic({2, 1, 0}), 1)), "001");
  int preimages = 0;
  for_each_factoradic(3, [&](const Factoradic& y) {
    if (to_string(fac_to_comb(y, 1)) == "100") ++preimages;
  });
  EXPECT_EQ(preimages, 2);
  for_each_factoradic(4, [&](const Factoradic& y) { EXPECT_EQ(to_string(fac_to_comb(y, 0)), "0000"); });
}

TEST(AlgorithmA, PreimagesAreUniform) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::map<Bitstring, BigInt> count;
      for_each_factoradic(n, [&](const Factoradic& y) { ++count[fac_to_comb(y, k)]; });
      EXPECT_EQ(BigInt(count.size()), binomial(n, k));
      for (const auto& [s, c] : count) {
        EXPECT_EQ(weight(s), k);
        EXPECT_EQ(c, factorial(k) * factorial(n - k));
      }
    }
  }
}

TEST(Inverse, DecomposeRoundTrips) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<std::tuple<Bitstring, Factoradic, Factoradic>> seen;
      for_each_factoradic(n, [&](const Factoradic& y) {
        Decomposition d = fac_decompose(y, k);
        EXPECT_EQ(d.s, fac_to_comb(y, k));
        EXPECT_EQ(d.z.size(), n - k);
        EXPECT_EQ(d.o.size(), k);
        EXPECT_EQ(comb_to_fac(d.s, d.z, d.o), y);
        seen.insert({d.s, d.z, d.o});
      });
      EXPECT_EQ(BigInt(seen.size()), factorial(n));
    }
  }
}

TEST(Inverse, AllZeroString) {
  for (int n = 1; n <= 5; ++n) {
    Factoradic y = comb_to_fac(Bitstring(static_cast<size_t>(n), 0), Factoradic::zero(n), Factoradic());
    EXPECT_EQ(fac_to_comb(y, 0), Bitstring(static_cast<size_t>(n), 0));
    EXPECT_EQ(y, Factoradic::zero(n));
  }
}

TEST(Birthday, Examples) {
  BirthdayBound b = birthday_bound_check(16, 4);
  EXPECT_NEAR(b.lhs, 43680.0 / 65536.0, 1e-12);
  EXPECT_NEAR(b.rhs, std::exp(-2.0), 1e-12);
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(birthday_bound_check(5, 0).holds);
  BirthdayBound one = birthday_bound_check(7, 1);
  EXPECT_NEAR(one.lhs, 1, 1e-12);
  EXPECT_GT(one.lhs, one.rhs);
  EXPECT_THROW(birthday_bound_check(4, 2), RangeError);
}

TEST(Birthday, HoldsUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 0; 2 * k < n; ++k) {
      BirthdayBound b = birthday_bound_check(n, k);
      EXPECT_TRUE(b.holds) << n << "," << k;
      // Direct product as an oracle for the left side.
      double prod = 1;
      for (int i = 0; i < k; ++i) prod *= static_cast<double>(n - i) / n;
      EXPECT_NEAR(b.lhs, prod, 1e-12);
    }
  }
}

TEST(Bitstrings, StringRoundTrip) {
  EXPECT_EQ(to_string(bs("0110")), "0110");
  EXPECT_EQ(bs("01")[0], 1);
  EXPECT_THROW(bs("012"), RangeError);
}

}  // namespace
}  // namespace laqcc::numbers
