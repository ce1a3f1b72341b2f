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
#include <numbers>
#include <random>
#include <set>

#include "dense.hpp"
#include "laqcc/charges.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/macros.hpp"
#include "laqcc/numbersys.hpp"

namespace laqcc {
namespace {

std::vector<Qubit> range(int n) {
  std::vector<Qubit> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

uint64_t image(const Macro& m, uint64_t x) {
  BasisKey k = BasisKey::from_uint(x);
  m.permute(k, range(m.arity()));
  return k.low64();
}

// x packs the first block LSB first, then the rest.
uint64_t field(uint64_t x, int lo, int width) { return (x >> lo) & ((uint64_t{1} << width) - 1); }

void expect_bijective_with_inverse(const MacroPtr& m) {
  const int a = m->arity();
  MacroPtr inv = m->inverse();
  std::set<uint64_t> seen;
  for (uint64_t x = 0; x < (uint64_t{1} << a); ++x) {
    const uint64_t y = image(*m, x);
    seen.insert(y);
    EXPECT_EQ(image(*inv, y), x) << m->kind();
  }
  EXPECT_EQ(seen.size(), size_t{1} << a) << m->kind();
}

TEST(Fanout, TableExamples) {
  auto f = macros::fanout(2);
  EXPECT_EQ(image(*f, 0b001), 0b111u);
  EXPECT_EQ(image(*f, 0b110), 0b110u);
}

TEST(Boolean, Examples) {
  EXPECT_EQ(field(image(*macros::or_gate(3), 0b0101), 3, 1), 1u);
  EXPECT_EQ(field(image(*macros::and_gate(3), 0b0111), 3, 1), 1u);
  EXPECT_EQ(field(image(*macros::and_gate(3), 0b0011), 3, 1), 0u);
  EXPECT_EQ(field(image(*macros::equal(3, 5), 0b0101), 3, 1), 1u);
  EXPECT_EQ(field(image(*macros::equal(3, 5), 0b0100), 3, 1), 0u);
}

TEST(Arithmetic, AddWrapsModulo) {
  // x = 3, y = 5 on 3 bits -> y = 0.
  EXPECT_EQ(field(image(*macros::add(3, 3), 3 | (5 << 3)), 3, 3), 0u);
}

TEST(Arithmetic, AddAndSubtractExhaustive) {
  for (int nx = 1; nx <= 3; ++nx) {
    for (int ny = nx; ny <= 4; ++ny) {
      auto add = macros::add(nx, ny), sub = macros::add(nx, ny, true);
      const uint64_t mod = uint64_t{1} << ny;
      for (uint64_t x = 0; x < (uint64_t{1} << nx); ++x) {
        for (uint64_t y = 0; y < mod; ++y) {
          const uint64_t in = x | (y << nx);
          EXPECT_EQ(image(*add, in), x | (((x + y) % mod) << nx));
          EXPECT_EQ(image(*sub, in), x | (((y + mod - x) % mod) << nx));
        }
      }
    }
  }
}

TEST(Counting, HammingWeightExactThresholdExamples) {
  // |1011> read position 0 first: bits 1,0,1,1 -> weight 3.
  const uint64_t x = 0b1101;
  EXPECT_EQ(field(image(*macros::hammingweight(4, 3), x), 4, 3), 3u);
  EXPECT_EQ(field(image(*macros::exact(4, 2), x), 4, 1), 0u);
  EXPECT_EQ(field(image(*macros::exact(4, 2), 0b1100), 4, 1), 1u);
  EXPECT_EQ(field(image(*macros::threshold({1, 1, 1, 1}, 2), x), 4, 1), 1u);
  // w = (3,1,1,1), t = 4 on |1001>: 3 + 1 >= 4.
  EXPECT_EQ(field(image(*macros::threshold({3, 1, 1, 1}, 4), 0b1001), 4, 1), 1u);
}

TEST(Counting, ExhaustiveAgainstPopcount) {
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t <= n; ++t) {
      auto ex = macros::exact(n, t);
      auto th = macros::threshold(std::vector<int64_t>(static_cast<size_t>(n), 1), t);
      for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        const int w = __builtin_popcountll(x);
        EXPECT_EQ(field(image(*ex, x), n, 1), w == t ? 1u : 0u);
        EXPECT_EQ(field(image(*th, x), n, 1), w >= t ? 1u : 0u);
      }
    }
  }
}

TEST(Counting, WeightedThresholdExhaustive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<int64_t> w;
    for (int i = 0; i < n; ++i) w.push_back(static_cast<int64_t>(rng() % 7) - 2);
    const int64_t t = static_cast<int64_t>(rng() % 9) - 2;
    auto m = macros::threshold(w, t);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      int64_t s = 0;
      for (int i = 0; i < n; ++i) s += ((x >> i) & 1) ? w[static_cast<size_t>(i)] : 0;
      EXPECT_EQ(field(image(*m, x), n, 1), s >= t ? 1u : 0u);
    }
  }
}

TEST(Permutations, AllReversibleMacrosAreBijections) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    expect_bijective_with_inverse(macros::fanout(n));
    expect_bijective_with_inverse(macros::or_gate(n));
    expect_bijective_with_inverse(macros::and_gate(n));
    expect_bijective_with_inverse(macros::equal(n, rng() % (uint64_t{1} << n)));
    expect_bijective_with_inverse(macros::add(n, n + 1));
    expect_bijective_with_inverse(macros::hammingweight(n, 3));
    std::vector<int> perm = range(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    expect_bijective_with_inverse(macros::permutation(perm));
    std::vector<uint64_t> table(size_t{1} << n);
    for (auto& v : table) v = rng() % 4;
    expect_bijective_with_inverse(macros::truth_table(n, 2, table));
    for (int k = 0; k <= n; ++k) {
      expect_bijective_with_inverse(macros::fac_to_comb(n, k));
      expect_bijective_with_inverse(macros::fac_decompose(n, k));
      expect_bijective_with_inverse(macros::comb_to_fac(n, k));
    }
  }
}

TEST(Permutations, PermutationMovesQubits) {
  // Output position i holds the input at perm[i].
  auto p = macros::permutation({2, 0, 1});
  EXPECT_EQ(image(*p, 0b001), 0b010u);
  EXPECT_EQ(image(*p, 0b100), 0b001u);
  EXPECT_THROW(macros::permutation({0, 0}), ValidationError);
}

TEST(NumberMaps, FacToCombMatchesNumberSystem) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto m = macros::fac_to_comb(n, k);
      const int yw = macros::factoradic_register_width(n);
      numbers::for_each_factoradic(n, [&](const numbers::Factoradic& y) {
        uint64_t in = 0;
        int pos = 0;
        for (int j = n - 1; j >= 1; --j) {
          in |= static_cast<uint64_t>(y.digit(j)) << pos;
          pos += numbers::digit_width(j);
        }
        const uint64_t s = field(image(*m, in), yw, n);
        numbers::Bitstring want = numbers::fac_to_comb(y, k);
        uint64_t wv = 0;
        for (int p = 0; p < n; ++p) wv |= static_cast<uint64_t>(want[static_cast<size_t>(p)]) << p;
        EXPECT_EQ(s, wv);
      });
    }
  }
}

TEST(DickeClean, WritesRankOrderedPositions) {
  // n = 4, k = 2, L = 2: s = 0b0110 -> idx_0 ^= 1, idx_1 ^= 2.
  auto m = macros::dicke_clean(4, 2, 2);
  const uint64_t out = image(*m, 0b0110);
  EXPECT_EQ(field(out, 4, 2), 1u);
  EXPECT_EQ(field(out, 6, 2), 2u);
  EXPECT_EQ(image(*m, 0b0111), 0b0111u);
}

TEST(Qft, OneQubitIsHadamard) {
  SparseState s(1);
  apply_macro(s, *macros::qft(1), range(1));
  EXPECT_NEAR(std::abs(s.amplitude(BasisKey::from_uint(0)) - 1 / std::sqrt(2.0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(s.amplitude(BasisKey::from_uint(1)) - 1 / std::sqrt(2.0)), 0, 1e-12);
}

TEST(Qft, ZeroToUniform) {
  SparseState s(3);
  apply_macro(s, *macros::qft(3), range(3));
  EXPECT_EQ(s.support(), 8u);
  for (const auto& [k, a] : s.amplitudes()) EXPECT_NEAR(std::abs(a - 1 / std::sqrt(8.0)), 0, 1e-12);
}

TEST(Qft, MatchesDenseDft) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 4; ++n) {
    const size_t N = size_t{1} << n;
    dense::Vec v(N);
    for (auto& a : v) a = dense::C(g(rng), g(rng));
    const double nrm = std::sqrt(dense::norm2(v));
    for (auto& a : v) a /= nrm;
    dense::Vec want(N, 0.0);
    for (size_t k = 0; k < N; ++k) {
      for (size_t j = 0; j < N; ++j) {
        want[k] += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(N)) * v[j];
      }
      want[k] /= std::sqrt(static_cast<double>(N));
    }
    SparseState s = dense::to_sparse(v, n);
    apply_macro(s, *macros::qft(n), range(n));
    dense::Vec got = dense::from_sparse(s);
    for (size_t k = 0; k < N; ++k) EXPECT_NEAR(std::abs(got[k] - want[k]), 0, 1e-9);
    apply_macro(s, *macros::qft(n, true), range(n));
    EXPECT_NEAR(dense::overlap(dense::from_sparse(s), v), 1, 1e-9);
  }
}

TEST(Diagonal, AppliesPhasesAndControls) {
  const std::vector<Complex> ph = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  SparseState s(3);
  dense::Vec v = dense::zero(3);
  for (Qubit q = 0; q < 3; ++q) {
    s.apply(gates::h(), std::vector<Qubit>{q});
    dense::apply(v, dense::h(), {q});
  }
  apply_macro(s, *macros::diagonal(ph), std::vector<Qubit>{0, 1}, std::vector<Qubit>{2});
  dense::Mat d(16, 0.0);
  for (size_t i = 0; i < 4; ++i) d[i * 5] = ph[i];
  dense::apply(v, d, {0, 1}, {2});
  EXPECT_NEAR(dense::overlap(dense::from_sparse(s), v), 1, 1e-12);
  EXPECT_THROW(macros::diagonal({1.0, 2.0}), ValidationError);
}

TEST(Serialization, MakeMacroRoundTrips) {
  std::vector<MacroPtr> ms = {macros::fanout(3),        macros::equal(3, 6),      macros::add(2, 3, true),
                              macros::threshold({2, 1}, 2), macros::qft(2),       macros::fac_to_comb(4, 2),
                              macros::dicke_clean(4, 2, 2), macros::permutation({1, 0, 2})};
  for (const auto& m : ms) {
    MacroPtr r = make_macro(m->kind(), m->params());
    EXPECT_EQ(r->kind(), m->kind());
    EXPECT_EQ(r->params(), m->params());
  }
  EXPECT_THROW(make_macro("nonsense", {}), ValidationError);
}

TEST(Charges, TableFormula) {
  const ChargeTable& t = ChargeTable::defaults();
  EXPECT_EQ(t.rounds("fac_to_comb", 8), 3);
  EXPECT_EQ(t.rounds("fanout", 100), 1);
  EXPECT_GE(t.width("or", 8), 8);
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
  ChargeTable r = ChargeTable::from_json(t.to_json());
  EXPECT_EQ(r.to_json(), t.to_json());
}

}  // namespace
}  // namespace laqcc
