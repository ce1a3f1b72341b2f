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
#include <functional>
#include <random>

#include "dense.hpp"
#include "laqcc/builder.hpp"
#include "laqcc/error.hpp"
#include "laqcc/fragments.hpp"
#include "laqcc/gates.hpp"

namespace laqcc {
namespace {

using Body = std::function<void(ProgramBuilder&, const std::vector<Qubit>&, Qubit)>;

struct BasisRun {
  uint64_t in = 0;
  int out = 0;
  bool scratch_clean = true;
};

// Registers: in (n), out (1), then scratch. Runs on the basis input x.
BasisRun run_basis(int n, const Body& body, uint64_t x) {
  ProgramBuilder b;
  auto in = b.allocate("in", n, RegisterRole::kSystem);
  auto out = b.allocate("out", 1, RegisterRole::kFlag);
  body(b, in, out[0]);
  LaqccProgram p = b.build("fragment");
  ExecutionResult r =
      execute(p, ExecutionPolicy::seeded(0), SparseState::basis(p.num_qubits(), BasisKey::from_uint(x)));
  EXPECT_EQ(r.state.support(), 1u);
  const BasisKey k = r.state.amplitudes().begin()->first;
  BasisRun res;
  res.in = k.extract(in);
  res.out = k.test(out[0]) ? 1 : 0;
  std::vector<Qubit> scratch;
  for (Qubit q = n + 1; q < p.num_qubits(); ++q) scratch.push_back(q);
  res.scratch_clean = qubits_clear(r.state, scratch);
  return res;
}

int two_reg(int n, uint64_t x, uint64_t y, bool gt) {
  Body body = [&](ProgramBuilder& b, const std::vector<Qubit>& in, Qubit out) {
    std::vector<Qubit> a(in.begin(), in.begin() + n), c(in.begin() + n, in.end());
    if (gt) {
      frag::greaterthan(b, a, c, out);
    } else {
      frag::equality(b, a, c, out);
    }
  };
  BasisRun r = run_basis(2 * n, body, x | (y << n));
  EXPECT_EQ(r.in, x | (y << n));
  EXPECT_TRUE(r.scratch_clean);
  return r.out;
}

TEST(Equality, Examples) {
  EXPECT_EQ(two_reg(3, 6, 6, false), 1);
  EXPECT_EQ(two_reg(3, 6, 2, false), 0);
}

TEST(Greaterthan, Examples) {
  EXPECT_EQ(two_reg(3, 5, 3, true), 1);
  EXPECT_EQ(two_reg(3, 3, 3, true), 0);
  EXPECT_EQ(two_reg(3, 2, 7, true), 0);
}

TEST(Comparators, ExhaustiveThreeBits) {
  for (uint64_t x = 0; x < 8; ++x) {
    for (uint64_t y = 0; y < 8; ++y) {
      EXPECT_EQ(two_reg(3, x, y, false), x == y ? 1 : 0);
      EXPECT_EQ(two_reg(3, x, y, true), x > y ? 1 : 0);
    }
  }
}

TEST(ExactThreshold, ExhaustiveAndScratchRestored) {
  for (int n = 1; n <= 4; ++n) {
    for (int t = -1; t <= n + 1; ++t) {
      for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        const int w = __builtin_popcountll(x);
        BasisRun e = run_basis(n, [&](ProgramBuilder& b, const std::vector<Qubit>& in, Qubit o) { frag::exact_t(b, in, t, o); }, x);
        BasisRun h = run_basis(n, [&](ProgramBuilder& b, const std::vector<Qubit>& in, Qubit o) { frag::threshold_t(b, in, t, o); }, x);
        EXPECT_EQ(e.out, w == t ? 1 : 0);
        EXPECT_EQ(h.out, w >= t ? 1 : 0);
        EXPECT_TRUE(e.scratch_clean && h.scratch_clean);
        EXPECT_EQ(e.in, x);
      }
    }
  }
}

TEST(WeightedThreshold, RejectsNonIntegerWeights) {
  ProgramBuilder b;
  auto in = b.allocate("in", 2, RegisterRole::kSystem);
  auto out = b.allocate("out", 1, RegisterRole::kFlag);
  EXPECT_THROW(frag::weighted_threshold(b, in, {1.5, 1.0}, 1.0, out[0]), ValidationError);
  frag::weighted_threshold(b, in, {3.0, 1.0}, 4.0, out[0]);
}

TEST(Fanout, GadgetCopiesOneIntoTargets) {
  for (auto be : {FanoutBackend::kSemantic, FanoutBackend::kGadget}) {
    ProgramBuilder b;
    auto q = b.allocate("system", 3, RegisterRole::kSystem);
    frag::fanout(b, q[0], {q[1], q[2]}, be);
    LaqccProgram p = b.build("fanout");
    EnumerationResult e =
        enumerate_branches(p, SparseState::basis(p.num_qubits(), BasisKey::from_uint(1)));
    for (const auto& c : e.classes) {
      auto m = marginal(c.state, q);
      ASSERT_EQ(m.size(), 1u);
      EXPECT_EQ(m.begin()->first.low64(), 0b111u);
    }
  }
}

TEST(Fanout, GadgetMatchesSemanticOnEveryBranch) {
  for (int m = 1; m <= 4; ++m) {
    ProgramBuilder sb, gb;
    auto sq = sb.allocate("system", m + 1, RegisterRole::kSystem);
    auto gq = gb.allocate("system", m + 1, RegisterRole::kSystem);
    frag::fanout(sb, sq[0], {sq.begin() + 1, sq.end()}, FanoutBackend::kSemantic);
    frag::fanout(gb, gq[0], {gq.begin() + 1, gq.end()}, FanoutBackend::kGadget);
    LaqccProgram sp = sb.build("s"), gp = gb.build("g");
    SparseState si(sp.num_qubits()), gi(gp.num_qubits());
    si.apply(gates::h(), std::vector<Qubit>{0});
    gi.apply(gates::h(), std::vector<Qubit>{0});
    SparseState want = execute(sp, ExecutionPolicy::seeded(0), si).state;
    EnumerationOptions o;
    o.merge = false;
    EnumerationResult e = enumerate_branches(gp, gi, o);
    EXPECT_EQ(e.classes.size(), size_t{1} << (2 * m));
    std::vector<Qubit> anc;
    for (Qubit q = m + 1; q < gp.num_qubits(); ++q) anc.push_back(q);
    for (const auto& c : e.classes) {
      EXPECT_NEAR(reduced_fidelity(c.state, gq, want), 1, 1e-9);
      EXPECT_TRUE(qubits_clear(c.state, anc));
    }
    EXPECT_EQ(resources(gp).rounds, 1);
  }
}

TEST(Fanout, ParallelTasksShareOneRound) {
  ProgramBuilder b;
  auto q = b.allocate("system", 6, RegisterRole::kSystem);
  frag::fanout_parallel(b, {{q[0], {q[1], q[2]}}, {q[3], {q[4], q[5]}}}, FanoutBackend::kGadget);
  EXPECT_EQ(resources(b.build("p")).rounds, 1);
  ProgramBuilder bad;
  auto r = bad.allocate("system", 3, RegisterRole::kSystem);
  EXPECT_THROW(frag::fanout(bad, r[0], {r[0], r[1]}), RegisterOverlapError);
}

// Dense product of the gates, independent of the fragment.
dense::Vec sequential(const dense::Vec& v0, const std::vector<frag::CommutingGate>& gs) {
  dense::Vec v = v0;
  for (const auto& g : gs) {
    std::vector<int> ctrl;
    if (g.control) ctrl.push_back(*g.control);
    dense::apply(v, g.matrix, g.support, ctrl);
  }
  return v;
}

void expect_parallel_matches(int n, int extra, const std::vector<frag::CommutingGate>& gs,
                             const std::vector<Unitary>& diag, FanoutBackend be, bool all_basis) {
  ProgramBuilder b;
  auto reg = b.allocate("system", n + extra, RegisterRole::kSystem);
  frag::parallelize_commuting(b, {reg.begin(), reg.begin() + n}, gs, diag, be);
  LaqccProgram p = b.build("parallel");
  const int total = n + extra;
  std::vector<dense::Vec> inputs;
  if (all_basis) {
    for (uint64_t x = 0; x < (uint64_t{1} << total); ++x) inputs.push_back(dense::basis(total, x));
  } else {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    dense::Vec v(size_t{1} << total);
    for (auto& a : v) a = dense::C(g(rng), g(rng));
    const double nrm = std::sqrt(dense::norm2(v));
    for (auto& a : v) a /= nrm;
    inputs.push_back(v);
  }
  for (const auto& v : inputs) {
    dense::Vec want = sequential(v, gs);
    SparseState init = dense::to_sparse(v, total);
    init.widen(p.num_qubits());
    EnumerationResult e = enumerate_branches(p, init);
    SparseState target = dense::to_sparse(want, total);
    for (const auto& c : e.classes) EXPECT_NEAR(reduced_fidelity(c.state, reg, target), 1, 1e-9);
  }
}

dense::Mat cz() { return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}; }

TEST(ParallelizeCommuting, TwoControlledZOnDisjointControls) {
  // CZ(0,2) and CZ(1,3) on 4 qubits, over all 16 basis states.
  std::vector<frag::CommutingGate> gs = {{{0, 2}, cz(), std::nullopt}, {{1, 3}, cz(), std::nullopt}};
  for (auto be : {FanoutBackend::kSemantic, FanoutBackend::kGadget}) expect_parallel_matches(4, 0, gs, {}, be, true);
}

TEST(ParallelizeCommuting, SingleGatePassthrough) {
  std::vector<frag::CommutingGate> gs = {{{0}, dense::z(), std::nullopt}};
  expect_parallel_matches(2, 0, gs, {}, FanoutBackend::kSemantic, true);
}

TEST(ParallelizeCommuting, RandomPhasesAndXBasis) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0, 6.28);
  for (int trial = 0; trial < 4; ++trial) {
    const bool xbasis = trial % 2 == 1;
    std::vector<frag::CommutingGate> gs;
    for (int k = 0; k < 3; ++k) {
      std::vector<int> sup = k == 0 ? std::vector<int>{0, 1} : std::vector<int>{k};
      const size_t d = size_t{1} << sup.size();
      dense::Mat m(d * d, 0.0);
      for (size_t i = 0; i < d; ++i) m[i * d + i] = std::polar(1.0, angle(rng));
      if (xbasis) {
        dense::Mat hm = sup.size() == 1 ? dense::h() : dense::Mat{0.5, 0.5, 0.5, 0.5, 0.5, -0.5, 0.5, -0.5,
                                                                  0.5, 0.5, -0.5, -0.5, 0.5, -0.5, -0.5, 0.5};
        dense::Mat t(d * d, 0.0), u(d * d, 0.0);
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j)
            for (size_t l = 0; l < d; ++l) t[i * d + j] += hm[i * d + l] * m[l * d + j];
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j)
            for (size_t l = 0; l < d; ++l) u[i * d + j] += t[i * d + l] * hm[l * d + j];
        m = u;
      }
      gs.push_back({sup, m, k == 2 ? std::optional<Qubit>(3) : std::nullopt});
    }
    std::vector<Unitary> diag;
    if (xbasis) diag.assign(3, gates::h());
    for (auto be : {FanoutBackend::kSemantic, FanoutBackend::kGadget}) expect_parallel_matches(3, 1, gs, diag, be, false);
  }
}

TEST(ParallelizeCommuting, NonDiagonalizedGateThrows) {
  ProgramBuilder b;
  auto q = b.allocate("system", 2, RegisterRole::kSystem);
  std::vector<frag::CommutingGate> gs = {{{0}, dense::x(), std::nullopt}};
  EXPECT_THROW(frag::parallelize_commuting(b, q, gs, {}, FanoutBackend::kSemantic), NonCommutingError);
}

TEST(Qft, FragmentRoundTrip) {
  ProgramBuilder b;
  auto q = b.allocate("system", 3, RegisterRole::kSystem);
  frag::qft(b, q);
  frag::qft(b, q, true);
  SparseState s(3);
  s.apply(gates::h(), std::vector<Qubit>{1});
  SparseState out = execute(b.build("qft"), ExecutionPolicy::seeded(0), s).state;
  EXPECT_NEAR(fidelity(out, s), 1, 1e-9);
}

}  // namespace
}  // namespace laqcc
