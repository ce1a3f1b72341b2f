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
#include <random>

#include "dense.hpp"
#include "laqcc/clifford.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"

namespace laqcc::clifford {
namespace {

using Word = std::vector<CliffordGate>;

dense::Mat matrix_of(const Word& w, int n) {
  const size_t d = size_t{1} << n;
  dense::Mat u(d * d, 0.0);
  for (size_t c = 0; c < d; ++c) {
    dense::Vec v = dense::basis(n, c);
    for (const auto& g : w) {
      if (g.name == "h") dense::apply(v, dense::h(), g.qubits);
      if (g.name == "s") dense::apply(v, dense::s(), g.qubits);
      if (g.name == "cnot") dense::apply(v, dense::cnot(), g.qubits);
    }
    for (size_t r = 0; r < d; ++r) u[r * d + c] = v[r];
  }
  return u;
}

dense::Mat mul(const dense::Mat& a, const dense::Mat& b, size_t d) {
  dense::Mat c(d * d, 0.0);
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k)
      for (size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
  return c;
}

dense::Mat dagger(const dense::Mat& a, size_t d) {
  dense::Mat c(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) c[i * d + j] = std::conj(a[j * d + i]);
  return c;
}

TEST(Pauli, ConjugationExamples) {
  EXPECT_EQ(conjugate(Word{{"h", {0}}}, PauliString::single(1, 0, 'Z')), PauliString::single(1, 0, 'X'));
  EXPECT_EQ(conjugate(Word{{"s", {0}}}, PauliString::single(1, 0, 'X')), PauliString::single(1, 0, 'Y'));
  PauliString xx = multiply(PauliString::single(2, 0, 'X'), PauliString::single(2, 1, 'X'));
  EXPECT_EQ(conjugate(Word{{"cnot", {0, 1}}}, PauliString::single(2, 0, 'X')), xx);
  EXPECT_EQ(PauliString::single(1, 0, 'Y').to_string(), "+Y");
}

TEST(Pauli, ConjugationMatchesDenseOracle) {
  std::mt19937_64 rng(31);
  const char kinds[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3;
    Word w;
    for (int g = 0; g < 12; ++g) {
      const int q = static_cast<int>(rng() % 3);
      switch (rng() % 3) {
        case 0: w.push_back({"h", {q}}); break;
        case 1: w.push_back({"s", {q}}); break;
        default: w.push_back({"cnot", {q, (q + 1 + static_cast<int>(rng() % 2)) % 3}});
      }
    }
    PauliString p = PauliString::identity(n);
    for (int q = 0; q < n; ++q) p = multiply(p, PauliString::single(n, q, kinds[rng() % 4]));
    const size_t d = 8;
    dense::Mat u = matrix_of(w, n);
    dense::Mat want = mul(mul(u, p.matrix(), d), dagger(u, d), d);
    dense::Mat got = conjugate(w, p).matrix();
    for (size_t i = 0; i < d * d; ++i) ASSERT_NEAR(std::abs(got[i] - want[i]), 0, 1e-12) << trial;
  }
}

TEST(Pauli, ExpandedGatesMatchTheirMatrices) {
  for (const char* name : {"x", "z", "sdg", "cz", "swap"}) {
    const bool two = std::string(name) == "cz" || std::string(name) == "swap";
    std::vector<int> qs = two ? std::vector<int>{0, 1} : std::vector<int>{0};
    dense::Mat want(16, 0.0);
    Unitary u = gates::by_name(name);
    const int n = 2;
    for (size_t c = 0; c < 4; ++c) {
      dense::Vec v = dense::basis(n, c);
      dense::apply(v, u.m, qs);
      for (size_t r = 0; r < 4; ++r) want[r * 4 + c] = v[r];
    }
    dense::Mat got = matrix_of(expand_gate(name, qs), n);
    // Equal up to a global phase.
    dense::C ratio = 0;
    for (size_t i = 0; i < 16; ++i) {
      if (std::abs(want[i]) > 0.5) {
        ratio = got[i] / want[i];
        break;
      }
    }
    for (size_t i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(got[i] - ratio * want[i]), 0, 1e-12) << name;
  }
}

TEST(CorrectionMap, IdentityLadderSingleTeleport) {
  CliffordCircuit c = make_ladder(2, {{}});
  auto sites = teleport_sites(c);
  ASSERT_EQ(sites.size(), 1u);
  CorrectionMap m = build_correction_map(c);
  EXPECT_EQ(m.inputs, 2);
  EXPECT_EQ(m.outputs, 4);
  const int q = sites[0].qubit;
  Bits za = m.apply({1, 0}), xb = m.apply({0, 1});
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(za[static_cast<size_t>(i)], i == q ? 1 : 0);
    EXPECT_EQ(xb[static_cast<size_t>(i)], i == 2 + q ? 1 : 0);
  }
}

TEST(CorrectionMap, HadamardSwapsZAndX) {
  CliffordCircuit probe = make_ladder(2, {{}});
  const int q = teleport_sites(probe)[0].qubit;
  CliffordCircuit c = make_ladder(2, {{{"h", {q}}}});
  Bits out = build_correction_map(c).apply({1, 0});
  EXPECT_EQ(out[static_cast<size_t>(q)], 0);
  EXPECT_EQ(out[static_cast<size_t>(2 + q)], 1);
}

// Flattened program against direct application, on every branch.
void expect_flat_matches(const CliffordCircuit& c, const SparseState& logical) {
  FlatProgram fp = flatten(c);
  SparseState init(fp.program.num_qubits());
  {
    std::vector<std::pair<BasisKey, Complex>> amps;
    for (const auto& [k, a] : logical.amplitudes()) {
      BasisKey w;
      for (int i = 0; i < c.n; ++i) w.set(fp.inputs[static_cast<size_t>(i)], k.test(i));
      amps.emplace_back(w, a);
    }
    init = SparseState::from_amplitudes(fp.program.num_qubits(), amps);
  }
  SparseState direct = logical;
  std::vector<Qubit> wires(static_cast<size_t>(c.n));
  for (int i = 0; i < c.n; ++i) wires[static_cast<size_t>(i)] = i;
  apply_word(direct, c.gates(), wires);
  EnumerationOptions o;
  o.merge = false;
  EnumerationResult e = enumerate_branches(fp.program, init, o);
  for (const auto& b : e.classes) EXPECT_NEAR(reduced_fidelity(b.state, fp.outputs, direct), 1, 1e-9);
  EXPECT_NEAR(e.total_probability, 1, 1e-12);
  EXPECT_LE(resources(fp.program).rounds, 1);
}

TEST(FlattenLadder, CnotOnSampleInputs) {
  CliffordCircuit c = make_ladder(2, {{{"cnot", {0, 1}}}});
  SparseState zero(2), plus(2);
  plus.apply(gates::h(), std::vector<Qubit>{0});
  expect_flat_matches(c, zero);
  expect_flat_matches(c, plus);
  EXPECT_EQ(flatten_ladder(c).program.num_qubits(), 3 * 2 - 2);
}

TEST(FlattenLadder, IdentityLadderKeepsGhz) {
  CliffordCircuit c = make_ladder(3, {{}, {}});
  expect_flat_matches(c, ghz_target(3));
}

TEST(FlattenLadder, RandomLaddersAndWidth) {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 5; ++n) {
    CliffordCircuit c = random_ladder(n, rng);
    SparseState s(n);
    for (Qubit q = 0; q < n; ++q) {
      s.apply(gates::h(), std::vector<Qubit>{q});
      s.apply(gates::rz(0.3 + q), std::vector<Qubit>{q});
    }
    expect_flat_matches(c, s);
    EXPECT_EQ(static_cast<int>(teleport_sites(c).size()), n - 1);
  }
}

TEST(FlattenGrid, IdentityBrickworkIsIdentity) {
  CliffordCircuit c = make_grid(2, 2, {{{}}, {}});
  SparseState s(2);
  s.apply(gates::h(), std::vector<Qubit>{0});
  s.apply(gates::s(), std::vector<Qubit>{0});
  expect_flat_matches(c, s);
}

TEST(FlattenGrid, RandomBrickwork) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 3; ++trial) {
    CliffordCircuit c = random_grid(3, 2 + trial % 2, rng);
    SparseState s(3);
    for (Qubit q = 0; q < 3; ++q) {
      s.apply(gates::h(), std::vector<Qubit>{q});
      s.apply(gates::rz(0.7 * (q + 1)), std::vector<Qubit>{q});
    }
    expect_flat_matches(c, s);
  }
}

TEST(Flatten, ShapeMismatchThrows) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(flatten_ladder(random_grid(3, 2, rng)), ShapeError);
  EXPECT_THROW(flatten_grid(random_ladder(3, rng)), ShapeError);
}

TEST(SwapChain, EqualsLongRangeCnot) {
  const int n = 4;
  CliffordCircuit c = swap_chain_cnot(n, 0, 3);
  dense::Mat got = matrix_of(c.gates(), n);
  dense::Mat want = matrix_of(Word{{"cnot", {0, 3}}}, n);
  for (size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(std::abs(got[i] - want[i]), 0, 1e-12);
}

TEST(Ghz, BranchesAndLayout) {
  for (int n = 2; n <= 5; ++n) {
    LaqccProgram p = ghz(n);
    EXPECT_EQ(p.num_qubits(), 2 * n - 1);
    EnumerationOptions o;
    o.merge = false;
    EnumerationResult e = enumerate_branches(p, o);
    EXPECT_EQ(e.classes.size(), size_t{1} << (n - 1));
    for (const auto& b : e.classes) EXPECT_NEAR(reduced_fidelity(b.state, p.output_qubits(), ghz_target(n)), 1, 1e-9);
    EXPECT_TRUE(validate_layout(p, GridLayout::line(2 * n - 1)).empty());
  }
}

TEST(Json, CircuitRoundTrip) {
  std::mt19937_64 rng(3);
  CliffordCircuit c = random_grid(4, 3, rng);
  CliffordCircuit r = circuit_from_json(to_json(c));
  EXPECT_EQ(to_json(r), to_json(c));
  nlohmann::json flat = {{"shape", "chain"}, {"n", 2}, {"gates", {{{"name", "h"}, {"qubits", {0}}}, {{"name", "cnot"}, {"qubits", {0, 1}}}}}};
  CliffordCircuit g = circuit_from_json(flat);
  EXPECT_EQ(g.n, 2);
  EXPECT_EQ(g.gates().size(), 2u);
}

}  // namespace
}  // namespace laqcc::clifford
