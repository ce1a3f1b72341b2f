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

#include "laqcc/builder.hpp"
#include "laqcc/clifford.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/program.hpp"

namespace laqcc {
namespace {

ClassicalFunction identity(int n) {
  std::vector<Bits> rows;
  for (int i = 0; i < n; ++i) {
    Bits r(static_cast<size_t>(n), 0);
    r[static_cast<size_t>(i)] = 1;
    rows.push_back(r);
  }
  return ClassicalFunction::linear(n, rows);
}

// H on q0, measure, copy, X on q1 if the outcome was 1.
LaqccProgram feed_forward() {
  ProgramBuilder b;
  auto q = b.allocate("system", 2, RegisterRole::kSystem);
  b.gate(gates::h(), {q[0]});
  auto m = b.measure({q[0]}, "m");
  auto c = b.classical("c", {m}, identity(1));
  b.gate(gates::x(), {q[1]}, {}, Condition{c, 0});
  return b.build("feed_forward");
}

TEST(Execute, EmptyProgram) {
  ProgramBuilder b;
  b.allocate("system", 1, RegisterRole::kSystem);
  ExecutionResult r = execute(b.build("empty"), ExecutionPolicy::seeded(1));
  EXPECT_TRUE(r.record.empty());
  EXPECT_NEAR(std::abs(r.state.amplitude(BasisKey::from_uint(0))), 1, 1e-12);
}

TEST(Execute, FeedForwardForcedOne) {
  ExecutionResult r = execute(feed_forward(), ExecutionPolicy::forcing({Bits{1}}));
  EXPECT_NEAR(std::abs(r.state.amplitude(BasisKey::from_uint(0b11))), 1, 1e-12);
  ASSERT_EQ(r.record.size(), 1u);
  EXPECT_NEAR(r.record[0].probability, 0.5, 1e-12);
}

TEST(Execute, SeededRunsAgree) {
  LaqccProgram p = clifford::ghz(4);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto a = execute(p, ExecutionPolicy::seeded(seed));
    auto b = execute(p, ExecutionPolicy::seeded(seed));
    ASSERT_EQ(a.record.size(), b.record.size());
    for (size_t i = 0; i < a.record.size(); ++i) EXPECT_EQ(a.record[i].bits, b.record[i].bits);
  }
}

TEST(Execute, ForcedZeroProbabilityIsInfeasible) {
  ProgramBuilder b;
  auto q = b.allocate("system", 1, RegisterRole::kSystem);
  b.measure({q[0]}, "m");
  EXPECT_THROW(execute(b.build("p"), ExecutionPolicy::forcing({Bits{1}})), InfeasibleBranchError);
}

TEST(Builder, PacksDisjointGatesIntoOneLayer) {
  ProgramBuilder b;
  auto q = b.allocate("system", 4, RegisterRole::kSystem);
  b.gate(gates::h(), {q[0]});
  b.gate(gates::h(), {q[1]});
  b.gate(gates::cnot(), {q[2], q[3]});
  b.gate(gates::h(), {q[0]});
  LaqccProgram p = b.build("p");
  ASSERT_EQ(p.layers().size(), 2u);
  EXPECT_EQ(std::get<QuantumLayer>(p.layers()[0]).ops.size(), 3u);
}

TEST(Builder, RejectsOverlappingRegistersAndWideGates) {
  RegisterMap m;
  m.add("a", RegisterRole::kSystem, {0, 1});
  EXPECT_THROW(m.add("b", RegisterRole::kSystem, {1, 2}), RegisterOverlapError);
  ProgramBuilder b;
  auto q = b.allocate("system", 3, RegisterRole::kSystem);
  Unitary wide{"diag3", 3, std::vector<Complex>(64, 0.0)};
  for (int i = 0; i < 8; ++i) wide.m[static_cast<size_t>(i * 9)] = 1.0;
  EXPECT_THROW(b.gate(wide, {q[0], q[1], q[2]}), ValidationError);
}

TEST(Builder, ScratchIsReusedAfterRelease) {
  ProgramBuilder b;
  b.allocate("system", 1, RegisterRole::kSystem);
  auto s1 = b.acquire(2);
  b.release(s1);
  auto s2 = b.acquire(2);
  EXPECT_EQ(b.num_qubits(), 3);
  b.release(s2);
  EXPECT_THROW(b.release(s2), ValidationError);
}

TEST(Builder, ParallelBlockKeepsScratchDisjoint) {
  ProgramBuilder b;
  b.allocate("system", 1, RegisterRole::kSystem);
  b.begin_parallel();
  auto s1 = b.acquire(2);
  b.release(s1);
  auto s2 = b.acquire(2);
  b.release(s2);
  b.end_parallel();
  EXPECT_EQ(b.num_qubits(), 5);
}

TEST(Validate, ConditionOnUnknownOutputFails) {
  RegisterMap regs;
  regs.add("system", RegisterRole::kSystem, {0});
  QuantumLayer ql;
  ql.ops.push_back(Operation{gates::x(), {0}, {}, Condition{"nope", 0}});
  EXPECT_THROW(LaqccProgram("bad", 1, regs, {ql}).validate(), MalformedProgramError);
}

TEST(Validate, QubitUsedTwiceInLayerFails) {
  RegisterMap regs;
  regs.add("system", RegisterRole::kSystem, {0, 1});
  QuantumLayer ql;
  ql.ops.push_back(Operation{gates::h(), {0}, {}, {}});
  ql.ops.push_back(Operation{gates::cnot(), {0, 1}, {}, {}});
  EXPECT_THROW(LaqccProgram("bad", 2, regs, {ql}).validate(), MalformedProgramError);
}

TEST(Resources, GhzThreeHasWidthFiveAndOneRound) {
  ResourceProfile r = resources(clifford::ghz(3));
  EXPECT_EQ(r.width, 5);
  EXPECT_EQ(r.rounds, 1);
  EXPECT_EQ(r.measure_layers, 1);
}

TEST(Resources, RoundsCountFeedForwardChains) {
  EXPECT_EQ(resources(feed_forward()).rounds, 1);
  ProgramBuilder b;
  auto q = b.allocate("system", 3, RegisterRole::kSystem);
  std::string prev;
  for (int i = 0; i < 3; ++i) {
    b.gate(gates::h(), {q[0]}, {}, prev.empty() ? std::nullopt : std::optional<Condition>(Condition{prev, 0}));
    auto m = b.measure({q[0]}, "m");
    prev = b.classical("c", {m}, identity(1));
  }
  EXPECT_EQ(resources(b.build("chain")).rounds, 2);
  ProgramBuilder b2;
  auto q2 = b2.allocate("system", 1, RegisterRole::kSystem);
  prev.clear();
  for (int i = 0; i < 3; ++i) {
    auto m = b2.measure({q2[0]}, "m");
    prev = b2.classical("c", {m}, identity(1));
    b2.gate(gates::x(), {q2[0]}, {}, Condition{prev, 0});
  }
  EXPECT_EQ(resources(b2.build("chain3")).rounds, 3);
}

TEST(Resources, ChargedRoundsAddMacroCharges) {
  ProgramBuilder b;
  auto q = b.allocate("system", 4, RegisterRole::kSystem);
  b.macro(macros::or_gate(3), {q[0], q[1], q[2], q[3]});
  ResourceProfile r = resources(b.build("or"));
  EXPECT_EQ(r.rounds, 0);
  EXPECT_EQ(r.charged_rounds, ChargeTable::defaults().rounds("or", 4));
  EXPECT_GE(r.charged_width, 4);
}

TEST(Layout, GhzOnLineHasNoViolations) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(validate_layout(clifford::ghz(n), GridLayout::line(2 * n - 1)).empty());
}

TEST(Layout, DistanceTwoCnotIsOneViolation) {
  ProgramBuilder b;
  auto q = b.allocate("system", 3, RegisterRole::kSystem);
  b.gate(gates::cnot(), {q[0], q[2]});
  GridLayout g;
  g.coords = {{0, {0, 0}}, {1, {0, 1}}, {2, {0, 2}}};
  EXPECT_EQ(validate_layout(b.build("p"), g).size(), 1u);
  GridLayout partial;
  partial.coords = {{0, {0, 0}}};
  EXPECT_THROW(validate_layout(b.build("p"), partial), LayoutError);
}

TEST(Enumerate, GhzThreeAllBranchesExact) {
  LaqccProgram p = clifford::ghz(3);
  EnumerationOptions o;
  o.merge = false;
  EnumerationResult e = enumerate_branches(p, o);
  EXPECT_EQ(e.classes.size(), 4u);
  SparseState target = clifford::ghz_target(3);
  for (const auto& c : e.classes) {
    EXPECT_NEAR(c.probability, 0.25, 1e-12);
    EXPECT_NEAR(reduced_fidelity(c.state, p.output_qubits(), target), 1, 1e-9);
  }
  EXPECT_NEAR(e.total_probability, 1, 1e-12);
}

TEST(Enumerate, MergingPreservesTotals) {
  LaqccProgram p = clifford::ghz(5);
  EnumerationOptions raw;
  raw.merge = false;
  EnumerationResult a = enumerate_branches(p, raw), b = enumerate_branches(p);
  EXPECT_LE(b.classes.size(), a.classes.size());
  EXPECT_DOUBLE_EQ(a.leaves, b.leaves);
  EXPECT_NEAR(b.total_probability, 1, 1e-12);
}

TEST(Enumerate, FrontierLimitThrows) {
  EnumerationOptions o;
  o.merge = false;
  o.max_frontier = 4;
  EXPECT_THROW(enumerate_branches(clifford::ghz(5), o), RangeError);
}

TEST(Serialize, RoundTripPreservesBehaviour) {
  for (const LaqccProgram& p : {feed_forward(), clifford::ghz(3)}) {
    LaqccProgram q = program_from_json(to_json(p));
    EXPECT_EQ(to_json(q), to_json(p));
    auto a = execute(p, ExecutionPolicy::seeded(4)), b = execute(q, ExecutionPolicy::seeded(4));
    EXPECT_NEAR(fidelity(a.state, b.state), 1, 1e-12);
  }
}

TEST(Serialize, MalformedInputThrows) {
  nlohmann::json j = to_json(feed_forward());
  j["layers"][0]["gates"][0]["qubits"] = {7};
  EXPECT_ANY_THROW(program_from_json(j));
}

TEST(Serialize, StateJsonListsSortedAmplitudes) {
  SparseState s(2);
  s.apply(gates::h(), std::vector<Qubit>{1});
  nlohmann::json j = to_json(s);
  ASSERT_EQ(j["amplitudes"].size(), 2u);
  EXPECT_EQ(j["amplitudes"][0]["basis"], "00");
  EXPECT_EQ(j["amplitudes"][1]["basis"], "01");
}

}  // namespace
}  // namespace laqcc
