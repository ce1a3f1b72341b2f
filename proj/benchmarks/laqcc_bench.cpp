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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "laqcc/amplifier.hpp"
#include "laqcc/clifford.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/numbersys.hpp"
#include "laqcc/stateprep.hpp"
#include "laqcc/verify.hpp"

namespace {

using namespace laqcc;

void BM_HadamardLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SparseState s(n);
    for (Qubit q = 0; q < n; ++q) {
      const std::vector<Qubit> t{q};
      s.apply(gates::h(), t);
    }
    benchmark::DoNotOptimize(s.support());
  }
  state.SetComplexityN(int64_t{1} << n);
}
BENCHMARK(BM_HadamardLayer)->DenseRange(8, 16, 4)->Complexity();

void BM_GhzEnumeration(benchmark::State& state) {
  LaqccProgram p = clifford::ghz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_branches(p).classes.size());
}
BENCHMARK(BM_GhzEnumeration)->DenseRange(4, 10, 3);

void BM_WStateVerify(benchmark::State& state) {
  Protocol p = w_state(static_cast<int>(state.range(0)), FanoutBackend::kGadget);
  for (auto _ : state) benchmark::DoNotOptimize(verify_protocol(p, BranchPolicy{}).fidelity);
}
BENCHMARK(BM_WStateVerify)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AmplifierPlan(benchmark::State& state) {
  const uint64_t N = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    for (uint64_t m = 1; m <= N; ++m) benchmark::DoNotOptimize(plan(N, m).phi);
  }
}
BENCHMARK(BM_AmplifierPlan)->Arg(16)->Arg(64);

void BM_FlattenLadder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nlohmann::json gates = nlohmann::json::array();
  for (int i = 0; i + 1 < n; ++i) {
    gates.push_back({{"name", "h"}, {"qubits", {i}}});
    gates.push_back({{"name", "cnot"}, {"qubits", {i, i + 1}}});
  }
  clifford::CliffordCircuit c = clifford::circuit_from_json({{"shape", "ladder"}, {"n", n}, {"gates", gates}});
  for (auto _ : state) benchmark::DoNotOptimize(clifford::flatten_ladder(c).program.num_qubits());
}
BENCHMARK(BM_FlattenLadder)->RangeMultiplier(4)->Range(4, 64);

void BM_FactoradicToCombination(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<numbers::Factoradic> ys;
  for (int i = 0; i < 256; ++i) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) d[static_cast<size_t>(n - 1 - j)] = static_cast<int>(rng() % static_cast<uint64_t>(j + 1));
    ys.emplace_back(d);
  }
  for (auto _ : state) {
    for (const auto& y : ys) benchmark::DoNotOptimize(numbers::fac_to_comb(y, n / 2));
  }
}
BENCHMARK(BM_FactoradicToCombination)->RangeMultiplier(4)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
