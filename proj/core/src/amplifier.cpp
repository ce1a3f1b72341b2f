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

#include "laqcc/amplifier.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/macros.hpp"

namespace laqcc {

double simulate_plan(double beta, int J, double phi, double theta) {
  const double sb = std::sin(beta), cb = std::cos(beta);
  Complex g = sb, bad = cb;
  const Complex ephi = std::polar(1.0, phi), etheta = std::polar(1.0, theta);
  for (int i = 0; i < J; ++i) {
    g *= ephi;
    Complex overlap = sb * g + cb * bad;
    Complex k = (1.0 - etheta) * overlap;
    g -= k * sb;
    bad -= k * cb;
  }
  return std::norm(g);
}

AmplificationPlan plan(uint64_t N, uint64_t m) {
  if (m == 0) throw ValidationError("amplification needs at least one good element");
  if (m > N) throw ValidationError("good count exceeds ambient count");
  AmplificationPlan p;
  p.N = N;
  p.m = m;
  p.beta = std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(N)));
  if (m == N) return p;
  const double pi = std::numbers::pi;
  p.J = std::max(0, static_cast<int>(std::ceil((pi / 2 - p.beta) / (2 * p.beta) - 1e-12)));
  double x = std::sin(pi / (4 * p.J + 2)) / std::sin(p.beta);
  double phi = 2 * std::asin(std::min(1.0, x));
  auto loss = [&](double f) { return 1.0 - simulate_plan(p.beta, p.J, f, f); };
  if (loss(phi) <= 1e-13) {
    p.phi = p.theta = phi;
    p.success = simulate_plan(p.beta, p.J, p.phi, p.theta);
    return p;
  }
  double lo = std::max(0.0, phi - 1e-3), hi = std::min(2 * pi, phi + 1e-3);
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = hi - r * (hi - lo), c = lo + r * (hi - lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (loss(a) < loss(c)) {
      hi = c;
    } else {
      lo = a;
    }
    a = hi - r * (hi - lo);
    c = lo + r * (hi - lo);
  }
  double polished = (lo + hi) / 2;
  if (loss(polished) < loss(phi)) phi = polished;
  p.phi = p.theta = phi;
  p.success = simulate_plan(p.beta, p.J, p.phi, p.theta);
  if (p.success < 1.0 - 1e-9) throw PlanMismatchError("phase matching failed to reach amplitude 1");
  return p;
}

void apply_fragment(SparseState& s, const Fragment& f) {
  for (const Layer& l : f.layers) {
    const auto* q = std::get_if<QuantumLayer>(&l);
    if (q == nullptr) throw ValidationError("fragment must be measurement-free");
    for (const auto& op : q->ops) {
      if (op.condition) throw ValidationError("fragment must be unconditional");
      apply_operation(s, op);
    }
  }
}

double good_probability(int num_qubits, const Fragment& prep, const Fragment& oracle, Qubit flag) {
  SparseState s(num_qubits);
  apply_fragment(s, prep);
  apply_fragment(s, oracle);
  double p = 0.0;
  for (const auto& [k, a] : s.amplitudes()) {
    if (k.test(flag)) p += std::norm(a);
  }
  return p;
}

void amplify(ProgramBuilder& b, const std::vector<Qubit>& reg, const Fragment& prep, const Fragment& oracle,
             Qubit flag, const AmplificationPlan& plan, const AmplifyOptions& options) {
  if (!prep.is_unitary() || !oracle.is_unitary()) throw ValidationError("amplify needs measurement-free fragments");
  if (options.verify) {
    double p = good_probability(b.num_qubits(), prep, oracle, flag);
    double want = static_cast<double>(plan.m) / static_cast<double>(plan.N);
    if (std::abs(p - want) > 1e-9) {
      throw PlanMismatchError("oracle marks probability " + std::to_string(p) + ", plan expects " +
                              std::to_string(want));
    }
  }
  b.append(prep);
  if (plan.J == 0) return;
  Fragment unprep = prep.inverse();
  auto zero = b.acquire(1);
  std::vector<Qubit> ex = reg;
  ex.push_back(zero[0]);
  for (int i = 0; i < plan.J; ++i) {
    b.append(oracle);
    b.gate(gates::phase(plan.phi), {flag});
    b.append(oracle);
    b.append(unprep);
    b.macro(macros::exact(static_cast<int>(reg.size()), 0), ex);
    b.gate(gates::phase(plan.theta), {zero[0]});
    b.macro(macros::exact(static_cast<int>(reg.size()), 0), ex);
    b.append(prep);
  }
  b.release(zero);
}

}  // namespace laqcc
