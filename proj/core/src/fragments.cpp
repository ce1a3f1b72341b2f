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

#include "laqcc/fragments.hpp"

#include <cmath>
#include <map>
#include <set>

#include "laqcc/charges.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/macros.hpp"

namespace laqcc {

const char* backend_name(FanoutBackend b) { return b == FanoutBackend::kGadget ? "gadget" : "semantic"; }

namespace frag {
namespace {

void require_disjoint(const std::vector<std::vector<Qubit>>& groups) {
  std::set<Qubit> seen;
  for (const auto& g : groups) {
    for (Qubit q : g) {
      if (!seen.insert(q).second) throw RegisterOverlapError("fragment registers overlap at qubit " + std::to_string(q));
    }
  }
}

std::vector<Qubit> cat(std::vector<Qubit> a, const std::vector<Qubit>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct GadgetAncillas {
  std::vector<Qubit> a, p, r;
};

void fanout_gadget(ProgramBuilder& b, Qubit x, const std::vector<Qubit>& y, const GadgetAncillas& anc) {
  const int m = static_cast<int>(y.size());
  const auto& a = anc.a;
  const auto& p = anc.p;
  const auto& r = anc.r;
  for (Qubit q : a) b.gate(gates::h(), {q});
  for (int i = 0; i + 1 < m; ++i) b.gate(gates::cnot(), {a[i], p[i]});
  for (int i = 0; i + 1 < m; ++i) b.gate(gates::cnot(), {a[i + 1], p[i]});
  std::vector<std::string> inputs;
  if (m > 1) inputs.push_back(b.measure(p, "fanout_parity"));
  for (int i = 0; i < m; ++i) b.gate(gates::cnot(), {a[i], y[i]});
  b.gate(gates::cnot(), {x, r[0]});
  b.gate(gates::cnot(), {a[0], r[0]});
  std::vector<Basis> bases(m + 1, Basis::kX);
  bases[0] = Basis::kZ;
  inputs.push_back(b.measure(cat({r[0]}, a), "fanout_cat", bases));

  // Inputs: e_0..e_{m-2}, rho, s_0..s_{m-1}.
  // Outputs: y corrections (m), x phase (1), resets of p, r, a.
  const int nin = (m - 1) + 1 + m;
  const int rho = m - 1;
  std::vector<Bits> rows;
  for (int i = 0; i < m; ++i) {
    Bits row(nin, 0);
    row[rho] = 1;
    for (int j = 0; j < i; ++j) row[j] = 1;
    rows.push_back(row);
  }
  {
    Bits row(nin, 0);
    for (int i = 0; i < m; ++i) row[rho + 1 + i] = 1;
    rows.push_back(row);
  }
  for (int i = 0; i < nin; ++i) {
    Bits row(nin, 0);
    row[i] = 1;
    rows.push_back(row);
  }
  std::string c = b.classical("fanout_fix", inputs, ClassicalFunction::linear(nin, rows));
  for (int i = 0; i < m; ++i) b.gate(gates::x(), {y[i]}, {}, Condition{c, i});
  b.gate(gates::z(), {x}, {}, Condition{c, m});
  auto resets = cat(cat(p, r), a);
  for (int i = 0; i < nin; ++i) b.gate(gates::x(), {resets[i]}, {}, Condition{c, m + 1 + i});
}

}  // namespace

void fanout(ProgramBuilder& b, Qubit control, const std::vector<Qubit>& targets, FanoutBackend backend) {
  fanout_parallel(b, {{control, targets}}, backend);
}

void fanout_parallel(ProgramBuilder& b, const std::vector<FanoutTask>& tasks, FanoutBackend backend) {
  std::vector<std::vector<Qubit>> all;
  for (const auto& t : tasks) {
    all.push_back({t.control});
    all.push_back(t.targets);
  }
  require_disjoint(all);
  if (backend == FanoutBackend::kSemantic) {
    for (const auto& t : tasks) {
      if (!t.targets.empty()) b.macro(macros::fanout(static_cast<int>(t.targets.size())), cat({t.control}, t.targets));
    }
    return;
  }
  std::vector<GadgetAncillas> anc;
  for (const auto& t : tasks) {
    const int m = static_cast<int>(t.targets.size());
    if (m == 0) {
      anc.push_back({});
      continue;
    }
    anc.push_back({b.acquire(m), b.acquire(m - 1), b.acquire(1)});
  }
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!tasks[i].targets.empty()) fanout_gadget(b, tasks[i].control, tasks[i].targets, anc[i]);
  }
  for (auto it = anc.rbegin(); it != anc.rend(); ++it) {
    b.release(it->r);
    b.release(it->p);
    b.release(it->a);
  }
}

void or_n(ProgramBuilder& b, const std::vector<Qubit>& inputs, Qubit out) {
  require_disjoint({inputs, {out}});
  b.macro(macros::or_gate(static_cast<int>(inputs.size())), cat(inputs, {out}));
}

void and_n(ProgramBuilder& b, const std::vector<Qubit>& inputs, Qubit out) {
  require_disjoint({inputs, {out}});
  b.macro(macros::and_gate(static_cast<int>(inputs.size())), cat(inputs, {out}));
}

void equal_i(ProgramBuilder& b, const std::vector<Qubit>& reg, uint64_t value, Qubit out) {
  require_disjoint({reg, {out}});
  b.macro(macros::equal(static_cast<int>(reg.size()), value), cat(reg, {out}));
}

void add_n(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y) {
  require_disjoint({x, y});
  b.macro(macros::add(static_cast<int>(x.size()), static_cast<int>(y.size())), cat(x, y));
}

void sub_n(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y) {
  require_disjoint({x, y});
  b.macro(macros::add(static_cast<int>(x.size()), static_cast<int>(y.size()), true), cat(x, y));
}

void equality(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y, Qubit out) {
  if (x.size() != y.size()) throw ValidationError("equality needs registers of equal width");
  require_disjoint({x, y, {out}});
  sub_n(b, x, y);
  equal_i(b, y, 0, out);
  add_n(b, x, y);
}

void greaterthan(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& y, Qubit out) {
  if (x.size() != y.size()) throw ValidationError("greaterthan needs registers of equal width");
  require_disjoint({x, y, {out}});
  auto hi = b.acquire(1);
  auto wide = cat(y, hi);
  sub_n(b, x, wide);
  b.gate(gates::cnot(), {hi[0], out});
  add_n(b, x, wide);
  b.release(hi);
}

int hammingweight_width(int n) { return std::max(1, ceil_log2(static_cast<uint64_t>(n) + 1)); }

void hammingweight(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<Qubit>& out) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(out.size()) != hammingweight_width(n)) {
    throw ValidationError("hammingweight output needs " + std::to_string(hammingweight_width(n)) + " qubits");
  }
  require_disjoint({x, out});
  b.macro(macros::hammingweight(n, static_cast<int>(out.size())), cat(x, out));
}

void exact_t(ProgramBuilder& b, const std::vector<Qubit>& x, int t, Qubit out) {
  require_disjoint({x, {out}});
  const int n = static_cast<int>(x.size());
  if (t < 0 || t > n) return;
  auto w = b.acquire(hammingweight_width(n));
  hammingweight(b, x, w);
  equal_i(b, w, static_cast<uint64_t>(t), out);
  hammingweight(b, x, w);
  b.release(w);
}

void threshold_t(ProgramBuilder& b, const std::vector<Qubit>& x, int t, Qubit out) {
  require_disjoint({x, {out}});
  const int n = static_cast<int>(x.size());
  if (t > n) return;
  if (t <= 0) {
    b.gate(gates::x(), {out});
    return;
  }
  auto f = b.acquire(n - t + 1);
  for (int j = t; j <= n; ++j) exact_t(b, x, j, f[j - t]);
  or_n(b, f, out);
  for (int j = n; j >= t; --j) exact_t(b, x, j, f[j - t]);
  b.release(f);
}

void weighted_threshold(ProgramBuilder& b, const std::vector<Qubit>& x, const std::vector<double>& weights,
                        double t, Qubit out) {
  if (weights.size() != x.size()) throw ValidationError("one weight per input qubit required");
  std::vector<int64_t> w;
  for (double v : weights) {
    if (!std::isfinite(v) || v != std::floor(v)) throw ValidationError("weighted threshold needs integer weights");
    w.push_back(static_cast<int64_t>(v));
  }
  if (!std::isfinite(t) || t != std::floor(t)) throw ValidationError("weighted threshold needs an integer threshold");
  require_disjoint({x, {out}});
  b.macro(macros::threshold(std::move(w), static_cast<int64_t>(t)), cat(x, {out}));
}

void qft(ProgramBuilder& b, const std::vector<Qubit>& reg, bool inverse) {
  b.macro(macros::qft(static_cast<int>(reg.size()), inverse), reg);
}

namespace {

std::vector<Complex> kron_diagonalizer(const std::vector<Unitary>& t, const std::vector<int>& support) {
  const int k = static_cast<int>(support.size());
  const int d = 1 << k;
  std::vector<Complex> m(static_cast<size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex v = 1.0;
      for (int i = 0; i < k; ++i) {
        int rb = (r >> i) & 1, cb = (c >> i) & 1;
        const int q = support[i];
        if (t.empty() || t[q].m.empty()) {
          v *= (rb == cb) ? 1.0 : 0.0;
        } else {
          v *= t[q].at(rb, cb);
        }
      }
      m[static_cast<size_t>(r) * d + c] = v;
    }
  }
  return m;
}

std::vector<Complex> matmul(const std::vector<Complex>& a, const std::vector<Complex>& b, int d) {
  std::vector<Complex> c(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
  return c;
}

std::vector<Complex> dagger(const std::vector<Complex>& a, int d) {
  std::vector<Complex> c(a.size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c[j * d + i] = std::conj(a[i * d + j]);
  return c;
}

}  // namespace

void parallelize_commuting(ProgramBuilder& b, const std::vector<Qubit>& target,
                           const std::vector<CommutingGate>& gates, const std::vector<Unitary>& diagonalizer,
                           FanoutBackend backend) {
  const int n = static_cast<int>(target.size());
  if (!diagonalizer.empty() && static_cast<int>(diagonalizer.size()) != n) {
    throw ValidationError("diagonalizer needs one single-qubit unitary per target qubit");
  }
  for (const auto& t : diagonalizer) {
    if (!t.m.empty() && (t.arity != 1 || !t.is_unitary())) throw ValidationError("diagonalizer entries must be 1-qubit unitaries");
  }
  std::set<Qubit> tset(target.begin(), target.end());
  if (static_cast<int>(tset.size()) != n) throw RegisterOverlapError("target register repeats a qubit");

  std::vector<std::vector<Complex>> diags;
  std::vector<int> users(n, 0);
  std::map<Qubit, int> control_users;
  for (const auto& g : gates) {
    const int k = static_cast<int>(g.support.size());
    if (k == 0) throw ValidationError("commuting gate with empty support");
    const int d = 1 << k;
    if (g.matrix.size() != static_cast<size_t>(d) * d) throw DimensionError("commuting gate matrix size mismatch");
    std::set<int> sup;
    for (int s : g.support) {
      if (s < 0 || s >= n) throw IndexError("commuting gate support out of range");
      if (!sup.insert(s).second) throw ValidationError("commuting gate support repeats a qubit");
    }
    Unitary u{"u", k, g.matrix};
    if (!u.is_unitary()) throw ValidationError("commuting gate matrix is not unitary");
    if (g.control) {
      if (tset.count(*g.control)) throw RegisterOverlapError("control lies inside the target register");
      ++control_users[*g.control];
    }
    auto t = kron_diagonalizer(diagonalizer, g.support);
    auto dmat = matmul(matmul(t, g.matrix, d), dagger(t, d), d);
    std::vector<Complex> phases(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (r != c && std::abs(dmat[r * d + c]) > 1e-9) {
          throw NonCommutingError("gate is not diagonal in the given basis");
        }
      }
      phases[r] = dmat[r * d + r];
    }
    diags.push_back(std::move(phases));
    for (int s : g.support) ++users[s];
  }

  // Copies: entry 0 is the original wire.
  std::vector<std::vector<Qubit>> copies(n);
  std::map<Qubit, std::vector<Qubit>> ccopies;
  for (int q = 0; q < n; ++q) {
    copies[q].push_back(target[q]);
    if (users[q] > 1) {
      auto extra = b.acquire(users[q] - 1);
      copies[q].insert(copies[q].end(), extra.begin(), extra.end());
    }
  }
  for (auto& [c, u] : control_users) {
    ccopies[c].push_back(c);
    if (u > 1) {
      auto extra = b.acquire(u - 1);
      ccopies[c].insert(ccopies[c].end(), extra.begin(), extra.end());
    }
  }

  auto rotate = [&](bool adjoint) {
    if (diagonalizer.empty()) return;
    for (int q = 0; q < n; ++q) {
      if (users[q] == 0 || diagonalizer[q].m.empty()) continue;
      b.gate(adjoint ? diagonalizer[q].adjoint() : diagonalizer[q], {target[q]});
    }
  };
  auto spread = [&]() {
    std::vector<FanoutTask> tasks;
    for (int q = 0; q < n; ++q) {
      if (copies[q].size() > 1) tasks.push_back({target[q], {copies[q].begin() + 1, copies[q].end()}});
    }
    for (auto& [c, v] : ccopies) {
      if (v.size() > 1) tasks.push_back({c, {v.begin() + 1, v.end()}});
    }
    fanout_parallel(b, tasks, backend);
  };

  rotate(false);
  spread();
  std::vector<int> next(n, 0);
  std::map<Qubit, int> cnext;
  for (size_t gi = 0; gi < gates.size(); ++gi) {
    const auto& g = gates[gi];
    std::vector<Qubit> qs;
    for (int s : g.support) qs.push_back(copies[s][next[s]++]);
    std::vector<Qubit> ctrl;
    if (g.control) ctrl.push_back(ccopies[*g.control][cnext[*g.control]++]);
    if (qs.size() == 1) {
      b.gate(gates::diag(diags[gi][0], diags[gi][1]), qs, ctrl);
    } else {
      b.macro(macros::diagonal(diags[gi]), qs, ctrl);
    }
  }
  spread();
  rotate(true);

  for (int q = 0; q < n; ++q) {
    if (copies[q].size() > 1) b.release({copies[q].begin() + 1, copies[q].end()});
  }
  for (auto& [c, v] : ccopies) {
    if (v.size() > 1) b.release({v.begin() + 1, v.end()});
  }
}

}  // namespace frag
}  // namespace laqcc
