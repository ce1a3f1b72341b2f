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

#include "laqcc/stateprep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "laqcc/amplifier.hpp"
#include "laqcc/charges.hpp"
#include "laqcc/classical.hpp"
#include "laqcc/clifford.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/macros.hpp"
#include "laqcc/numbersys.hpp"

namespace laqcc {

namespace {

BasisKey key_of(uint64_t v) {
  BasisKey k;
  for (int i = 0; i < 64; ++i) {
    if ((v >> i) & 1) k.set(i, true);
  }
  return k;
}

std::vector<Qubit> slice(const std::vector<Qubit>& v, size_t pos, size_t len) {
  return {v.begin() + static_cast<std::ptrdiff_t>(pos), v.begin() + static_cast<std::ptrdiff_t>(pos + len)};
}

std::vector<Qubit> concat(const std::vector<std::vector<Qubit>>& parts) {
  std::vector<Qubit> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool is_pow2(uint64_t q) { return q != 0 && (q & (q - 1)) == 0; }

int index_bits(int n) { return std::max(1, ceil_log2(static_cast<uint64_t>(n))); }

}  // namespace

SparseState uniform_target(uint64_t q) {
  if (q == 0) throw ValidationError("uniform superposition needs q >= 1");
  std::vector<std::pair<BasisKey, Complex>> amps;
  for (uint64_t i = 0; i < q; ++i) amps.emplace_back(key_of(i), 1.0);
  return SparseState::from_amplitudes(uniform_width(q), amps);
}

SparseState dicke_target(int n, int k) {
  if (n < 1 || n > 24 || k < 0 || k > n) throw ValidationError("dicke target needs 0 <= k <= n <= 24");
  std::vector<std::pair<BasisKey, Complex>> amps;
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    if (__builtin_popcountll(x) == k) amps.emplace_back(key_of(x), 1.0);
  }
  return SparseState::from_amplitudes(n, amps);
}

SparseState w_target(int n) { return dicke_target(n, 1); }

int uniform_width(uint64_t q) {
  if (q == 0) throw ValidationError("uniform superposition needs q >= 1");
  return std::max(1, ceil_log2(q));
}

void uniform_fragment(ProgramBuilder& b, const std::vector<Qubit>& reg, uint64_t q, nlohmann::json* info) {
  if (q == 0) throw ValidationError("uniform superposition needs q >= 1");
  const int need = ceil_log2(q);
  if (static_cast<int>(reg.size()) < need) throw ValidationError("register too narrow for uniform superposition");
  nlohmann::json local;
  if (q == 1) {
    local = {{"path", "trivial"}, {"J", 0}};
  } else if (is_pow2(q)) {
    for (int i = 0; i < need; ++i) b.gate(gates::h(), {reg[i]});
    local = {{"path", "hadamard"}, {"J", 0}};
  } else {
    auto r = slice(reg, 0, static_cast<size_t>(need));
    auto c = b.acquire(need);
    auto flag = b.acquire(1);
    for (int i = 0; i < need; ++i) {
      if ((q >> i) & 1) b.gate(gates::x(), {c[i]});
    }
    b.begin_capture();
    for (Qubit x : r) b.gate(gates::h(), {x});
    Fragment prep = b.end_capture();
    b.begin_capture();
    frag::greaterthan(b, c, r, flag[0]);
    Fragment oracle = b.end_capture();
    const AmplificationPlan pl = plan(uint64_t{1} << need, q);
    amplify(b, r, prep, oracle, flag[0], pl);
    for (int i = 0; i < need; ++i) {
      if ((q >> i) & 1) b.gate(gates::x(), {c[i]});
    }
    b.release(flag);
    b.release(c);
    local = {{"path", "amplified"}, {"J", pl.J}, {"N", pl.N}, {"m", pl.m}, {"phi", pl.phi}};
  }
  if (info != nullptr) *info = local;
}

Protocol uniform(uint64_t q) {
  ProgramBuilder b;
  auto reg = b.allocate("system", uniform_width(q), RegisterRole::kSystem);
  Protocol p;
  nlohmann::json amp;
  uniform_fragment(b, reg, q, &amp);
  p.program = b.build("uniform");
  p.target = uniform_target(q);
  p.outputs = reg;
  p.info = {{"protocol", "uniform"}, {"q", q}, {"amplification", amp}};
  return p;
}

Protocol ghz_protocol(int n) {
  Protocol p;
  p.program = clifford::ghz(n);
  p.target = clifford::ghz_target(n);
  p.outputs = p.program.output_qubits();
  p.info = {{"protocol", "ghz"}, {"n", n}, {"branches", uint64_t{1} << (n - 1)}};
  return p;
}

Protocol w_state(int n, FanoutBackend backend) {
  if (n < 2) throw ValidationError("w_state needs n >= 2");
  const int L = index_bits(n);
  ProgramBuilder b;
  auto sys = b.allocate("system", n, RegisterRole::kSystem);
  std::vector<std::vector<Qubit>> idx;
  for (int l = 0; l < n; ++l) idx.push_back(b.allocate("index_" + std::to_string(l), L, RegisterRole::kIndex));

  nlohmann::json amp;
  uniform_fragment(b, idx[0], static_cast<uint64_t>(n), &amp);
  auto spread = [&]() {
    std::vector<frag::FanoutTask> tasks;
    for (int bit = 0; bit < L; ++bit) {
      std::vector<Qubit> t;
      for (int l = 1; l < n; ++l) t.push_back(idx[l][bit]);
      tasks.push_back({idx[0][bit], t});
    }
    frag::fanout_parallel(b, tasks, backend);
  };
  spread();
  for (int l = 0; l < n; ++l) frag::equal_i(b, idx[l], static_cast<uint64_t>(l), sys[l]);
  spread();

  for (Qubit q : idx[0]) b.gate(gates::h(), {q});
  spread();
  for (int l = 0; l < n; ++l) {
    for (int bit = 0; bit < L; ++bit) {
      if ((l >> bit) & 1) b.gate(gates::cz(), {sys[l], idx[l][bit]});
    }
  }
  spread();
  for (Qubit q : idx[0]) b.gate(gates::h(), {q});

  Protocol p;
  p.program = b.build("w_state");
  p.target = w_target(n);
  p.outputs = sys;
  p.info = {{"protocol", "w_state"}, {"n", n}, {"backend", backend_name(backend)}, {"uniform", amp}};
  return p;
}

GridLayout w_state_layout(const Protocol& w) {
  const auto& regs = w.program.registers();
  if (!regs.contains("system")) throw LayoutError("not a w_state program");
  const auto& sys = regs.get("system").qubits;
  const int n = static_cast<int>(sys.size());
  if (n != 2 && n != 4) throw LayoutError("w_state layouts ship for n in {2, 4}");
  if (regs.contains("scratch")) throw LayoutError("w_state layout needs the semantic backend");
  GridLayout g;
  for (int l = 0; l < n; ++l) {
    const auto& idx = regs.get("index_" + std::to_string(l)).qubits;
    g.coords[idx[0]] = {l, 0};
    g.coords[sys[l]] = {l, 1};
    if (idx.size() > 1) g.coords[idx[1]] = {l, 2};
  }
  return g;
}

bool dicke_small_k_allowed(int n, int k) {
  if (n < 2 || k < 1) return false;
  const int bound = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) - 1e-12));
  return k <= bound;
}

namespace {

// Phase (-1)^{s[j]} with j the value held by idx.
void phase_kick(ProgramBuilder& b, const std::vector<Qubit>& idx, const std::vector<Qubit>& s) {
  const int n = static_cast<int>(s.size());
  const int L = static_cast<int>(idx.size());
  std::vector<std::vector<Qubit>> cp(n);
  cp[0] = idx;
  for (int l = 1; l < n; ++l) cp[l] = b.acquire(L);
  auto t = b.acquire(n);
  auto spread = [&]() {
    for (int bit = 0; bit < L; ++bit) {
      std::vector<Qubit> tg;
      for (int l = 1; l < n; ++l) tg.push_back(cp[l][bit]);
      frag::fanout(b, idx[bit], tg);
    }
  };
  spread();
  for (int l = 0; l < n; ++l) frag::equal_i(b, cp[l], static_cast<uint64_t>(l), t[l]);
  for (int l = 0; l < n; ++l) b.gate(gates::cz(), {t[l], s[l]});
  for (int l = 0; l < n; ++l) frag::equal_i(b, cp[l], static_cast<uint64_t>(l), t[l]);
  spread();
  b.release(t);
  for (int l = n - 1; l >= 1; --l) b.release(cp[l]);
}

void filling(ProgramBuilder& b, const std::vector<std::vector<Qubit>>& idx, const std::vector<Qubit>& sys) {
  const int k = static_cast<int>(idx.size());
  const int n = static_cast<int>(sys.size());
  b.begin_parallel();
  for (const auto& r : idx) uniform_fragment(b, r, static_cast<uint64_t>(n));
  b.end_parallel();
  std::vector<std::vector<Qubit>> s{sys};
  for (int m = 1; m < k; ++m) s.push_back(b.acquire(n));
  for (Qubit q : sys) b.gate(gates::h(), {q});
  auto copy = [&]() {
    if (k < 2) return;
    for (int p = 0; p < n; ++p) {
      std::vector<Qubit> tg;
      for (int m = 1; m < k; ++m) tg.push_back(s[m][p]);
      frag::fanout(b, sys[p], tg);
    }
  };
  copy();
  for (int m = 0; m < k; ++m) phase_kick(b, idx[m], s[m]);
  copy();
  for (Qubit q : sys) b.gate(gates::h(), {q});
  for (int m = k - 1; m >= 1; --m) b.release(s[m]);
}

void ordering(ProgramBuilder& b, const std::vector<std::vector<Qubit>>& idx, nlohmann::json& info) {
  const int k = static_cast<int>(idx.size());
  const int L = static_cast<int>(idx[0].size());
  if (k < 2) return;
  const int R = std::max(1, ceil_log2(static_cast<uint64_t>(k)));
  const int uses = 2 * (k - 1);
  std::vector<std::vector<std::vector<Qubit>>> cp(k);
  for (int a = 0; a < k; ++a) {
    cp[a].push_back(idx[a]);
    for (int u = 1; u < uses; ++u) cp[a].push_back(b.acquire(L));
  }
  auto spread = [&]() {
    for (int a = 0; a < k; ++a) {
      for (int bit = 0; bit < L; ++bit) {
        std::vector<Qubit> tg;
        for (int u = 1; u < uses; ++u) tg.push_back(cp[a][u][bit]);
        frag::fanout(b, idx[a][bit], tg);
      }
    }
  };
  std::vector<std::vector<Qubit>> g(k);
  for (int a = 0; a < k; ++a) g[a] = b.acquire(k - 1);
  std::vector<std::vector<Qubit>> rank(k);
  for (int a = 0; a < k; ++a) rank[a] = b.acquire(R);

  struct Cmp {
    std::vector<Qubit> x, y;
    Qubit out;
  };
  std::vector<Cmp> cmps;
  std::vector<int> xu(k, 0), yu(k, k - 1);
  for (int a = 0; a < k; ++a) {
    int col = 0;
    for (int c = 0; c < k; ++c) {
      if (c == a) continue;
      cmps.push_back({cp[a][xu[a]++], cp[c][yu[c]++], g[a][col++]});
    }
  }
  spread();
  for (const auto& c : cmps) frag::greaterthan(b, c.x, c.y, c.out);
  for (int a = 0; a < k; ++a) frag::hammingweight(b, g[a], rank[a]);
  std::string label = b.measure(concat(rank), "rank");
  for (int a = 0; a < k; ++a) frag::hammingweight(b, g[a], rank[a]);
  for (auto it = cmps.rbegin(); it != cmps.rend(); ++it) frag::greaterthan(b, it->x, it->y, it->out);
  spread();
  for (int a = k - 1; a >= 0; --a) b.release(rank[a]);
  for (int a = k - 1; a >= 0; --a) b.release(g[a]);
  for (int a = k - 1; a >= 0; --a) {
    for (int u = uses - 1; u >= 1; --u) b.release(cp[a][u]);
  }

  std::string fn = b.classical("ordering", {label},
                               ClassicalFunction::named("dicke_ordering_perm", {{"k", k}, {"rank_bits", R}}));
  const auto perms = all_permutations(k);
  const auto all_idx = concat(idx);
  for (size_t pi = 0; pi < perms.size(); ++pi) {
    const auto& P = perms[pi];
    bool ident = true;
    for (int a = 0; a < k; ++a) ident = ident && P[a] == a;
    if (ident) continue;
    std::vector<int> perm(static_cast<size_t>(k * L));
    for (int a = 0; a < k; ++a) {
      for (int bit = 0; bit < L; ++bit) perm[P[a] * L + bit] = a * L + bit;
    }
    b.macro(macros::permutation(perm), all_idx, {}, Condition{fn, static_cast<int>(pi)});
  }
  info["rank_label"] = label;
  info["rank_bits"] = R;
}

void cleaning_gadget(ProgramBuilder& b, const std::vector<std::vector<Qubit>>& idx, const std::vector<Qubit>& sys) {
  const int k = static_cast<int>(idx.size());
  const int n = static_cast<int>(sys.size());
  const int L = static_cast<int>(idx[0].size());
  const auto backend = FanoutBackend::kGadget;

  std::vector<std::vector<Qubit>> h(n);
  for (int l = 1; l < n; ++l) h[l] = b.acquire(frag::hammingweight_width(l));
  // scp[i][l - i - 1] is the copy of sys[i] read by h[l].
  std::vector<std::vector<Qubit>> scp(n);
  for (int i = 0; i + 1 < n; ++i) {
    scp[i].push_back(sys[i]);
    if (n - 2 - i > 0) {
      auto extra = b.acquire(n - 2 - i);
      scp[i].insert(scp[i].end(), extra.begin(), extra.end());
    }
  }
  auto spread = [&]() {
    std::vector<frag::FanoutTask> tasks;
    for (int i = 0; i + 1 < n; ++i) {
      if (scp[i].size() > 1) tasks.push_back({sys[i], {scp[i].begin() + 1, scp[i].end()}});
    }
    frag::fanout_parallel(b, tasks, backend);
  };
  auto weights = [&]() {
    for (int l = 1; l < n; ++l) {
      std::vector<Qubit> in;
      for (int i = 0; i < l; ++i) in.push_back(scp[i][l - i - 1]);
      frag::hammingweight(b, in, h[l]);
    }
  };
  spread();
  weights();
  spread();

  Unitary hd = gates::h();
  std::vector<Unitary> diag(static_cast<size_t>(L), hd);
  for (int m = 0; m < k; ++m) {
    std::vector<int> ls;
    for (int l = std::max(1, m); l < n; ++l) ls.push_back(l);
    auto t = b.acquire(static_cast<int>(ls.size()));
    auto e = b.acquire(static_cast<int>(ls.size()));
    for (size_t i = 0; i < ls.size(); ++i) {
      frag::equal_i(b, h[ls[i]], static_cast<uint64_t>(m), t[i]);
      frag::and_n(b, {t[i], sys[ls[i]]}, e[i]);
    }
    std::vector<frag::CommutingGate> cg;
    for (size_t i = 0; i < ls.size(); ++i) {
      std::vector<int> sup;
      for (int bit = 0; bit < L; ++bit) {
        if ((ls[i] >> bit) & 1) sup.push_back(bit);
      }
      if (sup.empty()) continue;
      const int d = 1 << sup.size();
      std::vector<Complex> mat(static_cast<size_t>(d) * d, 0.0);
      for (int c = 0; c < d; ++c) mat[static_cast<size_t>((c ^ (d - 1)) * d + c)] = 1.0;
      cg.push_back({sup, mat, e[i]});
    }
    frag::parallelize_commuting(b, idx[m], cg, diag, backend);
    for (size_t i = ls.size(); i-- > 0;) {
      frag::and_n(b, {t[i], sys[ls[i]]}, e[i]);
      frag::equal_i(b, h[ls[i]], static_cast<uint64_t>(m), t[i]);
    }
    b.release(e);
    b.release(t);
  }

  spread();
  weights();
  spread();
  for (int i = n - 2; i >= 0; --i) {
    if (scp[i].size() > 1) b.release({scp[i].begin() + 1, scp[i].end()});
  }
  for (int l = n - 1; l >= 1; --l) b.release(h[l]);
}

}  // namespace

Protocol dicke_small_k(int n, int k, const DickeOptions& options) {
  if (!dicke_small_k_allowed(n, k)) {
    throw PolicyError("dicke_small_k needs n >= 2 and 1 <= k <= ceil(sqrt(n)); use the factoradic method");
  }
  const int L = index_bits(n);
  ProgramBuilder b;
  auto sys = b.allocate("system", n, RegisterRole::kSystem);
  std::vector<std::vector<Qubit>> idx;
  for (int m = 0; m < k; ++m) idx.push_back(b.allocate("index_" + std::to_string(m), L, RegisterRole::kIndex));
  nlohmann::json info = {{"protocol", "dicke_small_k"}, {"n", n}, {"k", k}};

  auto flag = b.allocate("filter_flag", 1, RegisterRole::kFlag);
  b.begin_capture();
  filling(b, idx, sys);
  Fragment prep = b.end_capture();
  b.begin_capture();
  frag::exact_t(b, sys, k, flag[0]);
  Fragment oracle = b.end_capture();

  uint64_t ambient = 1, good = 1;
  for (int m = 0; m < k; ++m) {
    ambient *= static_cast<uint64_t>(n);
    good *= static_cast<uint64_t>(n - m);
  }
  const double pre = good_probability(b.num_qubits(), prep, oracle, flag[0]);
  const AmplificationPlan pl = plan(ambient, good);
  amplify(b, concat({concat(idx), sys}), prep, oracle, flag[0], pl);
  info["filtering"] = {{"N", ambient},
                       {"m", good},
                       {"J", pl.J},
                       {"phi", pl.phi},
                       {"pre_amplification_good_probability", pre},
                       {"expected_good_probability", static_cast<double>(good) / static_cast<double>(ambient)},
                       {"birthday_lower_bound", std::exp(-2.0 * k * k / n)}};

  ordering(b, idx, info);

  bool gadget = options.cleaning == DickeOptions::Cleaning::kGadget ||
                (options.cleaning == DickeOptions::Cleaning::kAuto && n <= 4);
  if (gadget) {
    cleaning_gadget(b, idx, sys);
  } else {
    b.macro(macros::dicke_clean(n, k, L), concat({sys, concat(idx)}));
  }
  info["cleaning"] = gadget ? "gadget" : "semantic";

  Protocol p;
  p.program = b.build("dicke_small_k");
  p.target = dicke_target(n, k);
  p.outputs = sys;
  p.info = info;
  return p;
}

namespace {

// Uniform superposition over len-digit factoradics, digits packed y_{len-1} first.
void factoradic_digits(ProgramBuilder& b, const std::vector<Qubit>& reg, int len) {
  size_t pos = 0;
  for (int j = len - 1; j >= 0; --j) {
    const int w = numbers::digit_width(j);
    if (j >= 1) uniform_fragment(b, slice(reg, pos, static_cast<size_t>(w)), static_cast<uint64_t>(j + 1));
    pos += static_cast<size_t>(w);
  }
}

std::vector<Qubit> allocate_maybe(ProgramBuilder& b, const std::string& name, int count, RegisterRole role) {
  if (count == 0) return {};
  return b.allocate(name, count, role);
}

}  // namespace

Protocol dicke_factoradic(int n, int k) {
  if (n < 1 || n > 20 || k < 0 || k > n) throw ValidationError("dicke_factoradic needs 1 <= n <= 20 and 0 <= k <= n");
  ProgramBuilder b;
  auto sys = b.allocate("system", n, RegisterRole::kSystem);
  auto y = allocate_maybe(b, "factoradic", macros::factoradic_register_width(n), RegisterRole::kIndex);
  auto z = allocate_maybe(b, "zeros_digits", macros::factoradic_register_width(n - k), RegisterRole::kAncilla);
  auto o = allocate_maybe(b, "ones_digits", macros::factoradic_register_width(k), RegisterRole::kAncilla);

  b.begin_parallel();
  factoradic_digits(b, y, n);
  b.end_parallel();
  b.macro(macros::fac_to_comb(n, k), concat({y, sys}));
  if (!y.empty() && !(z.empty() && o.empty())) b.macro(macros::fac_decompose(n, k), concat({y, z, o}));
  if (!y.empty()) b.macro(macros::comb_to_fac(n, k), concat({sys, z, o, y}));
  b.begin_capture();
  b.begin_parallel();
  factoradic_digits(b, z, n - k);
  factoradic_digits(b, o, k);
  b.end_parallel();
  Fragment fresh = b.end_capture();
  b.append(fresh.inverse());

  Protocol p;
  p.program = b.build("dicke_factoradic");
  p.target = dicke_target(n, k);
  p.outputs = sys;
  p.info = {{"protocol", "dicke_factoradic"}, {"n", n}, {"k", k}};
  return p;
}

IqpGate iqp_diagonal(std::vector<int> support, const std::vector<Complex>& phases) {
  const size_t d = size_t{1} << support.size();
  if (phases.size() != d) throw DimensionError("diagonal phase count must be 2^|support|");
  IqpGate g;
  g.support = std::move(support);
  g.matrix.assign(d * d, 0.0);
  for (size_t i = 0; i < d; ++i) g.matrix[i * d + i] = phases[i];
  return g;
}

std::vector<IqpGate> random_iqp(int n, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_int_distribution<int> width(1, std::min(3, n));
  std::vector<IqpGate> out;
  for (int g = 0; g < count; ++g) {
    std::vector<int> qs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) qs[static_cast<size_t>(i)] = i;
    std::shuffle(qs.begin(), qs.end(), rng);
    qs.resize(static_cast<size_t>(width(rng)));
    std::vector<Complex> ph(size_t{1} << qs.size());
    for (auto& p : ph) p = std::polar(1.0, angle(rng));
    out.push_back(iqp_diagonal(qs, ph));
  }
  return out;
}

Protocol iqp(int n, const std::vector<IqpGate>& gates_in, FanoutBackend backend) {
  if (n < 1) throw ValidationError("iqp needs n >= 1");
  ProgramBuilder b;
  auto sys = b.allocate("system", n, RegisterRole::kSystem);
  std::vector<frag::CommutingGate> cg;
  for (const auto& g : gates_in) cg.push_back({g.support, g.matrix, std::nullopt});
  for (Qubit q : sys) b.gate(gates::h(), {q});
  frag::parallelize_commuting(b, sys, cg, {}, backend);
  for (Qubit q : sys) b.gate(gates::h(), {q});
  std::string label = b.measure(sys, "sample");
  Protocol p;
  p.program = b.build("iqp");
  p.outputs = sys;
  p.info = {{"protocol", "iqp"}, {"n", n}, {"gates", gates_in.size()}, {"sample_label", label},
            {"backend", backend_name(backend)}};
  return p;
}

std::map<BasisKey, double> iqp_direct_distribution(int n, const std::vector<IqpGate>& gates_in) {
  SparseState s(n);
  for (int q = 0; q < n; ++q) s.apply(gates::h(), std::vector<Qubit>{q});
  for (const auto& g : gates_in) {
    Unitary u{"diag", static_cast<int>(g.support.size()), g.matrix};
    if (!u.is_diagonal(1e-12)) throw NonCommutingError("IQP gates must be diagonal");
    s.apply(u, g.support);
  }
  for (int q = 0; q < n; ++q) s.apply(gates::h(), std::vector<Qubit>{q});
  std::vector<Qubit> all(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<size_t>(q)] = q;
  return marginal(s, all);
}

}  // namespace laqcc
