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

#include "laqcc/macros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "laqcc/error.hpp"
#include "laqcc/numbersys.hpp"

namespace laqcc {

void Macro::permute(BasisKey&, std::span<const Qubit>) const {
  throw ValidationError("macro " + kind() + " is not a basis permutation");
}

void Macro::expand(const BasisKey& key, std::span<const Qubit> qubits,
                   std::vector<std::pair<BasisKey, Complex>>& out) const {
  BasisKey k = key;
  permute(k, qubits);
  out.emplace_back(k, Complex(1.0));
}

void apply_macro(SparseState& s, const Macro& m, std::span<const Qubit> qubits,
                 std::span<const Qubit> controls) {
  if (static_cast<int>(qubits.size()) != m.arity()) {
    throw ValidationError("macro " + m.kind() + " expects " +
                          std::to_string(m.arity()) + " qubits, got " +
                          std::to_string(qubits.size()));
  }
  std::vector<Qubit> all(qubits.begin(), qubits.end());
  all.insert(all.end(), controls.begin(), controls.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw RegisterOverlapError("macro " + m.kind() + " applied to overlapping qubits");
  }
  for (Qubit q : all) {
    if (q < 0 || q >= s.num_qubits()) throw IndexError("macro qubit out of range");
  }
  auto active = [&](const BasisKey& k) {
    for (Qubit c : controls) {
      if (!k.test(c)) return false;
    }
    return true;
  };
  SparseState::Map out;
  out.reserve(s.support());
  if (m.is_permutation()) {
    for (const auto& [k, a] : s.amplitudes()) {
      BasisKey nk = k;
      if (active(k)) m.permute(nk, qubits);
      out[nk] += a;
    }
  } else {
    std::vector<std::pair<BasisKey, Complex>> img;
    for (const auto& [k, a] : s.amplitudes()) {
      if (!active(k)) {
        out[k] += a;
        continue;
      }
      img.clear();
      m.expand(k, qubits, img);
      for (const auto& [nk, c] : img) out[nk] += c * a;
    }
  }
  s.assign(std::move(out));
  s.prune();
}

namespace {

using nlohmann::json;

uint64_t low_mask(int w) { return w >= 64 ? ~0ULL : ((1ULL << w) - 1); }

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

class Fanout final : public Macro {
 public:
  explicit Fanout(int m) : m_(m) { require(m >= 1, "fanout needs at least one target"); }
  std::string kind() const override { return "fanout"; }
  int arity() const override { return m_ + 1; }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    if (!k.test(q[0])) return;
    for (int i = 1; i <= m_; ++i) k.flip(q[static_cast<size_t>(i)]);
  }
  MacroPtr inverse() const override { return std::make_shared<Fanout>(m_); }
  json params() const override { return {{"targets", m_}}; }
  int charge_size() const override { return m_; }

 private:
  int m_;
};

class Permutation final : public Macro {
 public:
  explicit Permutation(std::vector<int> p) : p_(std::move(p)) {
    std::vector<int> s = p_;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
      require(s[i] == static_cast<int>(i), "permutation must be a bijection of 0..n-1");
    }
    require(!p_.empty(), "empty permutation");
  }
  std::string kind() const override { return "permutation"; }
  int arity() const override { return static_cast<int>(p_.size()); }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    std::vector<uint8_t> v(p_.size());
    for (size_t i = 0; i < p_.size(); ++i) v[i] = k.test(q[i]);
    for (size_t i = 0; i < p_.size(); ++i) k.set(q[i], v[static_cast<size_t>(p_[i])]);
  }
  MacroPtr inverse() const override {
    std::vector<int> inv(p_.size());
    for (size_t i = 0; i < p_.size(); ++i) inv[static_cast<size_t>(p_[i])] = static_cast<int>(i);
    return std::make_shared<Permutation>(inv);
  }
  json params() const override { return {{"perm", p_}}; }

 private:
  std::vector<int> p_;
};

// out ^= f(inputs) where f depends only on the input bits.
class FlagMacro : public Macro {
 public:
  explicit FlagMacro(int n) : n_(n) { require(n >= 0, "negative register width"); }
  int arity() const override { return n_ + 1; }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    if (flag(k, q.first(static_cast<size_t>(n_)))) k.flip(q[static_cast<size_t>(n_)]);
  }
  int charge_size() const override { return n_; }
  virtual bool flag(const BasisKey& k, std::span<const Qubit> in) const = 0;

 protected:
  int n_;
};

class Or final : public FlagMacro {
 public:
  using FlagMacro::FlagMacro;
  std::string kind() const override { return "or"; }
  bool flag(const BasisKey& k, std::span<const Qubit> in) const override {
    return std::any_of(in.begin(), in.end(), [&](Qubit q) { return k.test(q); });
  }
  MacroPtr inverse() const override { return std::make_shared<Or>(n_); }
  json params() const override { return {{"n", n_}}; }
};

class And final : public FlagMacro {
 public:
  using FlagMacro::FlagMacro;
  std::string kind() const override { return "and"; }
  bool flag(const BasisKey& k, std::span<const Qubit> in) const override {
    return std::all_of(in.begin(), in.end(), [&](Qubit q) { return k.test(q); });
  }
  MacroPtr inverse() const override { return std::make_shared<And>(n_); }
  json params() const override { return {{"n", n_}}; }
};

class Equal final : public FlagMacro {
 public:
  Equal(int n, uint64_t v) : FlagMacro(n), v_(v) {
    require(n <= 64, "equal supports at most 64 bits");
  }
  std::string kind() const override { return "equal"; }
  bool flag(const BasisKey& k, std::span<const Qubit> in) const override {
    return k.extract(in) == v_;
  }
  MacroPtr inverse() const override { return std::make_shared<Equal>(n_, v_); }
  json params() const override { return {{"n", n_}, {"value", v_}}; }

 private:
  uint64_t v_;
};

class Exact final : public FlagMacro {
 public:
  Exact(int n, int t) : FlagMacro(n), t_(t) {}
  std::string kind() const override { return "exact"; }
  bool flag(const BasisKey& k, std::span<const Qubit> in) const override {
    return k.popcount(in) == t_;
  }
  MacroPtr inverse() const override { return std::make_shared<Exact>(n_, t_); }
  json params() const override { return {{"n", n_}, {"t", t_}}; }

 private:
  int t_;
};

class Threshold final : public FlagMacro {
 public:
  Threshold(std::vector<int64_t> w, int64_t t)
      : FlagMacro(static_cast<int>(w.size())), w_(std::move(w)), t_(t) {}
  std::string kind() const override { return "threshold"; }
  bool flag(const BasisKey& k, std::span<const Qubit> in) const override {
    int64_t acc = 0;
    for (size_t i = 0; i < in.size(); ++i) {
      if (k.test(in[i])) acc += w_[i];
    }
    return acc >= t_;
  }
  MacroPtr inverse() const override { return std::make_shared<Threshold>(w_, t_); }
  json params() const override { return {{"weights", w_}, {"t", t_}}; }
  int charge_t() const override { return static_cast<int>(std::max<int64_t>(1, t_)); }

 private:
  std::vector<int64_t> w_;
  int64_t t_;
};

class Add final : public Macro {
 public:
  Add(int nx, int ny, bool sub) : nx_(nx), ny_(ny), sub_(sub) {
    require(nx >= 1 && ny >= 1 && nx <= 63 && ny <= 63, "adder widths must be in 1..63");
  }
  std::string kind() const override { return "add"; }
  int arity() const override { return nx_ + ny_; }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    const auto xs = q.first(static_cast<size_t>(nx_));
    const auto ys = q.subspan(static_cast<size_t>(nx_));
    const uint64_t x = k.extract(xs);
    const uint64_t y = k.extract(ys);
    const uint64_t r = (sub_ ? y - x : y + x) & low_mask(ny_);
    k.deposit(ys, r);
  }
  MacroPtr inverse() const override { return std::make_shared<Add>(nx_, ny_, !sub_); }
  json params() const override { return {{"nx", nx_}, {"ny", ny_}, {"subtract", sub_}}; }
  int charge_size() const override { return std::max(nx_, ny_); }

 private:
  int nx_, ny_;
  bool sub_;
};

class HammingWeight final : public Macro {
 public:
  HammingWeight(int n, int w) : n_(n), w_(w) {
    require(n >= 0 && w >= 1 && w <= 63, "invalid hammingweight widths");
  }
  std::string kind() const override { return "hammingweight"; }
  int arity() const override { return n_ + w_; }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    const auto xs = q.first(static_cast<size_t>(n_));
    const auto os = q.subspan(static_cast<size_t>(n_));
    const uint64_t c = static_cast<uint64_t>(k.popcount(xs));
    k.deposit(os, (k.extract(os) ^ c) & low_mask(w_));
  }
  MacroPtr inverse() const override { return std::make_shared<HammingWeight>(n_, w_); }
  json params() const override { return {{"n", n_}, {"w", w_}}; }
  int charge_size() const override { return n_; }

 private:
  int n_, w_;
};

class Qft final : public Macro {
 public:
  Qft(int n, bool inv) : n_(n), inv_(inv) { require(n >= 1 && n <= 20, "qft width must be in 1..20"); }
  std::string kind() const override { return "qft"; }
  int arity() const override { return n_; }
  bool is_permutation() const override { return false; }
  void expand(const BasisKey& key, std::span<const Qubit> q,
              std::vector<std::pair<BasisKey, Complex>>& out) const override {
    const uint64_t dim = 1ULL << n_;
    const uint64_t x = key.extract(q);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    const double sign = inv_ ? -1.0 : 1.0;
    BasisKey k = key;
    for (uint64_t j = 0; j < dim; ++j) {
      const uint64_t xj = (x * j) & (dim - 1);
      const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(xj) /
                         static_cast<double>(dim);
      k.deposit(q, j);
      out.emplace_back(k, norm * Complex(std::cos(ang), std::sin(ang)));
    }
  }
  MacroPtr inverse() const override { return std::make_shared<Qft>(n_, !inv_); }
  json params() const override { return {{"n", n_}, {"inverse", inv_}}; }

 private:
  int n_;
  bool inv_;
};

class Diagonal final : public Macro {
 public:
  explicit Diagonal(std::vector<Complex> ph) : ph_(std::move(ph)) {
    int k = 0;
    while ((size_t{1} << k) < ph_.size()) ++k;
    require(k >= 1 && (size_t{1} << k) == ph_.size(), "diagonal needs 2^k entries, k >= 1");
    for (const Complex& c : ph_) {
      require(std::abs(std::abs(c) - 1.0) < 1e-12, "diagonal entries must have modulus 1");
    }
    k_ = k;
  }
  std::string kind() const override { return "diagonal"; }
  int arity() const override { return k_; }
  bool is_permutation() const override { return false; }
  void expand(const BasisKey& key, std::span<const Qubit> q,
              std::vector<std::pair<BasisKey, Complex>>& out) const override {
    out.emplace_back(key, ph_[key.extract(q)]);
  }
  MacroPtr inverse() const override {
    std::vector<Complex> c(ph_.size());
    std::transform(ph_.begin(), ph_.end(), c.begin(), [](Complex z) { return std::conj(z); });
    return std::make_shared<Diagonal>(c);
  }
  json params() const override {
    json re = json::array(), im = json::array();
    for (const Complex& c : ph_) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    return {{"re", re}, {"im", im}};
  }

 private:
  std::vector<Complex> ph_;
  int k_ = 1;
};

class TruthTable final : public Macro {
 public:
  TruthTable(int nin, int nout, std::vector<uint64_t> t) : nin_(nin), nout_(nout), t_(std::move(t)) {
    require(nin >= 0 && nin <= 20 && nout >= 1 && nout <= 64, "truth table widths out of range");
    require(t_.size() == (size_t{1} << nin), "truth table needs 2^nin rows");
  }
  std::string kind() const override { return "truth_table"; }
  int arity() const override { return nin_ + nout_; }
  void permute(BasisKey& k, std::span<const Qubit> q) const override {
    const auto in = q.first(static_cast<size_t>(nin_));
    const auto os = q.subspan(static_cast<size_t>(nin_));
    k.deposit(os, k.extract(os) ^ (t_[k.extract(in)] & low_mask(nout_)));
  }
  MacroPtr inverse() const override { return std::make_shared<TruthTable>(nin_, nout_, t_); }
  json params() const override { return {{"nin", nin_}, {"nout", nout_}, {"table", t_}}; }

 private:
  int nin_, nout_;
  std::vector<uint64_t> t_;
};

// Packed factoradic register helpers.
struct FacLayout {
  int n = 0;
  std::vector<int> widths;  // widths[j] for digit j
  int total = 0;
  explicit FacLayout(int len) : n(len), widths(static_cast<size_t>(std::max(0, len)), 0) {
    for (int j = 0; j < len; ++j) {
      widths[static_cast<size_t>(j)] = numbers::digit_width(j);
      total += widths[static_cast<size_t>(j)];
    }
  }
  // Digit y_{n-1} occupies the first slots.
  bool read(const BasisKey& k, std::span<const Qubit> q, numbers::Factoradic& out) const {
    std::vector<int> d;
    size_t pos = 0;
    for (int j = n - 1; j >= 0; --j) {
      const int w = widths[static_cast<size_t>(j)];
      const int v = static_cast<int>(k.extract(q.subspan(pos, static_cast<size_t>(w))));
      if (v > j) return false;
      d.push_back(v);
      pos += static_cast<size_t>(w);
    }
    out = numbers::Factoradic(d);
    return true;
  }
  void xor_in(BasisKey& k, std::span<const Qubit> q, const numbers::Factoradic& y) const {
    size_t pos = 0;
    for (int j = n - 1; j >= 0; --j) {
      const int w = widths[static_cast<size_t>(j)];
      const auto part = q.subspan(pos, static_cast<size_t>(w));
      k.deposit(part, k.extract(part) ^ static_cast<uint64_t>(y.digit(j)));
      pos += static_cast<size_t>(w);
    }
  }
};

class FacToComb final : public Macro {
 public:
  FacToComb(int n, int k) : n_(n), k_(k), y_(n) { require(k >= 0 && k <= n, "need 0 <= k <= n"); }
  std::string kind() const override { return "fac_to_comb"; }
  int arity() const override { return y_.total + n_; }
  void permute(BasisKey& key, std::span<const Qubit> q) const override {
    numbers::Factoradic y;
    if (!y_.read(key, q.first(static_cast<size_t>(y_.total)), y)) return;
    const auto s = numbers::fac_to_comb(y, k_);
    const auto out = q.subspan(static_cast<size_t>(y_.total));
    for (int p = 0; p < n_; ++p) {
      if (s[static_cast<size_t>(p)]) key.flip(out[static_cast<size_t>(p)]);
    }
  }
  MacroPtr inverse() const override { return std::make_shared<FacToComb>(n_, k_); }
  json params() const override { return {{"n", n_}, {"k", k_}}; }
  int charge_size() const override { return n_; }

 private:
  int n_, k_;
  FacLayout y_;
};

class FacDecompose final : public Macro {
 public:
  FacDecompose(int n, int k) : n_(n), k_(k), y_(n), z_(n - k), o_(k) {
    require(k >= 0 && k <= n, "need 0 <= k <= n");
  }
  std::string kind() const override { return "fac_decompose"; }
  int arity() const override { return y_.total + z_.total + o_.total; }
  void permute(BasisKey& key, std::span<const Qubit> q) const override {
    numbers::Factoradic y;
    if (!y_.read(key, q.first(static_cast<size_t>(y_.total)), y)) return;
    const auto d = numbers::fac_decompose(y, k_);
    z_.xor_in(key, q.subspan(static_cast<size_t>(y_.total), static_cast<size_t>(z_.total)), d.z);
    o_.xor_in(key, q.subspan(static_cast<size_t>(y_.total + z_.total)), d.o);
  }
  MacroPtr inverse() const override { return std::make_shared<FacDecompose>(n_, k_); }
  json params() const override { return {{"n", n_}, {"k", k_}}; }
  int charge_size() const override { return n_; }

 private:
  int n_, k_;
  FacLayout y_, z_, o_;
};

class CombToFac final : public Macro {
 public:
  CombToFac(int n, int k) : n_(n), k_(k), z_(n - k), o_(k), y_(n) {
    require(k >= 0 && k <= n, "need 0 <= k <= n");
  }
  std::string kind() const override { return "comb_to_fac"; }
  int arity() const override { return n_ + z_.total + o_.total + y_.total; }
  void permute(BasisKey& key, std::span<const Qubit> q) const override {
    numbers::Bitstring s(static_cast<size_t>(n_));
    for (int p = 0; p < n_; ++p) s[static_cast<size_t>(p)] = key.test(q[static_cast<size_t>(p)]);
    if (numbers::weight(s) != k_) return;
    numbers::Factoradic z, o;
    size_t pos = static_cast<size_t>(n_);
    if (!z_.read(key, q.subspan(pos, static_cast<size_t>(z_.total)), z)) return;
    pos += static_cast<size_t>(z_.total);
    if (!o_.read(key, q.subspan(pos, static_cast<size_t>(o_.total)), o)) return;
    pos += static_cast<size_t>(o_.total);
    y_.xor_in(key, q.subspan(pos), numbers::comb_to_fac(s, z, o));
  }
  MacroPtr inverse() const override { return std::make_shared<CombToFac>(n_, k_); }
  json params() const override { return {{"n", n_}, {"k", k_}}; }
  int charge_size() const override { return n_; }

 private:
  int n_, k_;
  FacLayout z_, o_, y_;
};

class DickeClean final : public Macro {
 public:
  DickeClean(int n, int k, int l) : n_(n), k_(k), l_(l) {
    require(n >= 1 && k >= 1 && k <= n && l >= 1 && l <= 63 && (1LL << l) >= n,
            "invalid dicke_clean parameters");
  }
  std::string kind() const override { return "dicke_clean"; }
  int arity() const override { return n_ + k_ * l_; }
  void permute(BasisKey& key, std::span<const Qubit> q) const override {
    if (key.popcount(q.first(static_cast<size_t>(n_))) != k_) return;
    int m = 0;
    for (int p = 0; p < n_; ++p) {
      if (!key.test(q[static_cast<size_t>(p)])) continue;
      const auto idx = q.subspan(static_cast<size_t>(n_ + m * l_), static_cast<size_t>(l_));
      key.deposit(idx, key.extract(idx) ^ static_cast<uint64_t>(p));
      ++m;
    }
  }
  MacroPtr inverse() const override { return std::make_shared<DickeClean>(n_, k_, l_); }
  json params() const override { return {{"n", n_}, {"k", k_}, {"index_bits", l_}}; }
  int charge_size() const override { return n_; }

 private:
  int n_, k_, l_;
};

}  // namespace

namespace macros {

MacroPtr fanout(int targets) { return std::make_shared<Fanout>(targets); }
MacroPtr permutation(std::vector<int> perm) { return std::make_shared<Permutation>(std::move(perm)); }
MacroPtr or_gate(int n) { return std::make_shared<Or>(n); }
MacroPtr and_gate(int n) { return std::make_shared<And>(n); }
MacroPtr equal(int n, uint64_t value) { return std::make_shared<Equal>(n, value); }
MacroPtr add(int nx, int ny, bool subtract) { return std::make_shared<Add>(nx, ny, subtract); }
MacroPtr hammingweight(int n, int w) { return std::make_shared<HammingWeight>(n, w); }
MacroPtr exact(int n, int t) { return std::make_shared<Exact>(n, t); }
MacroPtr threshold(std::vector<int64_t> weights, int64_t t) {
  return std::make_shared<Threshold>(std::move(weights), t);
}
MacroPtr qft(int n, bool inverse) { return std::make_shared<Qft>(n, inverse); }
MacroPtr diagonal(std::vector<Complex> phases) { return std::make_shared<Diagonal>(std::move(phases)); }
MacroPtr truth_table(int nin, int nout, std::vector<uint64_t> table) {
  return std::make_shared<TruthTable>(nin, nout, std::move(table));
}
MacroPtr fac_to_comb(int n, int k) { return std::make_shared<FacToComb>(n, k); }
MacroPtr fac_decompose(int n, int k) { return std::make_shared<FacDecompose>(n, k); }
MacroPtr comb_to_fac(int n, int k) { return std::make_shared<CombToFac>(n, k); }
MacroPtr dicke_clean(int n, int k, int index_bits) {
  return std::make_shared<DickeClean>(n, k, index_bits);
}

int factoradic_register_width(int n) { return FacLayout(n).total; }

}  // namespace macros

MacroPtr make_macro(const std::string& kind, const nlohmann::json& p) {
  try {
    if (kind == "fanout") return macros::fanout(p.at("targets").get<int>());
    if (kind == "permutation") return macros::permutation(p.at("perm").get<std::vector<int>>());
    if (kind == "or") return macros::or_gate(p.at("n").get<int>());
    if (kind == "and") return macros::and_gate(p.at("n").get<int>());
    if (kind == "equal") return macros::equal(p.at("n").get<int>(), p.at("value").get<uint64_t>());
    if (kind == "add") {
      return macros::add(p.at("nx").get<int>(), p.at("ny").get<int>(), p.value("subtract", false));
    }
    if (kind == "hammingweight") return macros::hammingweight(p.at("n").get<int>(), p.at("w").get<int>());
    if (kind == "exact") return macros::exact(p.at("n").get<int>(), p.at("t").get<int>());
    if (kind == "threshold") {
      return macros::threshold(p.at("weights").get<std::vector<int64_t>>(), p.at("t").get<int64_t>());
    }
    if (kind == "qft") return macros::qft(p.at("n").get<int>(), p.value("inverse", false));
    if (kind == "diagonal") {
      const auto re = p.at("re").get<std::vector<double>>();
      const auto im = p.at("im").get<std::vector<double>>();
      if (re.size() != im.size()) throw ValidationError("diagonal re/im length mismatch");
      std::vector<Complex> ph(re.size());
      for (size_t i = 0; i < re.size(); ++i) ph[i] = Complex(re[i], im[i]);
      return macros::diagonal(ph);
    }
    if (kind == "truth_table") {
      return macros::truth_table(p.at("nin").get<int>(), p.at("nout").get<int>(),
                                 p.at("table").get<std::vector<uint64_t>>());
    }
    if (kind == "fac_to_comb") return macros::fac_to_comb(p.at("n").get<int>(), p.at("k").get<int>());
    if (kind == "fac_decompose") return macros::fac_decompose(p.at("n").get<int>(), p.at("k").get<int>());
    if (kind == "comb_to_fac") return macros::comb_to_fac(p.at("n").get<int>(), p.at("k").get<int>());
    if (kind == "dicke_clean") {
      return macros::dicke_clean(p.at("n").get<int>(), p.at("k").get<int>(),
                                 p.at("index_bits").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("bad parameters for macro " + kind + ": " + e.what());
  }
  throw ValidationError("unknown macro kind '" + kind + "'");
}

}  // namespace laqcc
