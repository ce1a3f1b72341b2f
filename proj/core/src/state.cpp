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

#include "laqcc/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "laqcc/error.hpp"

namespace laqcc {

namespace {

void check_qubits(int n, std::span<const Qubit> targets,
                  std::span<const Qubit> controls) {
  std::set<Qubit> seen;
  auto check = [&](Qubit q) {
    if (q < 0 || q >= n) {
      throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                       std::to_string(n) + " qubits");
    }
    if (!seen.insert(q).second) {
      throw ValidationError("qubit " + std::to_string(q) + " repeated");
    }
  };
  for (Qubit q : targets) check(q);
  for (Qubit q : controls) check(q);
}

bool controls_set(const BasisKey& k, std::span<const Qubit> controls) {
  for (Qubit c : controls) {
    if (!k.test(c)) return false;
  }
  return true;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Unitary Unitary::adjoint() const {
  const int d = 1 << arity;
  Unitary u{name + "_dg", arity, std::vector<Complex>(m.size())};
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) u.m[c * d + r] = std::conj(m[r * d + c]);
  }
  return u;
}

bool Unitary::is_unitary(double tol) const {
  const int d = 1 << arity;
  if (arity < 1 || arity > kMaxDenseArity || static_cast<int>(m.size()) != d * d) return false;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      Complex acc = 0;
      for (int k = 0; k < d; ++k) acc += std::conj(m[k * d + r]) * m[k * d + c];
      if (std::abs(acc - Complex(r == c ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

bool Unitary::is_diagonal(double tol) const {
  const int d = 1 << arity;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (r != c && std::abs(m[r * d + c]) > tol) return false;
    }
  }
  return true;
}

SparseState::SparseState(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw IndexError("qubit count out of range");
  }
  amp_.emplace(BasisKey{}, Complex(1.0));
}

SparseState SparseState::basis(int num_qubits, const BasisKey& key) {
  SparseState s(num_qubits);
  if (key.exceeds(num_qubits)) throw IndexError("basis index exceeds qubit count");
  s.amp_.clear();
  s.amp_.emplace(key, Complex(1.0));
  return s;
}

SparseState SparseState::from_amplitudes(
    int num_qubits, const std::vector<std::pair<BasisKey, Complex>>& amps) {
  SparseState s(num_qubits);
  s.amp_.clear();
  for (const auto& [k, a] : amps) {
    if (k.exceeds(num_qubits)) throw IndexError("basis index exceeds qubit count");
    s.amp_[k] += a;
  }
  s.prune();
  if (s.amp_.empty()) throw ValidationError("zero vector");
  s.normalize();
  return s;
}

Complex SparseState::amplitude(const BasisKey& k) const {
  auto it = amp_.find(k);
  return it == amp_.end() ? Complex(0.0) : it->second;
}

double SparseState::norm_squared() const {
  double acc = 0.0;
  for (const auto& [k, a] : amp_) acc += std::norm(a);
  return acc;
}

std::vector<std::pair<BasisKey, Complex>> SparseState::sorted() const {
  std::vector<std::pair<BasisKey, Complex>> v(amp_.begin(), amp_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

void SparseState::apply(const Unitary& u, std::span<const Qubit> targets,
                        std::span<const Qubit> controls) {
  if (static_cast<int>(targets.size()) != u.arity) {
    throw ValidationError("gate " + u.name + " expects " +
                          std::to_string(u.arity) + " targets");
  }
  if (!u.is_unitary()) throw ValidationError("gate " + u.name + " is not unitary");
  check_qubits(n_, targets, controls);
  const int d = 1 << u.arity;
  Map out;
  out.reserve(amp_.size() * 2);
  for (const auto& [k, a] : amp_) {
    if (!controls_set(k, controls)) {
      out[k] += a;
      continue;
    }
    const uint64_t col = k.extract(targets);
    BasisKey nk = k;
    for (int r = 0; r < d; ++r) {
      const Complex c = u.m[r * d + static_cast<int>(col)];
      if (c == Complex(0.0)) continue;
      nk.deposit(targets, static_cast<uint64_t>(r));
      out[nk] += c * a;
    }
  }
  amp_ = std::move(out);
  prune();
}

void SparseState::x(Qubit q) {
  if (q < 0 || q >= n_) throw IndexError("qubit out of range");
  Map out;
  out.reserve(amp_.size());
  for (const auto& [k, a] : amp_) {
    BasisKey nk = k;
    nk.flip(q);
    out.emplace(nk, a);
  }
  amp_ = std::move(out);
}

void SparseState::prune() {
  for (auto it = amp_.begin(); it != amp_.end();) {
    if (std::abs(it->second) < kPruneThreshold) {
      it = amp_.erase(it);
    } else {
      ++it;
    }
  }
}

void SparseState::normalize() {
  const double nrm = std::sqrt(norm_squared());
  if (nrm == 0.0) throw ValidationError("cannot normalize zero vector");
  for (auto& [k, a] : amp_) a /= nrm;
}

void SparseState::widen(int num_qubits) {
  if (num_qubits < n_ || num_qubits > kMaxQubits) {
    throw IndexError("invalid widening");
  }
  n_ = num_qubits;
}

void SparseState::scale(Complex c) {
  for (auto& [k, a] : amp_) a *= c;
}

const char* role_name(RegisterRole r) {
  switch (r) {
    case RegisterRole::kIndex:
      return "index";
    case RegisterRole::kSystem:
      return "system";
    case RegisterRole::kAncilla:
      return "ancilla";
    case RegisterRole::kFlag:
      return "flag";
  }
  return "ancilla";
}

RegisterRole role_from_name(const std::string& s) {
  if (s == "index") return RegisterRole::kIndex;
  if (s == "system") return RegisterRole::kSystem;
  if (s == "ancilla") return RegisterRole::kAncilla;
  if (s == "flag") return RegisterRole::kFlag;
  throw ValidationError("unknown register role '" + s + "'");
}

const Register& RegisterMap::add(std::string name, RegisterRole role,
                                 std::vector<Qubit> qubits) {
  if (contains(name)) throw RegisterOverlapError("duplicate register " + name);
  std::set<Qubit> used;
  for (const auto& r : regs_) used.insert(r.qubits.begin(), r.qubits.end());
  for (Qubit q : qubits) {
    if (!used.insert(q).second) {
      throw RegisterOverlapError("register " + name + " reuses qubit " +
                                 std::to_string(q));
    }
  }
  regs_.push_back(Register{std::move(name), role, std::move(qubits)});
  return regs_.back();
}

const Register& RegisterMap::get(const std::string& name) const {
  for (const auto& r : regs_) {
    if (r.name == name) return r;
  }
  throw IndexError("no register named " + name);
}

bool RegisterMap::contains(const std::string& name) const {
  return std::any_of(regs_.begin(), regs_.end(),
                     [&](const Register& r) { return r.name == name; });
}

std::vector<Qubit> RegisterMap::qubits_with_role(RegisterRole role) const {
  std::vector<Qubit> out;
  for (const auto& r : regs_) {
    if (r.role == role) out.insert(out.end(), r.qubits.begin(), r.qubits.end());
  }
  return out;
}

bool RegisterMap::covers(int num_qubits) const {
  std::vector<int> hits(static_cast<size_t>(num_qubits), 0);
  for (const auto& r : regs_) {
    for (Qubit q : r.qubits) {
      if (q < 0 || q >= num_qubits || hits[static_cast<size_t>(q)]++) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::map<BasisKey, double> marginal(const SparseState& s,
                                    std::span<const Qubit> qubits) {
  check_qubits(s.num_qubits(), qubits, {});
  std::map<BasisKey, double> dist;
  for (const auto& [k, a] : s.amplitudes()) dist[k.gather(qubits)] += std::norm(a);
  return dist;
}

SparseState apply_gate(const SparseState& s, const Unitary& u,
                       std::span<const Qubit> targets,
                       std::span<const Qubit> controls) {
  SparseState out = s;
  out.apply(u, targets, controls);
  return out;
}

namespace {

MeasureOutcome project(const SparseState& s, std::span<const Qubit> qubits,
                       const BasisKey& packed, double p) {
  SparseState::Map kept;
  const double inv = 1.0 / std::sqrt(p);
  for (const auto& [k, a] : s.amplitudes()) {
    if (k.gather(qubits) == packed) kept.emplace(k, a * inv);
  }
  MeasureOutcome out;
  out.bits.resize(qubits.size());
  for (size_t i = 0; i < qubits.size(); ++i) {
    out.bits[i] = packed.test(static_cast<Qubit>(i));
  }
  out.probability = p;
  out.post = SparseState(s.num_qubits());
  out.post.assign(std::move(kept));
  return out;
}

}  // namespace

MeasureOutcome measure(const SparseState& s, std::span<const Qubit> qubits,
                       std::mt19937_64& rng) {
  const auto dist = marginal(s, qubits);
  double total = 0.0;
  for (const auto& [k, p] : dist) total += p;
  const double r = uniform01(rng) * total;
  double acc = 0.0;
  const std::pair<const BasisKey, double>* pick = nullptr;
  for (const auto& e : dist) {
    if (e.second <= kPruneThreshold) continue;
    pick = &e;
    acc += e.second;
    if (r < acc) break;
  }
  if (pick == nullptr) throw InfeasibleBranchError("state has no support");
  return project(s, qubits, pick->first, pick->second / total);
}

MeasureOutcome measure_forced(const SparseState& s,
                              std::span<const Qubit> qubits,
                              const Bits& outcome) {
  if (outcome.size() != qubits.size()) {
    throw ValidationError("forced outcome length does not match qubit count");
  }
  check_qubits(s.num_qubits(), qubits, {});
  BasisKey packed;
  for (size_t i = 0; i < outcome.size(); ++i) {
    packed.set(static_cast<Qubit>(i), outcome[i] != 0);
  }
  double p = 0.0;
  for (const auto& [k, a] : s.amplitudes()) {
    if (k.gather(qubits) == packed) p += std::norm(a);
  }
  if (p <= kPruneThreshold) {
    throw InfeasibleBranchError("forced outcome " + bits_to_string(outcome) +
                                " has zero probability");
  }
  return project(s, qubits, packed, p);
}

std::vector<MeasureOutcome> branch_enumerate(const SparseState& s,
                                             std::span<const Qubit> qubits) {
  std::vector<MeasureOutcome> out;
  for (const auto& [packed, p] : marginal(s, qubits)) {
    if (p > kPruneThreshold) out.push_back(project(s, qubits, packed, p));
  }
  return out;
}

double fidelity(const SparseState& a, const SparseState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("fidelity of states with different qubit counts");
  }
  const auto& small = a.support() <= b.support() ? a : b;
  const auto& large = a.support() <= b.support() ? b : a;
  Complex acc = 0.0;
  for (const auto& [k, amp] : small.amplitudes()) {
    acc += std::conj(amp) * large.amplitude(k);
  }
  return std::min(1.0, std::abs(acc));
}

double reduced_fidelity(const SparseState& s, std::span<const Qubit> qubits,
                        const SparseState& target) {
  if (target.num_qubits() != static_cast<int>(qubits.size())) {
    throw DimensionError("target width does not match qubit list");
  }
  check_qubits(s.num_qubits(), qubits, {});
  SparseState::Map acc;
  for (const auto& [k, a] : s.amplitudes()) {
    const Complex t = target.amplitude(k.gather(qubits));
    if (t == Complex(0.0)) continue;
    BasisKey rest = k;
    for (Qubit q : qubits) rest.set(q, false);
    acc[rest] += std::conj(t) * a;
  }
  double f2 = 0.0;
  for (const auto& [k, v] : acc) f2 += std::norm(v);
  return std::min(1.0, std::sqrt(f2));
}

bool qubits_clear(const SparseState& s, std::span<const Qubit> qubits, double tol) {
  double dirty = 0.0;
  for (const auto& [k, a] : s.amplitudes()) {
    for (Qubit q : qubits) {
      if (k.test(q)) {
        dirty += std::norm(a);
        break;
      }
    }
  }
  return dirty <= tol * s.norm_squared();
}

SparseState restrict_to(const SparseState& s, std::span<const Qubit> qubits) {
  check_qubits(s.num_qubits(), qubits, {});
  std::map<BasisKey, double> weight;
  for (const auto& [k, a] : s.amplitudes()) {
    BasisKey rest = k;
    for (Qubit q : qubits) rest.set(q, false);
    weight[rest] += std::norm(a);
  }
  if (weight.empty()) throw ValidationError("cannot restrict the zero vector");
  auto best = weight.begin();
  double total = 0.0;
  for (auto it = weight.begin(); it != weight.end(); ++it) {
    total += it->second;
    if (it->second > best->second) best = it;
  }
  if (total - best->second > kNormTolerance * total) {
    throw ValidationError("state is entangled with qubits outside the restriction");
  }
  std::vector<std::pair<BasisKey, Complex>> amps;
  for (const auto& [k, a] : s.sorted()) {
    BasisKey rest = k;
    for (Qubit q : qubits) rest.set(q, false);
    if (rest == best->first) amps.emplace_back(k.gather(qubits), a * std::sqrt(total / best->second));
  }
  return SparseState::from_amplitudes(static_cast<int>(qubits.size()), amps);
}

std::string bits_to_string(const Bits& b) {
  std::string s;
  s.reserve(b.size());
  for (uint8_t v : b) s.push_back(v ? '1' : '0');
  return s;
}

}  // namespace laqcc
