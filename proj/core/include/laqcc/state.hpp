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

#ifndef LAQCC_STATE_HPP_
#define LAQCC_STATE_HPP_

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laqcc/basis.hpp"

namespace laqcc {

using Complex = std::complex<double>;
using Bits = std::vector<uint8_t>;

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-12;

// Dense unitary on one or two qubits, row-major. Local basis index is
// sum_i bit(targets[i]) << i.
// Widest dense matrix accepted; program gates are limited to two qubits.
inline constexpr int kMaxDenseArity = 8;
inline constexpr int kMaxGateArity = 2;

struct Unitary {
  std::string name;
  int arity = 1;
  std::vector<Complex> m;

  Complex at(int row, int col) const { return m[row * (1 << arity) + col]; }
  Unitary adjoint() const;
  bool is_unitary(double tol = kUnitaryTolerance) const;
  bool is_diagonal(double tol = 1e-12) const;
};

class SparseState {
 public:
  using Map = std::unordered_map<BasisKey, Complex, BasisKeyHash>;

  SparseState() = default;
  explicit SparseState(int num_qubits);
  static SparseState basis(int num_qubits, const BasisKey& key);
  // Normalizes the given amplitudes; duplicate keys accumulate.
  static SparseState from_amplitudes(
      int num_qubits, const std::vector<std::pair<BasisKey, Complex>>& amps);

  int num_qubits() const { return n_; }
  size_t support() const { return amp_.size(); }
  const Map& amplitudes() const { return amp_; }
  Complex amplitude(const BasisKey& k) const;
  double norm_squared() const;
  // Entries sorted by key for deterministic output.
  std::vector<std::pair<BasisKey, Complex>> sorted() const;

  // In-place mutators used by the executor. Callers holding values use the
  // free functions below, which return fresh states.
  void apply(const Unitary& u, std::span<const Qubit> targets,
             std::span<const Qubit> controls = {});
  void x(Qubit q);
  void prune();
  void normalize();
  void widen(int num_qubits);
  void scale(Complex c);
  void assign(Map&& amps) { amp_ = std::move(amps); }
  Map& mutable_amplitudes() { return amp_; }

 private:
  int n_ = 0;
  Map amp_;
};

enum class RegisterRole { kIndex, kSystem, kAncilla, kFlag };

const char* role_name(RegisterRole r);
RegisterRole role_from_name(const std::string& s);

struct Register {
  std::string name;
  RegisterRole role = RegisterRole::kAncilla;
  std::vector<Qubit> qubits;
};

class RegisterMap {
 public:
  // Throws RegisterOverlapError if the qubits collide with an existing entry.
  const Register& add(std::string name, RegisterRole role,
                      std::vector<Qubit> qubits);
  const Register& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  const std::vector<Register>& all() const { return regs_; }
  std::vector<Qubit> qubits_with_role(RegisterRole role) const;
  // Registers are disjoint and jointly cover 0..num_qubits-1.
  bool covers(int num_qubits) const;

 private:
  std::vector<Register> regs_;
};

struct MeasureOutcome {
  Bits bits;
  double probability = 0.0;
  SparseState post;
};

// Born distribution of the listed qubits, keyed by packed outcome.
std::map<BasisKey, double> marginal(const SparseState& s,
                                    std::span<const Qubit> qubits);

SparseState apply_gate(const SparseState& s, const Unitary& u,
                       std::span<const Qubit> targets,
                       std::span<const Qubit> controls = {});
MeasureOutcome measure(const SparseState& s, std::span<const Qubit> qubits,
                       std::mt19937_64& rng);
MeasureOutcome measure_forced(const SparseState& s,
                              std::span<const Qubit> qubits,
                              const Bits& outcome);
std::vector<MeasureOutcome> branch_enumerate(const SparseState& s,
                                             std::span<const Qubit> qubits);

double fidelity(const SparseState& a, const SparseState& b);
// sqrt(<target|rho|target>) with rho the reduced state of s on `qubits`.
// Equals 1 iff s = target (x) rest up to phase.
double reduced_fidelity(const SparseState& s, std::span<const Qubit> qubits,
                        const SparseState& target);
// True when the weight on basis states with any listed qubit set is at most tol.
bool qubits_clear(const SparseState& s, std::span<const Qubit> qubits, double tol = kNormTolerance);
// Restricts s to the listed qubits assuming all others are in a fixed basis
// state up to weight kNormTolerance; throws ValidationError otherwise.
SparseState restrict_to(const SparseState& s, std::span<const Qubit> qubits);

std::string bits_to_string(const Bits& b);

}  // namespace laqcc

#endif  // LAQCC_STATE_HPP_
