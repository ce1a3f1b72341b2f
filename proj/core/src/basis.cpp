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

#include "laqcc/basis.hpp"

#include <bit>

#include "laqcc/error.hpp"

namespace laqcc {

uint64_t BasisKey::extract(std::span<const Qubit> qubits) const {
  uint64_t v = 0;
  for (size_t i = 0; i < qubits.size(); ++i) {
    if (test(qubits[i])) v |= 1ULL << i;
  }
  return v;
}

void BasisKey::deposit(std::span<const Qubit> qubits, uint64_t value) {
  for (size_t i = 0; i < qubits.size(); ++i) set(qubits[i], (value >> i) & 1ULL);
}

BasisKey BasisKey::gather(std::span<const Qubit> qubits) const {
  BasisKey out;
  for (size_t i = 0; i < qubits.size(); ++i) {
    if (test(qubits[i])) out.set(static_cast<Qubit>(i), true);
  }
  return out;
}

void BasisKey::scatter(std::span<const Qubit> qubits, const BasisKey& packed) {
  for (size_t i = 0; i < qubits.size(); ++i) {
    set(qubits[i], packed.test(static_cast<Qubit>(i)));
  }
}

int BasisKey::popcount() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

int BasisKey::popcount(std::span<const Qubit> qubits) const {
  int c = 0;
  for (Qubit q : qubits) c += test(q);
  return c;
}

bool BasisKey::exceeds(int n) const {
  if (n >= kMaxQubits) return false;
  for (int i = 0; i < 4; ++i) {
    const int lo = i * 64;
    if (n <= lo) {
      if (w_[i]) return true;
    } else if (n < lo + 64) {
      if (w_[i] >> (n - lo)) return true;
    }
  }
  return false;
}

std::string BasisKey::to_string(int n) const {
  std::string s(static_cast<size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if (test(q)) s[static_cast<size_t>(n - 1 - q)] = '1';
  }
  return s;
}

BasisKey BasisKey::from_string(const std::string& bits) {
  const int n = static_cast<int>(bits.size());
  if (n > kMaxQubits) throw IndexError("bitstring longer than kMaxQubits");
  BasisKey k;
  for (int q = 0; q < n; ++q) {
    const char c = bits[static_cast<size_t>(n - 1 - q)];
    if (c != '0' && c != '1') throw ValidationError("bitstring must contain only 0/1");
    k.set(q, c == '1');
  }
  return k;
}

}  // namespace laqcc
