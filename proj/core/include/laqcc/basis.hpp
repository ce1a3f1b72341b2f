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

#ifndef LAQCC_BASIS_HPP_
#define LAQCC_BASIS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace laqcc {

using Qubit = int;

inline constexpr int kMaxQubits = 256;

// Computational basis label over at most kMaxQubits qubits. Bit q is qubit q.
class BasisKey {
 public:
  constexpr BasisKey() = default;
  static BasisKey from_uint(uint64_t v) {
    BasisKey k;
    k.w_[0] = v;
    return k;
  }

  bool test(Qubit q) const { return (w_[q >> 6] >> (q & 63)) & 1ULL; }
  void set(Qubit q, bool v) {
    const uint64_t m = 1ULL << (q & 63);
    if (v) {
      w_[q >> 6] |= m;
    } else {
      w_[q >> 6] &= ~m;
    }
  }
  void flip(Qubit q) { w_[q >> 6] ^= 1ULL << (q & 63); }

  // Packs the listed bits, qubits[0] least significant. At most 64 entries.
  uint64_t extract(std::span<const Qubit> qubits) const;
  // Inverse of extract.
  void deposit(std::span<const Qubit> qubits, uint64_t value);
  // Packs arbitrarily many bits into a fresh key, qubits[i] -> bit i.
  BasisKey gather(std::span<const Qubit> qubits) const;
  void scatter(std::span<const Qubit> qubits, const BasisKey& packed);

  int popcount() const;
  int popcount(std::span<const Qubit> qubits) const;
  bool is_zero() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
  // True iff some set bit lies at or above position n.
  bool exceeds(int n) const;
  uint64_t low64() const { return w_[0]; }
  const std::array<uint64_t, 4>& words() const { return w_; }

  // Bit n-1 leftmost.
  std::string to_string(int n) const;
  static BasisKey from_string(const std::string& bits);

  BasisKey& operator^=(const BasisKey& o) {
    for (int i = 0; i < 4; ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  BasisKey& operator&=(const BasisKey& o) {
    for (int i = 0; i < 4; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend BasisKey operator^(BasisKey a, const BasisKey& b) { return a ^= b; }
  friend BasisKey operator&(BasisKey a, const BasisKey& b) { return a &= b; }
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend bool operator<(const BasisKey& a, const BasisKey& b) {
    for (int i = 3; i >= 0; --i) {
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    }
    return false;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 31));
  }

 private:
  std::array<uint64_t, 4> w_{};
};

struct BasisKeyHash {
  size_t operator()(const BasisKey& k) const { return k.hash(); }
};

}  // namespace laqcc

#endif  // LAQCC_BASIS_HPP_
