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

#include "laqcc/gates.hpp"

#include <cmath>
#include <numbers>

#include "laqcc/error.hpp"

namespace laqcc::gates {

namespace {
const Complex kI(0.0, 1.0);
}

Unitary i() { return {"i", 1, {1, 0, 0, 1}}; }
Unitary h() {
  const double r = 1.0 / std::sqrt(2.0);
  return {"h", 1, {r, r, r, -r}};
}
Unitary x() { return {"x", 1, {0, 1, 1, 0}}; }
Unitary y() { return {"y", 1, {0, -kI, kI, 0}}; }
Unitary z() { return {"z", 1, {1, 0, 0, -1}}; }
Unitary s() { return {"s", 1, {1, 0, 0, kI}}; }
Unitary sdg() { return {"sdg", 1, {1, 0, 0, -kI}}; }
Unitary t() { return {"t", 1, {1, 0, 0, std::exp(kI * (std::numbers::pi / 4))}}; }

Unitary rz(double theta) {
  return {"rz", 1, {std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2))}};
}

Unitary phase(double phi) { return {"phase", 1, {1, 0, 0, std::exp(kI * phi)}}; }

Unitary diag(Complex a, Complex b) { return {"diag", 1, {a, 0, 0, b}}; }

Unitary cnot() {
  // local index = control + 2*target
  return {"cnot", 2, {1, 0, 0, 0,
                      0, 0, 0, 1,
                      0, 0, 1, 0,
                      0, 1, 0, 0}};
}

Unitary cz() {
  return {"cz", 2, {1, 0, 0, 0,
                    0, 1, 0, 0,
                    0, 0, 1, 0,
                    0, 0, 0, -1}};
}

Unitary swap() {
  return {"swap", 2, {1, 0, 0, 0,
                      0, 0, 1, 0,
                      0, 1, 0, 0,
                      0, 0, 0, 1}};
}

Unitary custom(std::string name, int arity, std::vector<Complex> m) {
  Unitary u{std::move(name), arity, std::move(m)};
  if (!u.is_unitary()) throw ValidationError("gate " + u.name + " is not unitary");
  return u;
}

Unitary by_name(const std::string& name) {
  if (name == "i") return i();
  if (name == "h") return h();
  if (name == "x") return x();
  if (name == "y") return y();
  if (name == "z") return z();
  if (name == "s") return s();
  if (name == "sdg") return sdg();
  if (name == "t") return t();
  if (name == "cnot" || name == "cx") return cnot();
  if (name == "cz") return cz();
  if (name == "swap") return swap();
  throw ValidationError("unknown gate '" + name + "'");
}

}  // namespace laqcc::gates
