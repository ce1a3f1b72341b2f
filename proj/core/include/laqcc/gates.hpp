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

#ifndef LAQCC_GATES_HPP_
#define LAQCC_GATES_HPP_

#include <string>

#include "laqcc/state.hpp"

namespace laqcc::gates {

Unitary i();
Unitary h();
Unitary x();
Unitary y();
Unitary z();
Unitary s();
Unitary sdg();
Unitary t();
Unitary rz(double theta);
// diag(1, e^{i phi})
Unitary phase(double phi);
// diag(a, b)
Unitary diag(Complex a, Complex b);
// Two-qubit gates: targets {control, target}.
Unitary cnot();
Unitary cz();
Unitary swap();
Unitary custom(std::string name, int arity, std::vector<Complex> m);

// Looks up a fixed gate by name ("h", "x", "cnot", ...). Throws ValidationError.
Unitary by_name(const std::string& name);

}  // namespace laqcc::gates

#endif  // LAQCC_GATES_HPP_
