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

#ifndef LAQCC_BUILDER_HPP_
#define LAQCC_BUILDER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "laqcc/program.hpp"

namespace laqcc {

// A slice of layers over a builder's qubits.
struct Fragment {
  std::vector<Layer> layers;

  bool is_unitary() const;
  // Throws ValidationError if the fragment measures.
  Fragment inverse() const;
  std::set<Qubit> support() const;
};

// Incrementally assembles a program. Gates are packed greedily into the
// current quantum layer until a qubit conflict forces a new one.
class ProgramBuilder {
 public:
  ProgramBuilder() = default;
  // Starts from p's qubits and registers with no layers.
  static ProgramBuilder extend(const LaqccProgram& p);

  std::vector<Qubit> allocate(const std::string& name, int count, RegisterRole role);
  // Zeroed scratch qubits, recycled after release().
  std::vector<Qubit> acquire(int count);
  // Caller guarantees the qubits are back in |0>.
  void release(const std::vector<Qubit>& qubits);
  // Between these calls released scratch is held back, so side-by-side
  // fragments get disjoint ancillas and do not serialize. Calls nest.
  void begin_parallel();
  void end_parallel();
  int num_qubits() const { return n_; }
  const RegisterMap& registers() const { return regs_; }

  void gate(Unitary u, std::vector<Qubit> targets, std::vector<Qubit> controls = {},
            std::optional<Condition> condition = std::nullopt);
  void macro(MacroPtr m, std::vector<Qubit> qubits, std::vector<Qubit> controls = {},
             std::optional<Condition> condition = std::nullopt);
  void op(Operation o);
  // Forces the next gate into a fresh layer.
  void barrier();
  std::string measure(std::vector<Qubit> qubits, const std::string& stem,
                      std::vector<Basis> bases = {});
  std::string classical(const std::string& stem, std::vector<std::string> inputs,
                        ClassicalFunction fn, DepthClass depth_class = DepthClass::kNC1);
  std::string fresh_label(const std::string& stem);

  void begin_capture();
  Fragment end_capture();
  void append(const Fragment& f);

  LaqccProgram build(const std::string& name) const;

 private:
  std::vector<Layer>& sink();
  void push_layer(Layer l);

  int n_ = 0;
  RegisterMap regs_;
  std::vector<Qubit> scratch_all_;
  std::vector<Qubit> free_;
  std::vector<Qubit> held_;
  int parallel_ = 0;
  std::vector<Layer> layers_;
  std::vector<std::vector<Layer>> captures_;
  bool barrier_ = false;
  std::map<std::string, int> label_counts_;
};

}  // namespace laqcc

#endif  // LAQCC_BUILDER_HPP_
