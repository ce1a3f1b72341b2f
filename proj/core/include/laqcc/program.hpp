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

#ifndef LAQCC_PROGRAM_HPP_
#define LAQCC_PROGRAM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "laqcc/charges.hpp"
#include "laqcc/classical.hpp"
#include "laqcc/macros.hpp"
#include "laqcc/state.hpp"

namespace laqcc {

// Gate fires iff bit `bit` of classical output `source` is 1.
struct Condition {
  std::string source;
  int bit = 0;
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Operation {
  std::variant<Unitary, MacroPtr> op;
  std::vector<Qubit> qubits;
  std::vector<Qubit> controls;
  std::optional<Condition> condition;

  bool is_macro() const { return std::holds_alternative<MacroPtr>(op); }
  const Unitary& unitary() const { return std::get<Unitary>(op); }
  const MacroPtr& macro() const { return std::get<MacroPtr>(op); }
  std::string name() const;
  // Targets followed by controls.
  std::vector<Qubit> support() const;
  Operation inverse() const;
};

struct QuantumLayer {
  std::vector<Operation> ops;
};

enum class Basis { kZ, kX };

// X-basis measurement applies H and then measures Z, leaving |s>.
struct MeasureLayer {
  std::vector<Qubit> qubits;
  std::vector<Basis> bases;  // empty means all Z
  std::string label;
  Basis basis(size_t i) const { return bases.empty() ? Basis::kZ : bases[i]; }
};

struct ClassicalLayer {
  std::string output;
  std::vector<std::string> inputs;  // measurement labels, concatenated
  ClassicalFunction function;
  DepthClass depth_class = DepthClass::kNC1;
};

using Layer = std::variant<QuantumLayer, MeasureLayer, ClassicalLayer>;

class LaqccProgram {
 public:
  LaqccProgram() = default;
  LaqccProgram(std::string name, int num_qubits, RegisterMap registers, std::vector<Layer> layers);

  const std::string& name() const { return name_; }
  int num_qubits() const { return n_; }
  const RegisterMap& registers() const { return regs_; }
  const std::vector<Layer>& layers() const { return layers_; }
  // Concatenation of system registers in declaration order.
  std::vector<Qubit> output_qubits() const;
  std::vector<Qubit> non_output_qubits() const;
  size_t measure_layer_count() const;

  // Throws MalformedProgramError on any invariant violation.
  void validate() const;

 private:
  std::string name_;
  int n_ = 0;
  RegisterMap regs_;
  std::vector<Layer> layers_;
};

struct MeasurementEntry {
  std::string label;
  Bits bits;
  double probability = 1.0;
};
using MeasurementRecord = std::vector<MeasurementEntry>;

double record_probability(const MeasurementRecord& r);

struct ExecutionPolicy {
  enum class Mode { kSeeded, kForced };
  Mode mode = Mode::kSeeded;
  uint64_t seed = 0;
  std::vector<Bits> forced;  // one entry per MeasureLayer, in order

  static ExecutionPolicy seeded(uint64_t seed);
  static ExecutionPolicy forcing(std::vector<Bits> outcomes);
};

struct ExecutionResult {
  SparseState state;
  MeasurementRecord record;
  size_t support_max = 0;
};

ExecutionResult execute(const LaqccProgram& p, const ExecutionPolicy& policy);
ExecutionResult execute(const LaqccProgram& p, const ExecutionPolicy& policy, SparseState initial);

// Applies one quantum operation in place; conditions are ignored.
void apply_operation(SparseState& s, const Operation& op);

struct BranchClass {
  SparseState state;
  MeasurementRecord record;  // one representative transcript
  double probability = 0.0;
  double leaves = 1.0;       // merged transcripts represented
};

struct EnumerationOptions {
  // Merge transcripts whose states agree up to global phase and whose
  // classical values still read by later layers agree.
  bool merge = true;
  // Labels kept distinct through the end even if never read again.
  std::set<std::string> keep_labels;
  size_t max_frontier = size_t{1} << 14;
};

struct EnumerationResult {
  std::vector<BranchClass> classes;
  double leaves = 0.0;
  size_t support_max = 0;
  size_t frontier_max = 0;
  double total_probability = 0.0;
};

// Throws RangeError if the frontier exceeds options.max_frontier.
EnumerationResult enumerate_branches(const LaqccProgram& p, const SparseState& initial,
                                     const EnumerationOptions& options = {});
EnumerationResult enumerate_branches(const LaqccProgram& p, const EnumerationOptions& options = {});

struct ResourceProfile {
  int width = 0;
  int quantum_depth = 0;
  // Feed-forward depth: the longest chain measurement -> classical -> gate.
  int rounds = 0;
  // rounds plus the round charges of semantic macros on the same chains.
  int charged_rounds = 0;
  DepthClass classical_depth_class = DepthClass::kNC1;
  int64_t charged_width = 0;
  int measure_layers = 0;
  int macro_count = 0;
};

ResourceProfile resources(const LaqccProgram& p, const ChargeTable& charges = ChargeTable::defaults());
nlohmann::json to_json(const ResourceProfile& r);

struct GridLayout {
  std::map<Qubit, std::pair<int, int>> coords;
  static GridLayout line(int n);
};

struct LayoutViolation {
  size_t layer = 0;
  size_t op = 0;
  std::vector<Qubit> qubits;
  std::string reason;
};

// Two-qubit operations must act on grid neighbours; wider macros must sit on
// a connected set of sites. Throws LayoutError if a qubit has no site.
std::vector<LayoutViolation> validate_layout(const LaqccProgram& p, const GridLayout& layout);

// Moves every measurement to a single terminal layer. Measured qubits are
// copied into fresh ancillas; classical layers become reversible circuits.
LaqccProgram defer_measurements(const LaqccProgram& p);

struct PostselectedProgram {
  LaqccProgram program;
  Qubit flag = -1;
  // Ancillas holding per-layer comparison results.
  std::vector<Qubit> compare_qubits;
};
// Throws InfeasibleBranchError if the transcript has probability 0.
PostselectedProgram to_postselected(const LaqccProgram& p, const MeasurementRecord& transcript);

// Program JSON schema: {name, qubits, registers, layers:[...]}.
nlohmann::json to_json(const LaqccProgram& p);
LaqccProgram program_from_json(const nlohmann::json& j);

// {qubits, amplitudes:[{basis, re, im}]} sorted by basis; basis prints qubit 0 first.
nlohmann::json to_json(const SparseState& s);

}  // namespace laqcc

#endif  // LAQCC_PROGRAM_HPP_
