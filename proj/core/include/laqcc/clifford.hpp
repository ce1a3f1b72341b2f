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

#ifndef LAQCC_CLIFFORD_HPP_
#define LAQCC_CLIFFORD_HPP_

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "laqcc/program.hpp"

namespace laqcc::clifford {

// i^phase * Z^a X^b, qubit by qubit.
struct PauliString {
  Bits a;
  Bits b;
  int phase = 0;

  static PauliString identity(int n);
  // kind in {'I', 'X', 'Y', 'Z'}; Y is stored as -i Z X.
  static PauliString single(int n, int qubit, char kind);
  int size() const { return static_cast<int>(a.size()); }
  std::string to_string() const;
  // Dense 2^n x 2^n matrix, row-major; n <= 10.
  std::vector<Complex> matrix() const;
  friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString multiply(const PauliString& p, const PauliString& q);

// Generators are "h", "s" and "cnot" (control first).
struct CliffordGate {
  std::string name;
  std::vector<int> qubits;
};

// Rewrites x, z, sdg, cz and swap as generator words; generators pass through.
std::vector<CliffordGate> expand_gate(const std::string& name, const std::vector<int>& qubits);

enum class Shape { kLadder, kGrid, kChain };
const char* shape_name(Shape s);
Shape shape_from_name(const std::string& s);

// A 2-qubit block on logical qubits (lo, lo + 1).
struct CliffordBlock {
  int layer = 0;
  int lo = 0;
  std::vector<CliffordGate> word;
};

struct CliffordCircuit {
  Shape shape = Shape::kChain;
  int n = 0;
  int depth = 0;
  std::vector<CliffordBlock> blocks;

  std::vector<CliffordGate> gates() const;
  // Throws ShapeError when blocks break the ladder or brickwork pattern.
  void validate() const;
};

// Ladder block i on (i, i + 1), one per word.
CliffordCircuit make_ladder(int n, std::vector<std::vector<CliffordGate>> words);
// Brickwork: layer i pairs (2j, 2j+1) for even i and (2j+1, 2j+2) for odd i.
CliffordCircuit make_grid(int n, int depth, std::vector<std::vector<std::vector<CliffordGate>>> words);
int grid_blocks_in_layer(int n, int layer);

CliffordCircuit random_ladder(int n, std::mt19937_64& rng, int word_length = 10);
CliffordCircuit random_grid(int n, int depth, std::mt19937_64& rng, int word_length = 10);
std::vector<CliffordGate> random_word(int lo, std::mt19937_64& rng, int length);
// CNOT(control, target) on a line via a SWAP chain toward target and back.
CliffordCircuit swap_chain_cnot(int n, int control, int target);

// P' with c P = P' c. Throws ValidationError on non-generators.
PauliString conjugate(const std::vector<CliffordGate>& word, PauliString p);
PauliString conjugate(const CliffordCircuit& c, const PauliString& p);

Unitary gate_unitary(const CliffordGate& g);
// Applies the word with logical qubit i on wires[i].
void apply_word(SparseState& s, const std::vector<CliffordGate>& word, const std::vector<Qubit>& wires);

struct Teleport {
  int block = 0;
  int qubit = 0;
};

// Ladder blocks receive their lower qubit by teleportation; other shapes
// teleport a qubit into a block only when an earlier block has touched it.
std::vector<Teleport> teleport_sites(const CliffordCircuit& c);

// Over GF(2): (a_hat b_hat) = M (a b), with a, b indexed by teleport and
// a_hat, b_hat by logical qubit.
struct CorrectionMap {
  int inputs = 0;
  int outputs = 0;
  std::vector<Bits> rows;

  Bits apply(const Bits& outcome) const;
  nlohmann::json to_json() const;
};

CorrectionMap build_correction_map(const CliffordCircuit& c);

struct FlatProgram {
  LaqccProgram program;
  std::vector<Qubit> inputs;
  std::vector<Qubit> outputs;
  CorrectionMap map;
};

// Bell pairs, every block and every Bell measurement in one quantum stage,
// then one classical layer applying M and one correction layer.
FlatProgram flatten(const CliffordCircuit& c);
FlatProgram flatten_ladder(const CliffordCircuit& c);
FlatProgram flatten_grid(const CliffordCircuit& c);

// Cat state on the even sites of a 2n-1 qubit line from parity checks.
LaqccProgram ghz(int n);
SparseState ghz_target(int n);

nlohmann::json to_json(const CliffordCircuit& c);
// Accepts explicit "blocks" or a flat "gates" list grouped greedily.
CliffordCircuit circuit_from_json(const nlohmann::json& j);

}  // namespace laqcc::clifford

#endif  // LAQCC_CLIFFORD_HPP_
