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

#include "laqcc/clifford.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "laqcc/builder.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"

namespace laqcc::clifford {

PauliString PauliString::identity(int n) {
  PauliString p;
  p.a.assign(n, 0);
  p.b.assign(n, 0);
  return p;
}

PauliString PauliString::single(int n, int qubit, char kind) {
  if (qubit < 0 || qubit >= n) throw IndexError("pauli qubit out of range");
  PauliString p = identity(n);
  switch (kind) {
    case 'I': break;
    case 'X': p.b[qubit] = 1; break;
    case 'Z': p.a[qubit] = 1; break;
    case 'Y':
      p.a[qubit] = p.b[qubit] = 1;
      p.phase = 3;
      break;
    default: throw ValidationError(std::string("unknown pauli '") + kind + "'");
  }
  return p;
}

std::string PauliString::to_string() const {
  int ph = phase;
  std::string body;
  for (int q = 0; q < size(); ++q) {
    if (a[q] && b[q]) {
      body += 'Y';
      ph += 1;
    } else if (a[q]) {
      body += 'Z';
    } else if (b[q]) {
      body += 'X';
    } else {
      body += 'I';
    }
  }
  static const char* kSigns[] = {"+", "+i", "-", "-i"};
  return kSigns[((ph % 4) + 4) % 4] + body;
}

std::vector<Complex> PauliString::matrix() const {
  const int n = size();
  if (n > 10) throw RangeError("dense pauli matrix limited to 10 qubits");
  const size_t d = size_t{1} << n;
  std::vector<Complex> m(d * d, 0.0);
  uint64_t am = 0, bm = 0;
  for (int q = 0; q < n; ++q) {
    am |= uint64_t{a[q]} << q;
    bm |= uint64_t{b[q]} << q;
  }
  static const Complex kPhase[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex g = kPhase[((phase % 4) + 4) % 4];
  for (uint64_t x = 0; x < d; ++x) {
    uint64_t y = x ^ bm;
    double sign = (__builtin_popcountll(am & y) & 1) ? -1.0 : 1.0;
    m[y * d + x] = g * sign;
  }
  return m;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw DimensionError("pauli size mismatch");
  PauliString r = PauliString::identity(p.size());
  int ph = p.phase + q.phase;
  for (int i = 0; i < p.size(); ++i) {
    if (p.b[i] && q.a[i]) ph += 2;
    r.a[i] = p.a[i] ^ q.a[i];
    r.b[i] = p.b[i] ^ q.b[i];
  }
  r.phase = ph % 4;
  return r;
}

std::vector<CliffordGate> expand_gate(const std::string& name, const std::vector<int>& q) {
  auto need = [&](size_t k) {
    if (q.size() != k) throw ValidationError("gate '" + name + "' needs " + std::to_string(k) + " qubits");
    if (k == 2 && q[0] == q[1]) throw ValidationError("gate '" + name + "' repeats a qubit");
  };
  if (name == "h" || name == "s") {
    need(1);
    return {{name, q}};
  }
  if (name == "cnot") {
    need(2);
    return {{name, q}};
  }
  if (name == "z") {
    need(1);
    return {{"s", q}, {"s", q}};
  }
  if (name == "sdg") {
    need(1);
    return {{"s", q}, {"s", q}, {"s", q}};
  }
  if (name == "x") {
    need(1);
    return {{"h", q}, {"s", q}, {"s", q}, {"h", q}};
  }
  if (name == "cz") {
    need(2);
    return {{"h", {q[1]}}, {"cnot", q}, {"h", {q[1]}}};
  }
  if (name == "swap") {
    need(2);
    return {{"cnot", q}, {"cnot", {q[1], q[0]}}, {"cnot", q}};
  }
  throw ValidationError("unsupported clifford gate '" + name + "'");
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::kLadder: return "ladder";
    case Shape::kGrid: return "grid";
    case Shape::kChain: return "chain";
  }
  return "chain";
}

Shape shape_from_name(const std::string& s) {
  if (s == "ladder") return Shape::kLadder;
  if (s == "grid") return Shape::kGrid;
  if (s == "chain") return Shape::kChain;
  throw ValidationError("unknown circuit shape '" + s + "'");
}

std::vector<CliffordGate> CliffordCircuit::gates() const {
  std::vector<CliffordGate> out;
  for (const auto& blk : blocks) out.insert(out.end(), blk.word.begin(), blk.word.end());
  return out;
}

void CliffordCircuit::validate() const {
  if (n < 1) throw ShapeError("circuit needs at least one qubit");
  for (const auto& blk : blocks) {
    if (blk.lo < 0 || blk.lo + 1 >= n) throw ShapeError("block outside the qubit range");
    for (const auto& g : blk.word) {
      if (g.name != "h" && g.name != "s" && g.name != "cnot") {
        throw ValidationError("non-generator gate '" + g.name + "' in block");
      }
      const size_t k = g.name == "cnot" ? 2 : 1;
      if (g.qubits.size() != k) throw ValidationError("gate '" + g.name + "' has wrong arity");
      for (int q : g.qubits) {
        if (q != blk.lo && q != blk.lo + 1) throw ShapeError("gate leaves its block");
      }
      if (k == 2 && g.qubits[0] == g.qubits[1]) throw ValidationError("cnot repeats a qubit");
    }
  }
  if (shape == Shape::kLadder) {
    if (static_cast<int>(blocks.size()) != n - 1) throw ShapeError("ladder needs n-1 blocks");
    for (int i = 0; i < n - 1; ++i) {
      if (blocks[i].lo != i) throw ShapeError("ladder block " + std::to_string(i) + " must act on (i, i+1)");
    }
  } else if (shape == Shape::kGrid) {
    int last_layer = 0, last_lo = -2;
    for (const auto& blk : blocks) {
      if (blk.layer < 0 || blk.layer >= depth) throw ShapeError("grid block layer out of range");
      if ((blk.lo - blk.layer) % 2 != 0) throw ShapeError("grid block breaks the brickwork parity");
      if (blk.layer < last_layer) throw ShapeError("grid blocks must be ordered by layer");
      if (blk.layer == last_layer && blk.lo <= last_lo) throw ShapeError("grid blocks repeat within a layer");
      if (blk.layer != last_layer) last_lo = -2;
      last_layer = blk.layer;
      last_lo = blk.lo;
    }
  }
}

CliffordCircuit make_ladder(int n, std::vector<std::vector<CliffordGate>> words) {
  CliffordCircuit c;
  c.shape = Shape::kLadder;
  c.n = n;
  c.depth = n - 1;
  for (int i = 0; i < static_cast<int>(words.size()); ++i) c.blocks.push_back({i, i, std::move(words[i])});
  c.validate();
  return c;
}

int grid_blocks_in_layer(int n, int layer) { return layer % 2 == 0 ? n / 2 : (n - 1) / 2; }

CliffordCircuit make_grid(int n, int depth, std::vector<std::vector<std::vector<CliffordGate>>> words) {
  if (static_cast<int>(words.size()) != depth) throw ShapeError("grid needs one word list per layer");
  CliffordCircuit c;
  c.shape = Shape::kGrid;
  c.n = n;
  c.depth = depth;
  for (int i = 0; i < depth; ++i) {
    if (static_cast<int>(words[i].size()) != grid_blocks_in_layer(n, i)) {
      throw ShapeError("grid layer " + std::to_string(i) + " has the wrong number of blocks");
    }
    for (int j = 0; j < static_cast<int>(words[i].size()); ++j) {
      c.blocks.push_back({i, 2 * j + (i % 2), std::move(words[i][j])});
    }
  }
  c.validate();
  return c;
}

std::vector<CliffordGate> random_word(int lo, std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<CliffordGate> w;
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0: w.push_back({"h", {lo}}); break;
      case 1: w.push_back({"h", {lo + 1}}); break;
      case 2: w.push_back({"s", {lo}}); break;
      case 3: w.push_back({"s", {lo + 1}}); break;
      case 4: w.push_back({"cnot", {lo, lo + 1}}); break;
      default: w.push_back({"cnot", {lo + 1, lo}}); break;
    }
  }
  return w;
}

CliffordCircuit random_ladder(int n, std::mt19937_64& rng, int word_length) {
  std::vector<std::vector<CliffordGate>> words;
  for (int i = 0; i + 1 < n; ++i) words.push_back(random_word(i, rng, word_length));
  return make_ladder(n, std::move(words));
}

CliffordCircuit random_grid(int n, int depth, std::mt19937_64& rng, int word_length) {
  std::vector<std::vector<std::vector<CliffordGate>>> words(depth);
  for (int i = 0; i < depth; ++i) {
    for (int j = 0; j < grid_blocks_in_layer(n, i); ++j) {
      words[i].push_back(random_word(2 * j + (i % 2), rng, word_length));
    }
  }
  return make_grid(n, depth, std::move(words));
}

CliffordCircuit swap_chain_cnot(int n, int control, int target) {
  if (control < 0 || target < 0 || control >= n || target >= n || control == target) {
    throw ValidationError("swap chain needs distinct in-range qubits");
  }
  CliffordCircuit c;
  c.shape = Shape::kChain;
  c.n = n;
  const int dir = target > control ? 1 : -1;
  std::vector<int> swaps;
  for (int q = control; q + dir != target; q += dir) swaps.push_back(dir > 0 ? q : q - 1);
  for (int lo : swaps) c.blocks.push_back({0, lo, expand_gate("swap", {lo, lo + 1})});
  const int near = target - dir;
  c.blocks.push_back({0, std::min(near, target), {{"cnot", {near, target}}}});
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) c.blocks.push_back({0, *it, expand_gate("swap", {*it, *it + 1})});
  for (size_t i = 0; i < c.blocks.size(); ++i) c.blocks[i].layer = static_cast<int>(i);
  c.depth = static_cast<int>(c.blocks.size());
  c.validate();
  return c;
}

PauliString conjugate(const std::vector<CliffordGate>& word, PauliString p) {
  for (const auto& g : word) {
    for (int q : g.qubits) {
      if (q < 0 || q >= p.size()) throw IndexError("gate qubit outside pauli range");
    }
    if (g.name == "h") {
      const int q = g.qubits.at(0);
      if (p.a[q] && p.b[q]) p.phase += 2;
      std::swap(p.a[q], p.b[q]);
    } else if (g.name == "s") {
      const int q = g.qubits.at(0);
      if (p.b[q]) {
        p.a[q] ^= 1;
        p.phase += 3;
      }
    } else if (g.name == "cnot") {
      const int c = g.qubits.at(0), t = g.qubits.at(1);
      p.a[c] ^= p.a[t];
      p.b[t] ^= p.b[c];
    } else {
      throw ValidationError("conjugate: non-generator gate '" + g.name + "'");
    }
    p.phase %= 4;
  }
  return p;
}

PauliString conjugate(const CliffordCircuit& c, const PauliString& p) { return conjugate(c.gates(), p); }

Unitary gate_unitary(const CliffordGate& g) {
  if (g.name == "h") return gates::h();
  if (g.name == "s") return gates::s();
  if (g.name == "cnot") return gates::cnot();
  throw ValidationError("non-generator gate '" + g.name + "'");
}

void apply_word(SparseState& s, const std::vector<CliffordGate>& word, const std::vector<Qubit>& wires) {
  for (const auto& g : word) {
    std::vector<Qubit> t;
    for (int q : g.qubits) t.push_back(wires.at(q));
    s.apply(gate_unitary(g), t);
  }
}

std::vector<Teleport> teleport_sites(const CliffordCircuit& c) {
  c.validate();
  std::vector<Teleport> out;
  std::vector<bool> touched(c.n, false);
  for (int bi = 0; bi < static_cast<int>(c.blocks.size()); ++bi) {
    const int lo = c.blocks[bi].lo;
    for (int q : {lo, lo + 1}) {
      if (touched[q] || (c.shape == Shape::kLadder && q == lo)) out.push_back({bi, q});
      touched[q] = true;
    }
  }
  return out;
}

Bits CorrectionMap::apply(const Bits& outcome) const {
  if (static_cast<int>(outcome.size()) != inputs) throw DimensionError("outcome width does not match correction map");
  Bits out(outputs, 0);
  for (int r = 0; r < outputs; ++r) {
    int v = 0;
    for (int c = 0; c < inputs; ++c) v ^= rows[r][c] & outcome[c];
    out[r] = static_cast<uint8_t>(v);
  }
  return out;
}

nlohmann::json CorrectionMap::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& r : rows) m.push_back(r);
  return {{"inputs", inputs}, {"outputs", outputs}, {"matrix", m}};
}

CorrectionMap build_correction_map(const CliffordCircuit& c) {
  const auto sites = teleport_sites(c);
  const int t = static_cast<int>(sites.size());
  CorrectionMap m;
  m.inputs = 2 * t;
  m.outputs = 2 * c.n;
  m.rows.assign(m.outputs, Bits(m.inputs, 0));
  for (int i = 0; i < t; ++i) {
    std::vector<CliffordGate> rest;
    for (size_t bi = sites[i].block; bi < c.blocks.size(); ++bi) {
      rest.insert(rest.end(), c.blocks[bi].word.begin(), c.blocks[bi].word.end());
    }
    for (int part = 0; part < 2; ++part) {
      PauliString p = PauliString::single(c.n, sites[i].qubit, part == 0 ? 'Z' : 'X');
      PauliString img = conjugate(rest, p);
      const int col = part * t + i;
      for (int q = 0; q < c.n; ++q) {
        m.rows[q][col] = img.a[q];
        m.rows[c.n + q][col] = img.b[q];
      }
    }
  }
  return m;
}

FlatProgram flatten(const CliffordCircuit& c) {
  const auto sites = teleport_sites(c);
  const int n = c.n, t = static_cast<int>(sites.size());
  ProgramBuilder b;
  auto wires = b.allocate("wires", n + 2 * t, RegisterRole::kAncilla);
  FlatProgram fp;
  fp.map = build_correction_map(c);
  fp.inputs.assign(wires.begin(), wires.begin() + n);
  std::vector<Qubit> cur = fp.inputs;
  std::vector<Qubit> holder(t), e(t), f(t);
  std::vector<std::vector<Qubit>> block_wires(c.blocks.size());
  size_t si = 0;
  for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
    while (si < sites.size() && sites[si].block == static_cast<int>(bi)) {
      const int q = sites[si].qubit;
      holder[si] = cur[q];
      e[si] = wires[n + 2 * si];
      f[si] = wires[n + 2 * si + 1];
      cur[q] = f[si];
      ++si;
    }
    block_wires[bi] = cur;
  }
  fp.outputs = cur;

  for (int i = 0; i < t; ++i) b.gate(gates::h(), {e[i]});
  for (int i = 0; i < t; ++i) b.gate(gates::cnot(), {e[i], f[i]});
  for (size_t bi = 0; bi < c.blocks.size(); ++bi) {
    for (const auto& g : c.blocks[bi].word) {
      std::vector<Qubit> q;
      for (int l : g.qubits) q.push_back(block_wires[bi][l]);
      b.gate(gate_unitary(g), q);
    }
  }
  if (t > 0) {
    for (int i = 0; i < t; ++i) b.gate(gates::cnot(), {holder[i], e[i]});
    std::vector<Qubit> mq = holder;
    mq.insert(mq.end(), e.begin(), e.end());
    std::vector<Basis> bases(2 * t, Basis::kZ);
    std::fill(bases.begin(), bases.begin() + t, Basis::kX);
    std::string label = b.measure(mq, "bell", bases);
    std::vector<Bits> rows = fp.map.rows;
    for (int i = 0; i < 2 * t; ++i) {
      Bits r(2 * t, 0);
      r[i] = 1;
      rows.push_back(r);
    }
    std::string fix = b.classical("frame", {label}, ClassicalFunction::linear(2 * t, rows));
    for (int q = 0; q < n; ++q) b.gate(gates::z(), {fp.outputs[q]}, {}, Condition{fix, q});
    for (int q = 0; q < n; ++q) b.gate(gates::x(), {fp.outputs[q]}, {}, Condition{fix, n + q});
    for (int i = 0; i < 2 * t; ++i) b.gate(gates::x(), {mq[i]}, {}, Condition{fix, 2 * n + i});
  }

  LaqccProgram raw = b.build(std::string("flatten_") + shape_name(c.shape));
  RegisterMap regs;
  std::set<Qubit> outs(fp.outputs.begin(), fp.outputs.end());
  std::vector<Qubit> in_only, bell;
  for (Qubit q : fp.inputs) {
    if (!outs.count(q)) in_only.push_back(q);
  }
  std::set<Qubit> taken(outs);
  taken.insert(in_only.begin(), in_only.end());
  for (Qubit q : wires) {
    if (!taken.count(q)) bell.push_back(q);
  }
  regs.add("output", RegisterRole::kSystem, fp.outputs);
  if (!in_only.empty()) regs.add("input", RegisterRole::kAncilla, in_only);
  if (!bell.empty()) regs.add("bell", RegisterRole::kAncilla, bell);
  fp.program = LaqccProgram(raw.name(), raw.num_qubits(), std::move(regs), raw.layers());
  return fp;
}

FlatProgram flatten_ladder(const CliffordCircuit& c) {
  if (c.shape != Shape::kLadder) throw ShapeError("flatten_ladder needs a ladder circuit");
  return flatten(c);
}

FlatProgram flatten_grid(const CliffordCircuit& c) {
  if (c.shape != Shape::kGrid) throw ShapeError("flatten_grid needs a grid circuit");
  return flatten(c);
}

LaqccProgram ghz(int n) {
  if (n < 2) throw ValidationError("ghz needs n >= 2");
  ProgramBuilder b;
  auto line = b.allocate("line", 2 * n - 1, RegisterRole::kAncilla);
  std::vector<Qubit> sys, par;
  for (int i = 0; i < 2 * n - 1; ++i) (i % 2 == 0 ? sys : par).push_back(line[i]);
  for (Qubit q : sys) b.gate(gates::h(), {q});
  for (int i = 0; i + 1 < n; ++i) b.gate(gates::cnot(), {sys[i], par[i]});
  for (int i = 0; i + 1 < n; ++i) b.gate(gates::cnot(), {sys[i + 1], par[i]});
  std::string label = b.measure(par, "parity");
  const int m = n - 1;
  std::vector<Bits> rows;
  for (int j = 1; j < n; ++j) {
    Bits r(m, 0);
    for (int i = 0; i < j; ++i) r[i] = 1;
    rows.push_back(r);
  }
  for (int i = 0; i < m; ++i) {
    Bits r(m, 0);
    r[i] = 1;
    rows.push_back(r);
  }
  std::string fix = b.classical("cat_fix", {label}, ClassicalFunction::linear(m, rows));
  for (int j = 1; j < n; ++j) b.gate(gates::x(), {sys[j]}, {}, Condition{fix, j - 1});
  for (int i = 0; i < m; ++i) b.gate(gates::x(), {par[i]}, {}, Condition{fix, m + i});
  LaqccProgram raw = b.build("ghz");
  RegisterMap regs;
  regs.add("system", RegisterRole::kSystem, sys);
  regs.add("parity", RegisterRole::kAncilla, par);
  return LaqccProgram(raw.name(), raw.num_qubits(), std::move(regs), raw.layers());
}

SparseState ghz_target(int n) {
  BasisKey zero, ones;
  for (int i = 0; i < n; ++i) ones.set(i, true);
  return SparseState::from_amplitudes(n, {{zero, 1.0}, {ones, 1.0}});
}

nlohmann::json to_json(const CliffordCircuit& c) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& blk : c.blocks) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& x : blk.word) g.push_back({{"name", x.name}, {"qubits", x.qubits}});
    blocks.push_back({{"layer", blk.layer}, {"qubits", {blk.lo, blk.lo + 1}}, {"gates", g}});
  }
  return {{"shape", shape_name(c.shape)}, {"n", c.n}, {"depth", c.depth}, {"blocks", blocks}};
}

namespace {

std::vector<CliffordGate> parse_gates(const nlohmann::json& arr) {
  std::vector<CliffordGate> out;
  for (const auto& g : arr) {
    auto w = expand_gate(g.at("name").get<std::string>(), g.at("qubits").get<std::vector<int>>());
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::pair<int, int> span_of(const CliffordGate& g) {
  auto [lo, hi] = std::minmax_element(g.qubits.begin(), g.qubits.end());
  return {*lo, *hi};
}

}  // namespace

CliffordCircuit circuit_from_json(const nlohmann::json& j) {
  CliffordCircuit c;
  try {
    c.shape = shape_from_name(j.at("shape").get<std::string>());
    c.n = j.at("n").get<int>();
    c.depth = j.value("depth", 0);
    if (j.contains("blocks")) {
      for (const auto& blk : j.at("blocks")) {
        const auto& q = blk.at("qubits");
        int lo = q.is_array() ? q.at(0).get<int>() : q.get<int>();
        c.blocks.push_back({blk.value("layer", 0), lo, parse_gates(blk.at("gates"))});
      }
    } else {
      auto flat = parse_gates(j.at("gates"));
      if (c.shape == Shape::kGrid) {
        std::map<std::pair<int, int>, std::vector<CliffordGate>> cells;
        int layer = 0;
        for (const auto& g : flat) {
          auto [lo, hi] = span_of(g);
          if (hi - lo > 1) throw ShapeError("grid gate on non-adjacent qubits");
          for (;; ++layer) {
            if (layer > 4096) throw ShapeError("grid gate does not fit the brickwork");
            const int p = layer % 2;
            if (lo < p) continue;
            const int start = lo - ((lo - p) % 2);
            if (start + 1 < c.n && hi <= start + 1) {
              cells[{layer, start}].push_back(g);
              break;
            }
          }
        }
        for (auto& [key, w] : cells) c.blocks.push_back({key.first, key.second, std::move(w)});
        c.depth = std::max(c.depth, cells.empty() ? 0 : cells.rbegin()->first.first + 1);
      } else {
        int cur = -1;
        for (const auto& g : flat) {
          auto [lo, hi] = span_of(g);
          if (hi - lo > 1) throw ShapeError("gate on non-adjacent qubits");
          if (cur >= 0 && lo >= cur && hi <= cur + 1) {
            c.blocks.back().word.push_back(g);
            continue;
          }
          int start = (hi == lo) ? std::min(lo, c.n - 2) : lo;
          if (c.shape == Shape::kLadder) {
            if (start <= cur) throw ShapeError("ladder gates must move forward along the chain");
            while (cur + 1 < start) c.blocks.push_back({++cur, cur, {}});
          }
          cur = start;
          c.blocks.push_back({static_cast<int>(c.blocks.size()), start, {g}});
        }
        if (c.shape == Shape::kLadder) {
          while (cur + 2 < c.n) c.blocks.push_back({++cur, cur, {}});
        }
        c.depth = std::max(c.depth, static_cast<int>(c.blocks.size()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed circuit json: ") + e.what());
  }
  if (c.shape == Shape::kLadder) c.depth = c.n - 1;
  for (size_t i = 0; c.shape == Shape::kLadder && i < c.blocks.size(); ++i) c.blocks[i].layer = static_cast<int>(i);
  c.validate();
  return c;
}

}  // namespace laqcc::clifford
