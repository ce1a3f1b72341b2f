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

#include "laqcc/program.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"

namespace laqcc {

std::string Operation::name() const { return is_macro() ? macro()->kind() : unitary().name; }

std::vector<Qubit> Operation::support() const {
  std::vector<Qubit> s = qubits;
  s.insert(s.end(), controls.begin(), controls.end());
  return s;
}

Operation Operation::inverse() const {
  Operation o = *this;
  if (is_macro()) {
    o.op = macro()->inverse();
  } else {
    o.op = unitary().adjoint();
  }
  return o;
}

LaqccProgram::LaqccProgram(std::string name, int num_qubits, RegisterMap registers,
                           std::vector<Layer> layers)
    : name_(std::move(name)), n_(num_qubits), regs_(std::move(registers)), layers_(std::move(layers)) {
  validate();
}

std::vector<Qubit> LaqccProgram::output_qubits() const {
  return regs_.qubits_with_role(RegisterRole::kSystem);
}

std::vector<Qubit> LaqccProgram::non_output_qubits() const {
  std::vector<uint8_t> out(static_cast<size_t>(n_), 0);
  for (Qubit q : output_qubits()) out[static_cast<size_t>(q)] = 1;
  std::vector<Qubit> rest;
  for (Qubit q = 0; q < n_; ++q) {
    if (!out[static_cast<size_t>(q)]) rest.push_back(q);
  }
  return rest;
}

size_t LaqccProgram::measure_layer_count() const {
  return static_cast<size_t>(std::count_if(layers_.begin(), layers_.end(), [](const Layer& l) {
    return std::holds_alternative<MeasureLayer>(l);
  }));
}

void LaqccProgram::validate() const {
  auto fail = [&](size_t i, const std::string& msg) {
    throw MalformedProgramError("layer " + std::to_string(i) + ": " + msg);
  };
  if (n_ < 0 || n_ > kMaxQubits) throw MalformedProgramError("qubit count out of range");
  if (!regs_.covers(n_)) {
    throw MalformedProgramError("registers must be disjoint and cover every qubit");
  }
  std::map<std::string, size_t> measured;  // label -> width
  std::map<std::string, size_t> outputs;   // classical output -> width
  for (size_t i = 0; i < layers_.size(); ++i) {
    const Layer& layer = layers_[i];
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      std::vector<uint8_t> used(static_cast<size_t>(n_), 0);
      for (const Operation& op : q->ops) {
        const int arity = op.is_macro() ? op.macro()->arity() : op.unitary().arity;
        if (static_cast<int>(op.qubits.size()) != arity) fail(i, "operation " + op.name() + " arity mismatch");
        if (!op.is_macro() && arity > kMaxGateArity) fail(i, "gate " + op.name() + " acts on more than two qubits");
        for (Qubit x : op.support()) {
          if (x < 0 || x >= n_) fail(i, "qubit out of range");
          if (used[static_cast<size_t>(x)]++) {
            fail(i, "qubit " + std::to_string(x) + " used twice in one quantum layer");
          }
        }
        if (op.condition) {
          auto it = outputs.find(op.condition->source);
          if (it == outputs.end()) {
            fail(i, "condition references unknown classical output '" + op.condition->source + "'");
          }
          if (op.condition->bit < 0 || static_cast<size_t>(op.condition->bit) >= it->second) {
            fail(i, "condition bit out of range");
          }
        }
      }
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      std::vector<uint8_t> used(static_cast<size_t>(n_), 0);
      for (Qubit x : m->qubits) {
        if (x < 0 || x >= n_) fail(i, "measured qubit out of range");
        if (used[static_cast<size_t>(x)]++) fail(i, "qubit measured twice");
      }
      if (!m->bases.empty() && m->bases.size() != m->qubits.size()) fail(i, "basis list length mismatch");
      if (m->label.empty() || measured.count(m->label) || outputs.count(m->label)) {
        fail(i, "measurement label must be unique and non-empty");
      }
      measured[m->label] = m->qubits.size();
    } else {
      const auto& c = std::get<ClassicalLayer>(layer);
      size_t width = 0;
      for (const auto& in : c.inputs) {
        auto it = measured.find(in);
        if (it == measured.end()) fail(i, "classical layer reads unknown measurement '" + in + "'");
        width += it->second;
      }
      if (static_cast<int>(width) != c.function.input_width()) fail(i, "classical input width mismatch");
      if (c.output.empty() || measured.count(c.output) || outputs.count(c.output)) {
        fail(i, "classical output name must be unique and non-empty");
      }
      outputs[c.output] = static_cast<size_t>(c.function.output_width());
    }
  }
}

double record_probability(const MeasurementRecord& r) {
  double p = 1.0;
  for (const auto& e : r) p *= e.probability;
  return p;
}

ExecutionPolicy ExecutionPolicy::seeded(uint64_t seed) {
  ExecutionPolicy p;
  p.mode = Mode::kSeeded;
  p.seed = seed;
  return p;
}

ExecutionPolicy ExecutionPolicy::forcing(std::vector<Bits> outcomes) {
  ExecutionPolicy p;
  p.mode = Mode::kForced;
  p.forced = std::move(outcomes);
  return p;
}

void apply_operation(SparseState& s, const Operation& op) {
  if (op.is_macro()) {
    apply_macro(s, *op.macro(), op.qubits, op.controls);
  } else {
    s.apply(op.unitary(), op.qubits, op.controls);
  }
}

namespace {

using Values = std::map<std::string, Bits>;

bool condition_holds(const Operation& op, const Values& values) {
  if (!op.condition) return true;
  auto it = values.find(op.condition->source);
  if (it == values.end()) throw MalformedProgramError("condition source not yet computed");
  return it->second[static_cast<size_t>(op.condition->bit)] != 0;
}

void run_quantum(SparseState& s, const QuantumLayer& q, const Values& values) {
  for (const Operation& op : q.ops) {
    if (condition_holds(op, values)) apply_operation(s, op);
  }
}

Bits run_classical(const ClassicalLayer& c, const Values& values) {
  Bits in;
  for (const auto& name : c.inputs) {
    const Bits& b = values.at(name);
    in.insert(in.end(), b.begin(), b.end());
  }
  return c.function.eval(in);
}

}  // namespace

ExecutionResult execute(const LaqccProgram& p, const ExecutionPolicy& policy) {
  return execute(p, policy, SparseState(p.num_qubits()));
}

ExecutionResult execute(const LaqccProgram& p, const ExecutionPolicy& policy, SparseState initial) {
  if (initial.num_qubits() != p.num_qubits()) throw DimensionError("initial state width mismatch");
  if (policy.mode == ExecutionPolicy::Mode::kForced && policy.forced.size() != p.measure_layer_count()) {
    throw ValidationError("forced policy needs one outcome per measurement layer");
  }
  std::mt19937_64 rng(policy.seed);
  ExecutionResult r;
  r.state = std::move(initial);
  r.support_max = r.state.support();
  Values values;
  size_t mi = 0;
  const Unitary h = gates::h();
  for (const Layer& layer : p.layers()) {
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      run_quantum(r.state, *q, values);
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      MeasurementEntry e{m->label, Bits(m->qubits.size()), 1.0};
      if (policy.mode == ExecutionPolicy::Mode::kForced && policy.forced[mi].size() != m->qubits.size()) {
        throw ValidationError("forced outcome width mismatch for " + m->label);
      }
      for (size_t i = 0; i < m->qubits.size(); ++i) {
        const Qubit qb = m->qubits[i];
        if (m->basis(i) == Basis::kX) r.state.apply(h, std::span<const Qubit>(&qb, 1));
        const std::span<const Qubit> one(&qb, 1);
        MeasureOutcome o = policy.mode == ExecutionPolicy::Mode::kForced
                               ? measure_forced(r.state, one, Bits{policy.forced[mi][i]})
                               : measure(r.state, one, rng);
        e.bits[i] = o.bits[0];
        e.probability *= o.probability;
        r.state = std::move(o.post);
      }
      values[m->label] = e.bits;
      r.record.push_back(std::move(e));
      ++mi;
    } else {
      const auto& c = std::get<ClassicalLayer>(layer);
      values[c.output] = run_classical(c, values);
    }
    r.support_max = std::max(r.support_max, r.state.support());
  }
  return r;
}

namespace {

struct Item {
  SparseState state;
  Values values;
  MeasurementRecord record;
  double prob = 1.0;
  double leaves = 1.0;
};

// Names read by layers strictly after each index.
std::vector<std::set<std::string>> live_after(const LaqccProgram& p, const std::set<std::string>& keep) {
  const auto& layers = p.layers();
  std::vector<std::set<std::string>> live(layers.size());
  std::set<std::string> acc = keep;
  for (size_t i = layers.size(); i-- > 0;) {
    live[i] = acc;
    const Layer& l = layers[i];
    if (const auto* q = std::get_if<QuantumLayer>(&l)) {
      for (const auto& op : q->ops) {
        if (op.condition) acc.insert(op.condition->source);
      }
    } else if (const auto* c = std::get_if<ClassicalLayer>(&l)) {
      acc.insert(c->inputs.begin(), c->inputs.end());
    }
  }
  return live;
}

size_t state_signature(const SparseState& s) {
  size_t h = s.support();
  for (const auto& [k, a] : s.amplitudes()) h ^= k.hash() * 0x9e3779b97f4a7c15ULL;
  return h;
}

bool same_up_to_phase(const SparseState& a, const SparseState& b) {
  if (a.support() != b.support()) return false;
  for (const auto& [k, v] : a.amplitudes()) {
    if (!b.amplitudes().count(k)) return false;
  }
  return fidelity(a, b) > 1.0 - 1e-10;
}

void merge(std::vector<Item>& items, const std::set<std::string>& live) {
  std::unordered_map<size_t, std::vector<size_t>> buckets;
  std::vector<Item> out;
  out.reserve(items.size());
  for (Item& it : items) {
    Values kept;
    for (const auto& [name, bits] : it.values) {
      if (live.count(name)) kept[name] = bits;
    }
    it.values = std::move(kept);
    size_t h = state_signature(it.state);
    for (const auto& [name, bits] : it.values) {
      h = h * 1000003u ^ std::hash<std::string>()(name);
      for (uint8_t b : bits) h = h * 31u + b;
    }
    auto& bucket = buckets[h];
    bool merged = false;
    for (size_t idx : bucket) {
      Item& o = out[idx];
      if (o.values == it.values && same_up_to_phase(o.state, it.state)) {
        o.prob += it.prob;
        o.leaves += it.leaves;
        merged = true;
        break;
      }
    }
    if (!merged) {
      bucket.push_back(out.size());
      out.push_back(std::move(it));
    }
  }
  items = std::move(out);
}

}  // namespace

EnumerationResult enumerate_branches(const LaqccProgram& p, const EnumerationOptions& options) {
  return enumerate_branches(p, SparseState(p.num_qubits()), options);
}

EnumerationResult enumerate_branches(const LaqccProgram& p, const SparseState& initial,
                                     const EnumerationOptions& options) {
  if (initial.num_qubits() != p.num_qubits()) throw DimensionError("initial state width mismatch");
  const auto live = live_after(p, options.keep_labels);
  EnumerationResult res;
  std::vector<Item> items(1);
  items[0].state = initial;
  res.support_max = initial.support();
  const Unitary h = gates::h();
  const auto& layers = p.layers();
  for (size_t li = 0; li < layers.size(); ++li) {
    const Layer& layer = layers[li];
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      for (Item& it : items) run_quantum(it.state, *q, it.values);
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      std::vector<Item> cur;
      cur.reserve(items.size());
      for (Item& it : items) {
        it.record.push_back({m->label, {}, 1.0});
        cur.push_back(std::move(it));
      }
      for (size_t i = 0; i < m->qubits.size(); ++i) {
        const Qubit qb = m->qubits[i];
        const std::span<const Qubit> one(&qb, 1);
        std::vector<Item> next;
        next.reserve(cur.size() * 2);
        for (Item& it : cur) {
          if (m->basis(i) == Basis::kX) it.state.apply(h, one);
          auto outs = branch_enumerate(it.state, one);
          for (size_t b = 0; b < outs.size(); ++b) {
            Item child;
            if (b + 1 == outs.size()) {
              child = std::move(it);
            } else {
              child.values = it.values;
              child.record = it.record;
              child.prob = it.prob;
              child.leaves = it.leaves;
            }
            child.state = std::move(outs[b].post);
            child.prob *= outs[b].probability;
            child.record.back().bits.push_back(outs[b].bits[0]);
            child.record.back().probability *= outs[b].probability;
            next.push_back(std::move(child));
          }
        }
        cur = std::move(next);
        res.frontier_max = std::max(res.frontier_max, cur.size());
        if (cur.size() > options.max_frontier) {
          throw RangeError("branch frontier exceeds " + std::to_string(options.max_frontier));
        }
      }
      for (Item& it : cur) it.values[m->label] = it.record.back().bits;
      items = std::move(cur);
      if (options.merge) merge(items, live[li]);
    } else {
      const auto& c = std::get<ClassicalLayer>(layer);
      for (Item& it : items) it.values[c.output] = run_classical(c, it.values);
      if (options.merge) merge(items, live[li]);
    }
    res.frontier_max = std::max(res.frontier_max, items.size());
    for (const Item& it : items) res.support_max = std::max(res.support_max, it.state.support());
  }
  for (Item& it : items) {
    res.leaves += it.leaves;
    res.total_probability += it.prob;
    res.classes.push_back({std::move(it.state), std::move(it.record), it.prob, it.leaves});
  }
  return res;
}

ResourceProfile resources(const LaqccProgram& p, const ChargeTable& charges) {
  ResourceProfile r;
  const int n = p.num_qubits();
  r.width = n;
  r.charged_width = n;
  std::vector<int> lvl(static_cast<size_t>(n), 0), clvl(static_cast<size_t>(n), 0),
      depth(static_cast<size_t>(n), 0);
  std::map<std::string, int> val, cval;
  for (const Layer& layer : p.layers()) {
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      int64_t extra = 0;
      for (const Operation& op : q->ops) {
        const auto sup = op.support();
        int base = 0, cbase = 0, d = 0;
        for (Qubit x : sup) {
          base = std::max(base, lvl[static_cast<size_t>(x)]);
          cbase = std::max(cbase, clvl[static_cast<size_t>(x)]);
          d = std::max(d, depth[static_cast<size_t>(x)]);
        }
        if (op.condition) {
          base = std::max(base, val.at(op.condition->source));
          cbase = std::max(cbase, cval.at(op.condition->source));
        }
        if (op.is_macro()) {
          const Macro& m = *op.macro();
          cbase += charges.rounds(m.charge_name(), m.charge_size());
          d += charges.depth(m.charge_name());
          extra += charges.width(m.charge_name(), m.charge_size(), m.charge_t()) -
                   static_cast<int64_t>(sup.size());
          ++r.macro_count;
        } else {
          d += 1;
        }
        for (Qubit x : sup) {
          lvl[static_cast<size_t>(x)] = base;
          clvl[static_cast<size_t>(x)] = cbase;
          depth[static_cast<size_t>(x)] = d;
        }
      }
      r.charged_width = std::max<int64_t>(r.charged_width, n + std::max<int64_t>(0, extra));
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      int v = 0, cv = 0;
      for (Qubit x : m->qubits) {
        v = std::max(v, lvl[static_cast<size_t>(x)]);
        cv = std::max(cv, clvl[static_cast<size_t>(x)]);
      }
      val[m->label] = v + 1;
      cval[m->label] = cv + 1;
      ++r.measure_layers;
    } else {
      const auto& c = std::get<ClassicalLayer>(layer);
      int v = 0, cv = 0;
      for (const auto& in : c.inputs) {
        v = std::max(v, val.at(in));
        cv = std::max(cv, cval.at(in));
      }
      val[c.output] = v;
      cval[c.output] = cv;
      if (c.depth_class == DepthClass::kAll) r.classical_depth_class = DepthClass::kAll;
    }
  }
  for (int q = 0; q < n; ++q) {
    r.rounds = std::max(r.rounds, lvl[static_cast<size_t>(q)]);
    r.charged_rounds = std::max(r.charged_rounds, clvl[static_cast<size_t>(q)]);
    r.quantum_depth = std::max(r.quantum_depth, depth[static_cast<size_t>(q)]);
  }
  return r;
}

nlohmann::json to_json(const ResourceProfile& r) {
  return {{"width", r.width},
          {"quantum_depth", r.quantum_depth},
          {"rounds", r.rounds},
          {"charged_rounds", r.charged_rounds},
          {"classical_depth_class", depth_class_name(r.classical_depth_class)},
          {"charged_width", r.charged_width},
          {"measure_layers", r.measure_layers},
          {"macro_count", r.macro_count}};
}

}  // namespace laqcc
