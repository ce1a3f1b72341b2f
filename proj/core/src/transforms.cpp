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

#include <algorithm>
#include <map>

#include "laqcc/builder.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/program.hpp"

namespace laqcc {

LaqccProgram defer_measurements(const LaqccProgram& p) {
  if (p.measure_layer_count() == 0) return p;
  ProgramBuilder b = ProgramBuilder::extend(p);
  std::map<std::string, std::vector<Qubit>> wires;  // label or output -> qubit per bit
  std::vector<Qubit> copies;
  for (const Layer& layer : p.layers()) {
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      for (Operation op : q->ops) {
        if (op.condition) {
          op.controls.push_back(wires.at(op.condition->source).at(static_cast<size_t>(op.condition->bit)));
          op.condition.reset();
        }
        b.op(std::move(op));
      }
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      const auto c = b.allocate("deferred_" + m->label, static_cast<int>(m->qubits.size()),
                                RegisterRole::kAncilla);
      for (size_t i = 0; i < m->qubits.size(); ++i) {
        if (m->basis(i) == Basis::kX) b.gate(gates::h(), {m->qubits[i]});
        b.gate(gates::cnot(), {m->qubits[i], c[i]});
      }
      wires[m->label] = c;
      copies.insert(copies.end(), c.begin(), c.end());
    } else {
      const auto& cl = std::get<ClassicalLayer>(layer);
      std::vector<Qubit> in;
      for (const auto& name : cl.inputs) {
        const auto& w = wires.at(name);
        in.insert(in.end(), w.begin(), w.end());
      }
      const ClassicalFunction& fn = cl.function;
      std::vector<Qubit> out(static_cast<size_t>(fn.output_width()), -1);
      if (fn.kind() == ClassicalFunction::Kind::kLinear) {
        std::vector<int> fresh;
        for (int i = 0; i < fn.output_width(); ++i) {
          int j = -1;
          if (fn.is_identity_bit(i, &j)) {
            out[static_cast<size_t>(i)] = in[static_cast<size_t>(j)];
          } else {
            fresh.push_back(i);
          }
        }
        if (!fresh.empty()) {
          const auto anc = b.allocate("deferred_" + cl.output, static_cast<int>(fresh.size()),
                                      RegisterRole::kAncilla);
          for (size_t f = 0; f < fresh.size(); ++f) {
            const int i = fresh[f];
            out[static_cast<size_t>(i)] = anc[f];
            const Bits& row = fn.rows()[static_cast<size_t>(i)];
            for (size_t j = 0; j < row.size(); ++j) {
              if (row[j]) b.gate(gates::cnot(), {in[j], anc[f]});
            }
            if (fn.constant()[static_cast<size_t>(i)]) b.gate(gates::x(), {anc[f]});
          }
        }
      } else {
        if (!fn.has_circuit_form()) {
          throw ValidationError("classical function " + fn.name() + " has no circuit form");
        }
        const auto anc = b.allocate("deferred_" + cl.output, fn.output_width(), RegisterRole::kAncilla);
        std::vector<Qubit> qs = in;
        qs.insert(qs.end(), anc.begin(), anc.end());
        b.macro(macros::truth_table(fn.input_width(), fn.output_width(), fn.tabulate()), qs);
        out = anc;
      }
      wires[cl.output] = out;
    }
  }
  b.measure(copies, "deferred");
  return b.build(p.name() + "_deferred");
}

PostselectedProgram to_postselected(const LaqccProgram& p, const MeasurementRecord& transcript) {
  std::vector<Bits> forced;
  for (const auto& e : transcript) forced.push_back(e.bits);
  if (forced.size() != p.measure_layer_count()) {
    throw ValidationError("transcript must list one outcome per measurement layer");
  }
  // Replays the transcript; throws InfeasibleBranchError on a zero-probability branch.
  execute(p, ExecutionPolicy::forcing(forced));

  ProgramBuilder b = ProgramBuilder::extend(p);
  std::map<std::string, Bits> values;
  std::vector<Qubit> compare;
  size_t mi = 0;
  for (const Layer& layer : p.layers()) {
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      for (Operation op : q->ops) {
        if (op.condition) {
          if (!values.at(op.condition->source).at(static_cast<size_t>(op.condition->bit))) continue;
          op.condition.reset();
        }
        b.op(std::move(op));
      }
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      const MeasurementEntry& e = transcript[mi++];
      if (e.label != m->label || e.bits.size() != m->qubits.size()) {
        throw ValidationError("transcript entry does not match layer " + m->label);
      }
      values[m->label] = e.bits;
      for (size_t i = 0; i < m->qubits.size(); ++i) {
        if (m->basis(i) == Basis::kX) b.gate(gates::h(), {m->qubits[i]});
      }
      const size_t chunks = std::max<size_t>(1, (m->qubits.size() + 63) / 64);
      const auto anc = b.allocate("compare_" + m->label, static_cast<int>(chunks), RegisterRole::kAncilla);
      for (size_t c = 0; c < chunks; ++c) {
        const size_t lo = c * 64;
        const size_t hi = std::min(m->qubits.size(), lo + 64);
        std::vector<Qubit> qs(m->qubits.begin() + static_cast<long>(lo), m->qubits.begin() + static_cast<long>(hi));
        uint64_t v = 0;
        for (size_t i = lo; i < hi; ++i) v |= static_cast<uint64_t>(e.bits[i] & 1) << (i - lo);
        const int width = static_cast<int>(qs.size());
        qs.push_back(anc[c]);
        if (width == 0) {
          b.gate(gates::x(), {anc[c]});
        } else {
          b.macro(macros::equal(width, v), qs);
        }
      }
      compare.insert(compare.end(), anc.begin(), anc.end());
    } else {
      const auto& cl = std::get<ClassicalLayer>(layer);
      Bits in;
      for (const auto& name : cl.inputs) {
        const Bits& v = values.at(name);
        in.insert(in.end(), v.begin(), v.end());
      }
      values[cl.output] = cl.function.eval(in);
    }
  }
  const auto flag = b.allocate("postselect_flag", 1, RegisterRole::kFlag);
  if (compare.empty()) {
    b.gate(gates::x(), {flag[0]});
  } else {
    std::vector<Qubit> qs = compare;
    qs.push_back(flag[0]);
    b.macro(macros::and_gate(static_cast<int>(compare.size())), qs);
  }
  PostselectedProgram out;
  out.program = b.build(p.name() + "_postselected");
  out.flag = flag[0];
  out.compare_qubits = compare;
  return out;
}

}  // namespace laqcc
