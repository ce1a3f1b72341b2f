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

#include "laqcc/builder.hpp"

#include <algorithm>

#include "laqcc/error.hpp"

namespace laqcc {

bool Fragment::is_unitary() const {
  return std::all_of(layers.begin(), layers.end(),
                     [](const Layer& l) { return std::holds_alternative<QuantumLayer>(l); });
}

Fragment Fragment::inverse() const {
  Fragment f;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    const auto* q = std::get_if<QuantumLayer>(&*it);
    if (q == nullptr) throw ValidationError("cannot invert a fragment that measures");
    QuantumLayer inv;
    for (auto op = q->ops.rbegin(); op != q->ops.rend(); ++op) {
      if (op->condition) throw ValidationError("cannot invert a conditional operation");
      inv.ops.push_back(op->inverse());
    }
    f.layers.push_back(std::move(inv));
  }
  return f;
}

std::set<Qubit> Fragment::support() const {
  std::set<Qubit> s;
  for (const Layer& l : layers) {
    if (const auto* q = std::get_if<QuantumLayer>(&l)) {
      for (const auto& op : q->ops) {
        for (Qubit x : op.support()) s.insert(x);
      }
    } else if (const auto* m = std::get_if<MeasureLayer>(&l)) {
      s.insert(m->qubits.begin(), m->qubits.end());
    }
  }
  return s;
}

ProgramBuilder ProgramBuilder::extend(const LaqccProgram& p) {
  ProgramBuilder b;
  b.n_ = p.num_qubits();
  b.regs_ = p.registers();
  return b;
}

std::vector<Qubit> ProgramBuilder::allocate(const std::string& name, int count, RegisterRole role) {
  if (count < 0) throw ValidationError("negative register size");
  std::vector<Qubit> q(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) q[static_cast<size_t>(i)] = n_++;
  if (n_ > kMaxQubits) throw RangeError("program exceeds " + std::to_string(kMaxQubits) + " qubits");
  regs_.add(name, role, q);
  return q;
}

std::vector<Qubit> ProgramBuilder::acquire(int count) {
  std::vector<Qubit> out;
  std::sort(free_.begin(), free_.end(), std::greater<>());
  while (count > 0 && !free_.empty()) {
    out.push_back(free_.back());
    free_.pop_back();
    --count;
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(n_++);
    scratch_all_.push_back(out.back());
  }
  if (n_ > kMaxQubits) throw RangeError("program exceeds " + std::to_string(kMaxQubits) + " qubits");
  return out;
}

void ProgramBuilder::release(const std::vector<Qubit>& qubits) {
  for (Qubit q : qubits) {
    if (std::find(scratch_all_.begin(), scratch_all_.end(), q) == scratch_all_.end()) {
      throw ValidationError("released qubit was not acquired as scratch");
    }
    if (std::find(free_.begin(), free_.end(), q) != free_.end() ||
        std::find(held_.begin(), held_.end(), q) != held_.end()) {
      throw ValidationError("scratch qubit released twice");
    }
    (parallel_ > 0 ? held_ : free_).push_back(q);
  }
}

void ProgramBuilder::begin_parallel() { ++parallel_; }

void ProgramBuilder::end_parallel() {
  if (parallel_ == 0) throw ValidationError("end_parallel without begin_parallel");
  if (--parallel_ == 0) {
    free_.insert(free_.end(), held_.begin(), held_.end());
    held_.clear();
  }
}

std::vector<Layer>& ProgramBuilder::sink() { return captures_.empty() ? layers_ : captures_.back(); }

void ProgramBuilder::push_layer(Layer l) {
  sink().push_back(std::move(l));
  barrier_ = false;
}

void ProgramBuilder::op(Operation o) {
  auto& layers = sink();
  const auto sup = o.support();
  for (Qubit q : sup) {
    if (q < 0 || q >= n_) throw IndexError("operation on unallocated qubit " + std::to_string(q));
  }
  bool fits = !barrier_ && !layers.empty() && std::holds_alternative<QuantumLayer>(layers.back());
  if (fits) {
    for (const auto& other : std::get<QuantumLayer>(layers.back()).ops) {
      for (Qubit q : other.support()) {
        if (std::find(sup.begin(), sup.end(), q) != sup.end()) fits = false;
      }
      if (!fits) break;
    }
  }
  if (!fits) push_layer(QuantumLayer{});
  std::get<QuantumLayer>(sink().back()).ops.push_back(std::move(o));
}

void ProgramBuilder::gate(Unitary u, std::vector<Qubit> targets, std::vector<Qubit> controls,
                          std::optional<Condition> condition) {
  if (static_cast<int>(targets.size()) != u.arity) throw ValidationError("gate arity mismatch");
  if (u.arity > kMaxGateArity) throw ValidationError("gates act on at most two qubits");
  op(Operation{std::move(u), std::move(targets), std::move(controls), std::move(condition)});
}

void ProgramBuilder::macro(MacroPtr m, std::vector<Qubit> qubits, std::vector<Qubit> controls,
                           std::optional<Condition> condition) {
  if (static_cast<int>(qubits.size()) != m->arity()) {
    throw ValidationError("macro " + m->kind() + " arity mismatch");
  }
  std::vector<Qubit> all = qubits;
  all.insert(all.end(), controls.begin(), controls.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw RegisterOverlapError("macro " + m->kind() + " registers overlap");
  }
  op(Operation{std::move(m), std::move(qubits), std::move(controls), std::move(condition)});
}

void ProgramBuilder::barrier() { barrier_ = true; }

std::string ProgramBuilder::fresh_label(const std::string& stem) {
  const int c = label_counts_[stem]++;
  return stem + "_" + std::to_string(c);
}

std::string ProgramBuilder::measure(std::vector<Qubit> qubits, const std::string& stem,
                                    std::vector<Basis> bases) {
  const std::string label = fresh_label(stem);
  push_layer(MeasureLayer{std::move(qubits), std::move(bases), label});
  return label;
}

std::string ProgramBuilder::classical(const std::string& stem, std::vector<std::string> inputs,
                                      ClassicalFunction fn, DepthClass depth_class) {
  const std::string label = fresh_label(stem);
  push_layer(ClassicalLayer{label, std::move(inputs), std::move(fn), depth_class});
  return label;
}

void ProgramBuilder::begin_capture() {
  captures_.emplace_back();
  barrier_ = false;
}

Fragment ProgramBuilder::end_capture() {
  if (captures_.empty()) throw ValidationError("end_capture without begin_capture");
  Fragment f{std::move(captures_.back())};
  captures_.pop_back();
  return f;
}

void ProgramBuilder::append(const Fragment& f) {
  for (const Layer& l : f.layers) {
    if (const auto* q = std::get_if<QuantumLayer>(&l)) {
      for (const auto& o : q->ops) op(o);
    } else {
      push_layer(l);
    }
  }
}

LaqccProgram ProgramBuilder::build(const std::string& name) const {
  if (parallel_ > 0) throw ValidationError("build inside an open parallel block");
  if (!captures_.empty()) throw ValidationError("build() inside an open capture");
  RegisterMap regs = regs_;
  if (!scratch_all_.empty()) {
    std::vector<Qubit> s = scratch_all_;
    std::sort(s.begin(), s.end());
    regs.add("scratch", RegisterRole::kAncilla, s);
  }
  return LaqccProgram(name, n_, std::move(regs), layers_);
}

}  // namespace laqcc
