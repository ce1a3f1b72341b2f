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

#include "laqcc/error.hpp"
#include "laqcc/program.hpp"

namespace laqcc {

namespace {

using nlohmann::json;

json op_to_json(const Operation& op) {
  json j;
  if (op.is_macro()) {
    j["macro"] = op.macro()->kind();
    j["params"] = op.macro()->params();
  } else {
    const Unitary& u = op.unitary();
    json re = json::array(), im = json::array();
    for (const Complex& c : u.m) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    j["gate"] = u.name;
    j["arity"] = u.arity;
    j["re"] = re;
    j["im"] = im;
  }
  j["qubits"] = op.qubits;
  if (!op.controls.empty()) j["controls"] = op.controls;
  if (op.condition) j["condition"] = {{"source", op.condition->source}, {"bit", op.condition->bit}};
  return j;
}

Operation op_from_json(const json& j) {
  Operation op;
  if (j.contains("macro")) {
    op.op = make_macro(j.at("macro").get<std::string>(), j.value("params", json::object()));
  } else {
    Unitary u;
    u.name = j.at("gate").get<std::string>();
    u.arity = j.at("arity").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size()) throw ValidationError("gate matrix re/im length mismatch");
    for (size_t i = 0; i < re.size(); ++i) u.m.emplace_back(re[i], im[i]);
    if (!u.is_unitary(1e-9)) throw ValidationError("gate " + u.name + " is not unitary");
    op.op = std::move(u);
  }
  op.qubits = j.at("qubits").get<std::vector<Qubit>>();
  op.controls = j.value("controls", std::vector<Qubit>{});
  if (j.contains("condition")) {
    op.condition = Condition{j["condition"].at("source").get<std::string>(), j["condition"].at("bit").get<int>()};
  }
  return op;
}

}  // namespace

nlohmann::json to_json(const LaqccProgram& p) {
  json regs = json::array();
  for (const auto& r : p.registers().all()) {
    regs.push_back({{"name", r.name}, {"role", role_name(r.role)}, {"qubits", r.qubits}});
  }
  json layers = json::array();
  for (const Layer& layer : p.layers()) {
    if (const auto* q = std::get_if<QuantumLayer>(&layer)) {
      json ops = json::array();
      for (const auto& op : q->ops) ops.push_back(op_to_json(op));
      layers.push_back({{"kind", "quantum"}, {"gates", ops}});
    } else if (const auto* m = std::get_if<MeasureLayer>(&layer)) {
      json bases = json::array();
      for (size_t i = 0; i < m->qubits.size(); ++i) bases.push_back(m->basis(i) == Basis::kX ? "X" : "Z");
      layers.push_back({{"kind", "measure"}, {"qubits", m->qubits}, {"bases", bases}, {"label", m->label}});
    } else {
      const auto& c = std::get<ClassicalLayer>(layer);
      layers.push_back({{"kind", "classical"},
                        {"output", c.output},
                        {"inputs", c.inputs},
                        {"function", c.function.to_json()},
                        {"function_name", c.function.name()},
                        {"depth_class", depth_class_name(c.depth_class)}});
    }
  }
  return {{"name", p.name()}, {"qubits", p.num_qubits()}, {"registers", regs}, {"layers", layers}};
}

LaqccProgram program_from_json(const nlohmann::json& j) {
  try {
    RegisterMap regs;
    for (const auto& r : j.at("registers")) {
      regs.add(r.at("name").get<std::string>(), role_from_name(r.at("role").get<std::string>()),
               r.at("qubits").get<std::vector<Qubit>>());
    }
    std::vector<Layer> layers;
    for (const auto& l : j.at("layers")) {
      const std::string kind = l.at("kind").get<std::string>();
      if (kind == "quantum") {
        QuantumLayer q;
        for (const auto& g : l.at("gates")) q.ops.push_back(op_from_json(g));
        layers.emplace_back(std::move(q));
      } else if (kind == "measure") {
        MeasureLayer m;
        m.qubits = l.at("qubits").get<std::vector<Qubit>>();
        m.label = l.at("label").get<std::string>();
        for (const auto& b : l.value("bases", json::array())) {
          const std::string s = b.get<std::string>();
          if (s != "X" && s != "Z") throw ValidationError("measurement basis must be X or Z");
          m.bases.push_back(s == "X" ? Basis::kX : Basis::kZ);
        }
        layers.emplace_back(std::move(m));
      } else if (kind == "classical") {
        layers.emplace_back(ClassicalLayer{l.at("output").get<std::string>(),
                                           l.at("inputs").get<std::vector<std::string>>(),
                                           ClassicalFunction::from_json(l.at("function")),
                                           depth_class_from_name(l.value("depth_class", std::string("NC1")))});
      } else {
        throw MalformedProgramError("unknown layer kind '" + kind + "'");
      }
    }
    return LaqccProgram(j.value("name", std::string("program")), j.at("qubits").get<int>(), std::move(regs),
                        std::move(layers));
  } catch (const json::exception& e) {
    throw MalformedProgramError(std::string("malformed program JSON: ") + e.what());
  }
}

json to_json(const SparseState& s) {
  json amps = json::array();
  for (const auto& [k, a] : s.sorted()) {
    std::string basis(static_cast<size_t>(s.num_qubits()), '0');
    for (int q = 0; q < s.num_qubits(); ++q) {
      if (k.test(q)) basis[static_cast<size_t>(q)] = '1';
    }
    amps.push_back({{"basis", basis}, {"re", a.real()}, {"im", a.imag()}});
  }
  return {{"qubits", s.num_qubits()}, {"amplitudes", amps}};
}

}  // namespace laqcc
