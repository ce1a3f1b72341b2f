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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "laqcc/acceptance.hpp"
#include "laqcc/clifford.hpp"
#include "laqcc/error.hpp"
#include "laqcc/gates.hpp"
#include "laqcc/numbersys.hpp"
#include "laqcc/program.hpp"
#include "laqcc/stateprep.hpp"
#include "laqcc/verify.hpp"

namespace laqcc::cli {

namespace {

using nlohmann::json;

// Bad input files are usage errors, not infeasible parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
  const char* env = std::getenv("LAQCC_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw InputError(std::string("LAQCC_SEED is not an unsigned integer: ") + env);
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Accepts a bare program document or any object carrying one under "program".
LaqccProgram read_program(const std::string& path) {
  json j = read_json(path);
  if (j.is_object() && !j.contains("layers") && j.contains("program")) j = j["program"];
  try {
    return program_from_json(j);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<int> parse_digits(const std::string& s) {
  std::vector<int> out;
  std::string t;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ' ') continue;
    t.push_back(c);
  }
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad digit list '" + s + "'");
    }
  }
  return out;
}

struct PrepArgs {
  std::string kind;
  int n = -1;
  int k = -1;
  int64_t q = -1;
  std::string method = "small-k";
  std::string backend = "gadget";
  std::string cleaning = "auto";
  std::string branches = "exhaustive";
  uint64_t seed = 1;
  bool emit_program = false;
  bool emit_target = false;
};

FanoutBackend parse_backend(const std::string& s) {
  return s == "semantic" ? FanoutBackend::kSemantic : FanoutBackend::kGadget;
}

int need(int v, const char* flag) {
  if (v < 0) throw InputError(std::string("missing ") + flag);
  return v;
}

Protocol build_protocol(const PrepArgs& a) {
  if (a.kind == "ghz") return ghz_protocol(need(a.n, "--n"));
  if (a.kind == "w") return w_state(need(a.n, "--n"), parse_backend(a.backend));
  if (a.kind == "uniform") {
    if (a.q < 1) throw InputError("missing --q");
    return uniform(static_cast<uint64_t>(a.q));
  }
  const int n = need(a.n, "--n");
  const int k = need(a.k, "--k");
  if (a.method == "factoradic") return dicke_factoradic(n, k);
  DickeOptions o;
  if (a.cleaning == "gadget") o.cleaning = DickeOptions::Cleaning::kGadget;
  if (a.cleaning == "semantic") o.cleaning = DickeOptions::Cleaning::kSemantic;
  return dicke_small_k(n, k, o);
}

int cmd_prep(const PrepArgs& a, std::ostream& out, std::ostream& err) {
  Protocol p = build_protocol(a);
  BranchPolicy pol = parse_branch_policy(a.branches, a.seed);
  ProtocolReport r = verify_protocol(p, pol);
  json j = r.to_json(true);
  if (a.emit_program) j["program"] = to_json(p.program);
  if (a.emit_target) j["target"] = to_json(p.target);
  out << j.dump(2) << "\n";
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  err << r.protocol << ": fidelity " << r.fidelity << ", width " << r.width << ", rounds " << r.rounds
      << ", branches " << r.branch_mode << " (" << r.classes << " classes)"
      << (r.passed ? "" : ", FAILED") << "\n";
  return r.passed ? kExitOk : kExitCheckFailed;
}

int cmd_flatten(const std::string& kind, const std::string& input, uint64_t seed, std::ostream& out,
                std::ostream& err) {
  clifford::CliffordCircuit c;
  try {
    c = clifford::circuit_from_json(read_json(input));
  } catch (const json::exception& e) {
    throw InputError(input + ": " + e.what());
  }
  clifford::FlatProgram fp = kind == "ladder" ? clifford::flatten_ladder(c) : clifford::flatten_grid(c);
  json j = {{"shape", clifford::shape_name(c.shape)},
            {"n", c.n},
            {"program", to_json(fp.program)},
            {"inputs", fp.inputs},
            {"outputs", fp.outputs},
            {"correction_map", fp.map.to_json()},
            {"resources", to_json(resources(fp.program))}};

  // Random product input, every merged branch against the direct circuit.
  bool ok = true;
  json check = {{"seed", seed}};
  if (fp.program.num_qubits() <= 24) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    SparseState init(fp.program.num_qubits());
    for (Qubit q : fp.inputs) {
      const std::vector<Qubit> t{q};
      init.apply(gates::h(), t);
      init.apply(gates::rz(angle(rng)), t);
      init.apply(gates::h(), t);
      init.apply(gates::rz(angle(rng)), t);
    }
    SparseState direct = restrict_to(init, fp.inputs);
    std::vector<Qubit> wires(static_cast<size_t>(c.n));
    for (int i = 0; i < c.n; ++i) wires[static_cast<size_t>(i)] = i;
    clifford::apply_word(direct, c.gates(), wires);
    EnumerationResult e = enumerate_branches(fp.program, init);
    double fid = 1.0;
    for (const auto& b : e.classes) fid = std::min(fid, reduced_fidelity(b.state, fp.outputs, direct));
    ok = fid >= 1 - kFidelityTolerance && std::abs(e.total_probability - 1) <= kFidelityTolerance;
    check["verified"] = true;
    check["fidelity"] = fid;
    check["classes"] = e.classes.size();
    check["branches"] = e.leaves;
  } else {
    check["verified"] = false;
  }
  check["passed"] = ok;
  j["check"] = check;
  out << j.dump(2) << "\n";
  err << "flatten " << kind << ": n=" << c.n << ", width " << fp.program.num_qubits() << ", "
      << fp.map.inputs / 2 << " teleports" << (ok ? "" : ", FAILED") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

MeasurementRecord parse_transcript(const json& j, const LaqccProgram& p) {
  MeasurementRecord t;
  if (!j.is_array()) throw InputError("transcript must be a JSON array");
  for (const auto& e : j) {
    MeasurementEntry m;
    const std::string bits = e.is_string() ? e.get<std::string>() : e.at("bits").get<std::string>();
    if (e.is_object() && e.contains("label")) m.label = e["label"].get<std::string>();
    for (char c : bits) {
      if (c != '0' && c != '1') throw InputError("transcript bits must be 0/1");
      m.bits.push_back(c == '1');
    }
    t.push_back(std::move(m));
  }
  // Fill probabilities by replaying the forced outcomes.
  std::vector<Bits> forced;
  for (const auto& m : t) forced.push_back(m.bits);
  if (forced.size() != p.measure_layer_count()) throw InputError("transcript needs one entry per measure layer");
  ExecutionPolicy pol;
  pol.mode = ExecutionPolicy::Mode::kForced;
  pol.forced = forced;
  return execute(p, pol).record;
}

json record_json(const MeasurementRecord& r) {
  json a = json::array();
  for (const auto& m : r) a.push_back({{"label", m.label}, {"bits", bits_to_string(m.bits)}, {"probability", m.probability}});
  return a;
}

int cmd_transform(const std::string& kind, const std::string& input, const std::string& transcript, uint64_t seed,
                  std::ostream& out, std::ostream& err) {
  LaqccProgram p = read_program(input);
  if (kind == "defer") {
    LaqccProgram d = defer_measurements(p);
    json j = {{"transform", "defer"},
              {"program", to_json(d)},
              {"measure_layers", d.measure_layer_count()},
              {"resources_before", to_json(resources(p))},
              {"resources_after", to_json(resources(d))}};
    out << j.dump(2) << "\n";
    err << "defer: " << p.measure_layer_count() << " measure layers -> " << d.measure_layer_count() << "\n";
    return kExitOk;
  }
  MeasurementRecord t;
  if (transcript.empty()) {
    t = execute(p, ExecutionPolicy::seeded(seed)).record;
  } else {
    json tj;
    try {
      tj = json::parse(transcript);
    } catch (const json::exception&) {
      tj = read_json(transcript);
    }
    t = parse_transcript(tj, p);
  }
  PostselectedProgram ps = to_postselected(p, t);
  const double prob = record_probability(t);
  json j = {{"transform", "postselect"},
            {"program", to_json(ps.program)},
            {"flag", ps.flag},
            {"compare_qubits", ps.compare_qubits},
            {"transcript", record_json(t)},
            {"probability", prob}};
  out << j.dump(2) << "\n";
  err << "postselect: flag qubit " << ps.flag << ", transcript probability " << prob << "\n";
  return kExitOk;
}

int cmd_numbers(const std::string& kind, const std::string& digits, const std::string& bits, const std::string& zeros,
                const std::string& ones, int n, int k, std::ostream& out, std::ostream& err) {
  using namespace numbers;
  if (kind == "fac2comb") {
    Factoradic y(parse_digits(digits));
    if (k < 0) throw InputError("missing --k");
    Bitstring s = fac_to_comb(y, k);
    Decomposition d = fac_decompose(y, k);
    json j = {{"factoradic", y.digits()},
              {"k", k},
              {"bitstring", to_string(s)},
              {"zeros", d.z.digits()},
              {"ones", d.o.digits()}};
    out << j.dump(2) << "\n";
    err << y.to_string() << " -> " << to_string(s) << "\n";
    return kExitOk;
  }
  if (kind == "comb2fac") {
    Bitstring s = bitstring_from_string(bits);
    Factoradic z(parse_digits(zeros)), o(parse_digits(ones));
    Factoradic y = comb_to_fac(s, z, o);
    const bool round_trip = fac_to_comb(y, weight(s)) == s;
    json j = {{"bitstring", bits}, {"zeros", z.digits()}, {"ones", o.digits()}, {"factoradic", y.digits()},
              {"round_trip", round_trip}};
    out << j.dump(2) << "\n";
    err << bits << " -> " << y.to_string() << "\n";
    return round_trip ? kExitOk : kExitCheckFailed;
  }
  if (n < 0) throw InputError("missing --n");
  if (n > 9) throw RangeError("check-bijection enumerates n! factoradics; use n <= 9");
  bool ok = true;
  json per_k = json::array();
  for (int kk = 0; kk <= n; ++kk) {
    std::map<Bitstring, long> pre;
    long round_trips = 0;
    for_each_factoradic(n, [&](const Factoradic& y) {
      Bitstring s = fac_to_comb(y, kk);
      ++pre[s];
      Decomposition d = fac_decompose(y, kk);
      if (d.s == s && comb_to_fac(d.s, d.z, d.o) == y) ++round_trips;
    });
    const long want = static_cast<long>(factorial(kk) * factorial(n - kk));
    bool counts = static_cast<BigInt>(pre.size()) == binomial(n, kk);
    for (const auto& [s, c] : pre) counts = counts && c == want && weight(s) == kk;
    const bool kok = counts && round_trips == static_cast<long>(factorial(n));
    ok = ok && kok;
    per_k.push_back({{"k", kk},
                     {"images", pre.size()},
                     {"preimages_each", want},
                     {"round_trips", round_trips},
                     {"passed", kok}});
  }
  out << json{{"n", n}, {"per_k", per_k}, {"passed", ok}}.dump(2) << "\n";
  err << "check-bijection n=" << n << (ok ? ": ok" : ": FAILED") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(int max_n, uint64_t seed, std::ostream& out, std::ostream& err) {
  AcceptanceOptions o;
  o.max_n = max_n;
  o.seed = seed;
  json rows = json::array();
  bool all = true;
  run_acceptance(o, [&](const CriterionResult& r) {
    err << format_result(r) << std::endl;
    all = all && r.passed;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"limit_seconds", r.limit_seconds},
                    {"detail", r.detail}});
  });
  out << json{{"criteria", rows}, {"passed", all}}.dump(2) << "\n";
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LAQCC simulator and compiler toolkit", "laqcc"};
  app.require_subcommand(1);
  uint64_t seed = 1;
  try {
    seed = default_seed();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  PrepArgs pa;
  pa.seed = seed;
  auto* prep = app.add_subcommand("prep", "Build, execute and verify a state-preparation protocol");
  prep->add_option("protocol", pa.kind, "ghz, w, uniform or dicke")
      ->required()
      ->check(CLI::IsMember({"ghz", "w", "uniform", "dicke"}));
  prep->add_option("--n", pa.n, "Number of system qubits");
  prep->add_option("--k", pa.k, "Dicke weight");
  prep->add_option("--q", pa.q, "Uniform superposition size");
  prep->add_option("--method", pa.method, "Dicke method")->check(CLI::IsMember({"small-k", "factoradic"}));
  prep->add_option("--backend", pa.backend, "Fanout backend for w")->check(CLI::IsMember({"gadget", "semantic"}));
  prep->add_option("--cleaning", pa.cleaning, "Dicke small-k cleaning")
      ->check(CLI::IsMember({"auto", "gadget", "semantic"}));
  prep->add_option("--seed", pa.seed, "Seed for sampling");
  prep->add_option("--branches", pa.branches, "exhaustive or sample:N");
  prep->add_flag("--emit-program", pa.emit_program, "Include the program JSON");
  prep->add_flag("--emit-target", pa.emit_target, "Include the target amplitudes");

  std::string fl_kind, fl_input;
  uint64_t fl_seed = seed;
  auto* flat = app.add_subcommand("flatten", "Flatten a Clifford ladder or grid into constant depth");
  flat->add_option("shape", fl_kind, "ladder or grid")->required()->check(CLI::IsMember({"ladder", "grid"}));
  flat->add_option("--input", fl_input, "Circuit JSON file")->required();
  flat->add_option("--seed", fl_seed, "Seed for the random input check");

  std::string tr_kind, tr_input, tr_transcript;
  uint64_t tr_seed = seed;
  auto* tr = app.add_subcommand("transform", "Defer measurements or build a post-selected program");
  tr->add_option("kind", tr_kind, "defer or postselect")->required()->check(CLI::IsMember({"defer", "postselect"}));
  tr->add_option("--input", tr_input, "Program JSON file")->required();
  tr->add_option("--transcript", tr_transcript, "Transcript JSON (inline or file); sampled if absent");
  tr->add_option("--seed", tr_seed, "Seed for sampling a transcript");

  std::string nu_kind, nu_digits, nu_bits, nu_zeros, nu_ones;
  int nu_n = -1, nu_k = -1;
  auto* nu = app.add_subcommand("numbers", "Factoradic and combinatorial number system conversions");
  nu->add_option("op", nu_kind, "fac2comb, comb2fac or check-bijection")
      ->required()
      ->check(CLI::IsMember({"fac2comb", "comb2fac", "check-bijection"}));
  nu->add_option("--digits", nu_digits, "Factoradic digits, most significant first, comma separated");
  nu->add_option("--k", nu_k, "Weight");
  nu->add_option("--bits", nu_bits, "Bitstring, position 0 rightmost");
  nu->add_option("--zeros", nu_zeros, "Factoradic of the zeros");
  nu->add_option("--ones", nu_ones, "Factoradic of the ones");
  nu->add_option("--n", nu_n, "Length for check-bijection");

  bool all = false;
  int max_n = 8;
  uint64_t ve_seed = std::getenv("LAQCC_SEED") ? seed : AcceptanceOptions{}.seed;
  auto* ve = app.add_subcommand("verify", "Run the acceptance suite");
  ve->add_flag("--all", all, "Run every criterion")->required();
  ve->add_option("--max-n", max_n, "Largest n for the scaling criteria")->check(CLI::Range(2, 8));
  ve->add_option("--seed", ve_seed, "Seed for randomized criteria");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*prep) return cmd_prep(pa, out, err);
    if (*flat) return cmd_flatten(fl_kind, fl_input, fl_seed, out, err);
    if (*tr) return cmd_transform(tr_kind, tr_input, tr_transcript, tr_seed, out, err);
    if (*nu) return cmd_numbers(nu_kind, nu_digits, nu_bits, nu_zeros, nu_ones, nu_n, nu_k, out, err);
    return cmd_verify(max_n, ve_seed, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  }
}

}  // namespace laqcc::cli
