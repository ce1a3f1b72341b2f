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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "json.hpp"
#include "laqcc/program.hpp"
#include "laqcc/stateprep.hpp"

namespace laqcc::cli {
namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(LAQCC_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, PrepWExhaustive) {
  Result r = call({"prep", "w", "--n", "4", "--branches", "exhaustive"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_NEAR(j["fidelity"].get<double>(), 1.0, 1e-9);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["ancilla_clean"].get<bool>());
}

TEST(Cli, PrepGhzAndUniform) {
  EXPECT_EQ(call({"prep", "ghz", "--n", "5"}).code, kExitOk);
  EXPECT_EQ(call({"prep", "uniform", "--q", "5"}).code, kExitOk);
  EXPECT_EQ(call({"prep", "dicke", "--n", "4", "--k", "2", "--method", "factoradic"}).code, kExitOk);
}

TEST(Cli, DickePolicyIsInfeasible) {
  Result r = call({"prep", "dicke", "--n", "4", "--k", "3", "--method", "small-k"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"prep", "w", "--n", "4", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(call({"prep", "square", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"flatten", "ladder", "--input", data("missing.json")}).code, kExitUsage);
}

TEST(Cli, SameSeedSameReport) {
  std::vector<std::string> args = {"prep", "dicke", "--n", "5", "--k", "2", "--branches", "sample:20", "--seed", "11"};
  json a = json::parse(call(args).out);
  json b = json::parse(call(args).out);
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 11);
}

TEST(Cli, EmitProgramRoundTrips) {
  Result r = call({"prep", "ghz", "--n", "3", "--emit-program", "--emit-target"});
  ASSERT_EQ(r.code, kExitOk);
  json j = json::parse(r.out);
  ASSERT_TRUE(j.contains("program"));
  ASSERT_TRUE(j.contains("target"));
  LaqccProgram p = program_from_json(j["program"]);
  EXPECT_EQ(to_json(p), j["program"]);
}

TEST(Cli, FlattenLadderAndGrid) {
  for (const auto& [shape, file] : {std::pair{"ladder", "ladder.json"}, std::pair{"grid", "grid.json"}}) {
    Result r = call({"flatten", shape, "--input", data(file), "--seed", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_TRUE(j["check"]["verified"].get<bool>());
    EXPECT_NEAR(j["check"]["fidelity"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(j["outputs"].size(), 3u);
  }
}

TEST(Cli, FlattenRejectsNonAdjacentGate) {
  Result r = call({"flatten", "ladder", "--input", data("bad_shape.json")});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.code, kExitCheckFailed);
}

class CliProgramFile : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = ::testing::TempDir() + "laqcc_cli_ghz.json";
    std::ofstream(path_) << to_json(ghz_protocol(3).program).dump();
  }
  void TearDown() override { std::remove(path_.c_str()); }
  std::string path_;
};

TEST_F(CliProgramFile, Defer) {
  Result r = call({"transform", "defer", "--input", path_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_LE(j["measure_layers"].get<int>(), 1);
}

TEST_F(CliProgramFile, PostselectSampledAndGiven) {
  Result a = call({"transform", "postselect", "--input", path_, "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  json ja = json::parse(a.out);
  EXPECT_GT(ja["probability"].get<double>(), 0.0);
  json transcript = json::array();
  for (const auto& e : ja["transcript"]) transcript.push_back(e["bits"]);
  Result b = call({"transform", "postselect", "--input", path_, "--transcript", transcript.dump()});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(json::parse(b.out)["program"], ja["program"]);
  EXPECT_EQ(call({"transform", "postselect", "--input", path_, "--transcript", "[\"0\", \"1\", \"0\", \"1\", \"0\"]"}).code,
            kExitUsage);
}

TEST(Cli, Numbers) {
  Result f = call({"numbers", "fac2comb", "--digits", "2,1,0", "--k", "1"});
  ASSERT_EQ(f.code, kExitOk) << f.err;
  EXPECT_EQ(json::parse(f.out)["bitstring"], "001");
  json fj = json::parse(f.out);
  std::string zeros, ones;
  for (int d : fj["zeros"]) zeros += (zeros.empty() ? "" : ",") + std::to_string(d);
  for (int d : fj["ones"]) ones += (ones.empty() ? "" : ",") + std::to_string(d);
  Result c = call({"numbers", "comb2fac", "--bits", "001", "--zeros", zeros, "--ones", ones});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(json::parse(c.out)["factoradic"], (std::vector<int>{2, 1, 0}));
  Result b = call({"numbers", "check-bijection", "--n", "5"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_TRUE(json::parse(b.out)["passed"].get<bool>());
  EXPECT_EQ(call({"numbers", "check-bijection", "--n", "12"}).code, kExitInfeasible);
  EXPECT_EQ(call({"numbers", "fac2comb", "--digits", "2,2,0", "--k", "1"}).code, kExitInfeasible);
}

}  // namespace
}  // namespace laqcc::cli
