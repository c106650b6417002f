// Copyright 2026 The gtcorr Authors.
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string Fixture(const std::string& name) { return std::string(GTCORR_FIXTURE_DIR) + "/" + name; }

std::string Quote(const std::string& s) { return "'" + s + "'"; }

RunResult Gt(const std::string& args) {
  const std::string cmd = Quote(GT_BINARY) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json GtJson(const std::string& args, int expected_exit = 0) {
  const RunResult r = Gt(args);
  EXPECT_EQ(r.exit_code, expected_exit) << args;
  return json::parse(r.out);
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gtcorr_cli_" + name)).string();
}

TEST(CliTest, ValidateExitCodes) {
  const json ok = GtJson("validate " + Quote(Fixture("ebos.game.json")));
  EXPECT_TRUE(ok["ok"].get<bool>());
  EXPECT_TRUE(ok["violations"].empty());

  const json bad = GtJson("validate " + Quote(Fixture("invalid/perfect_recall.game.json")), 1);
  EXPECT_FALSE(bad["ok"].get<bool>());
  ASSERT_FALSE(bad["violations"].empty());
  EXPECT_EQ(bad["violations"][0]["kind"], "perfect-recall");

  EXPECT_EQ(Gt("validate " + Quote(Fixture("invalid/truncated.game.json"))).exit_code, 3);
  EXPECT_EQ(Gt("validate " + Quote(Fixture("no_such_file.json"))).exit_code, 3);
}

TEST(CliTest, GapOnLrr) {
  const std::string args =
      Quote(Fixture("lrr.game.json")) + " " + Quote(Fixture("lrr.pi.behavior.json"));
  const json efce = GtJson("gap " + args + " --notion efce");
  EXPECT_EQ(efce["gap"], "1/5");
  EXPECT_EQ(efce["gap_decimal"], "0.2");
  EXPECT_EQ(GtJson("gap " + args + " --notion bce")["gap"], "1");
  const json oracle = GtJson("gap " + args + " --notion bce --oracle");
  EXPECT_EQ(oracle["gap"], "1");
  EXPECT_EQ(oracle["method"], "oracle");
}

TEST(CliTest, GapRejectsForeignProfile) {
  const RunResult r =
      Gt("gap " + Quote(Fixture("lrr.game.json")) + " " + Quote(Fixture("surj.bce.json")));
  EXPECT_NE(r.exit_code, 0);
  EXPECT_EQ(Gt("gap " + Quote(Fixture("lrr.game.json")) + " " +
               Quote(Fixture("lrr.pi.behavior.json")) + " --notion nope")
                .exit_code,
            1);
}

TEST(CliTest, ConvertThenGap) {
  const std::string out = TempPath("ebos_bce.json");
  const json summary = GtJson("convert " + Quote(Fixture("ebos.game.json")) + " " +
                              Quote(Fixture("ebos.pi.json")) + " -o " + Quote(out));
  EXPECT_EQ(summary["efce_gap_in"], "0");
  EXPECT_EQ(summary["bce_gap_out"], "0");
  EXPECT_TRUE(summary["outcome_equivalent"].get<bool>());
  EXPECT_EQ(GtJson("gap " + Quote(Fixture("ebos.game.json")) + " " + Quote(out) +
                   " --notion bce")["gap"],
            "0");
  EXPECT_EQ(GtJson("gap " + Quote(Fixture("ebos.game.json")) + " " + Quote(out) +
                   " --notion bce --oracle")["gap"],
            "0");
  std::filesystem::remove(out);
}

TEST(CliTest, ConvertLrrBehavior) {
  const std::string out = TempPath("lrr_bce.json");
  GtJson("convert " + Quote(Fixture("lrr.game.json")) + " " +
         Quote(Fixture("lrr.pi.behavior.json")) + " -o " + Quote(out));
  const json outcome = GtJson("outcome " + Quote(Fixture("lrr.game.json")) + " " + Quote(out));
  EXPECT_EQ(outcome, json::parse(R"js({"(L)": "9/10", "(R,R′)": "1/10"})js"));
  std::filesystem::remove(out);
}

TEST(CliTest, OutcomeOnEbos) {
  const json j = GtJson("outcome " + Quote(Fixture("ebos.game.json")) + " " +
                        Quote(Fixture("ebos.pi.json")));
  EXPECT_EQ(j, json::parse(R"js({"(¬U,X1,X2)": "1/2", "(¬U,Y1,Y2)": "1/2"})js"));
}

TEST(CliTest, DecomposeLrr) {
  const json j = GtJson("decompose " + Quote(Fixture("lrr.game.json")) + " " +
                        Quote(Fixture("lrr.pi.behavior.json")));
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["K"], 2);
}

TEST(CliTest, CbrOnEbos) {
  const json j = GtJson("cbr " + Quote(Fixture("ebos.game.json")) + " " +
                        Quote(Fixture("ebos.pi.json")) + " --player 1 --sequence 'root:¬U'");
  EXPECT_EQ(j["strategy"], json::parse(R"js({"root": "U", "¬U": "X1", "U": "X1"})js"));
  EXPECT_EQ(j["value"], "3/2");
}

TEST(CliTest, SolveSurjBce) {
  const json j = GtJson("solve " + Quote(Fixture("surj.game.json")) + " --notion bce");
  EXPECT_EQ(j["gap"], "0");
  const std::string out = TempPath("surj_bce.json");
  GtJson("solve " + Quote(Fixture("surj.game.json")) + " --notion bce -o " + Quote(out));
  EXPECT_EQ(GtJson("gap " + Quote(Fixture("surj.game.json")) + " " + Quote(out) +
                   " --notion bce")["gap"],
            "0");
  std::filesystem::remove(out);
}

TEST(CliTest, SolveLrrObjective) {
  const json j = GtJson("solve " + Quote(Fixture("lrr.game.json")) + " --objective " +
                        Quote(Fixture("lrr.u1.json")));
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["gap"], "0");
}

TEST(CliTest, SolveEbosBce) {
  EXPECT_EQ(GtJson("solve " + Quote(Fixture("ebos.game.json")) + " --notion bce")["gap"], "0");
}

TEST(CliTest, ResourceRefusalExitsTwo) {
  EXPECT_EQ(Gt("solve " + Quote(Fixture("ebos.game.json")) + " --profile-cap 2").exit_code, 2);
  EXPECT_EQ(Gt("gap " + Quote(Fixture("lrr.game.json")) + " " +
               Quote(Fixture("lrr.pi.behavior.json")) + " --notion bce --state-cap 1")
                .exit_code,
            2);
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(Gt("").exit_code, 1);
  EXPECT_EQ(Gt("frobnicate").exit_code, 1);
  EXPECT_EQ(Gt("gap " + Quote(Fixture("lrr.game.json"))).exit_code, 1);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::string args = "solve " + Quote(Fixture("ebos.game.json")) + " --notion bce";
  EXPECT_EQ(Gt(args).out, Gt(args).out);
}

TEST(CliTest, RunReportRecordsInputsAndOutputs) {
  const std::string report = TempPath("report.json");
  const RunResult r = Gt("--report " + Quote(report) + " gap " + Quote(Fixture("lrr.game.json")) +
                         " " + Quote(Fixture("lrr.pi.behavior.json")));
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream in(report);
  const json j = json::parse(in);
  EXPECT_EQ(j["command"], "gap");
  ASSERT_EQ(j["inputs"].size(), 2u);
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(j["outputs"]["gap"], json::parse(r.out));
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_FALSE(j["version"].get<std::string>().empty());
  std::filesystem::remove(report);
}

}  // namespace
