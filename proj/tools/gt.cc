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

// gt: command-line front end.
//
// Exit codes: 0 success, 1 semantic or validation failure, 2 resource
// refusal or infeasibility, 3 parse error.

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gtcorr/acceptance.h"
#include "gtcorr/convert.h"
#include "gtcorr/equilibrium.h"
#include "gtcorr/errors.h"
#include "gtcorr/game_json.h"
#include "gtcorr/metrics.h"
#include "gtcorr/oracles.h"
#include "gtcorr/profile_json.h"
#include "gtcorr/rational.h"
#include "json.hpp"

#ifndef GTCORR_VERSION
#define GTCORR_VERSION "unknown"
#endif

namespace gtcorr {
namespace {

using ojson = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailure = 1, kRefused = 2, kParse = 3 };

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

// Everything a command read and wrote, for --report.
struct RunContext {
  std::string command;
  ojson inputs = ojson::array();
  ojson outputs = ojson::object();

  std::string Read(const std::string& path) {
    std::string text = ReadFile(path);
    inputs.push_back({{"path", path}, {"sha256", Sha256Hex(text)}});
    return text;
  }
};

ojson Num(const Rational& q) { return ToString(q); }

ojson ProfileDoc(const Game& g, const MixtureOfProducts& pi) {
  return ojson::parse(SerializeProfile(g, pi));
}

void Emit(RunContext& ctx, const std::string& key, const ojson& value) {
  std::cout << value.dump(2) << "\n";
  ctx.outputs[key] = value;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Inputs {
  std::string game;
  std::string profile;
};

int Validate(RunContext& ctx, const Inputs& in) {
  const GameTree tree = ParseGameTree(ctx.Read(in.game));
  const ValidationReport report = gtcorr::Validate(tree);
  ojson j = ojson::object();
  j["ok"] = report.ok;
  j["violations"] = ojson::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back({{"kind", std::string(ViolationKindName(v.kind))},
                               {"location", v.location},
                               {"message", v.message}});
  }
  Emit(ctx, "validation", j);
  return report.ok ? kOk : kFailure;
}

int Info(RunContext& ctx, const Inputs& in) {
  const Game g = ParseGame(ctx.Read(in.game));
  ojson j = ojson::object();
  int chance = 0;
  for (int h = 0; h < g.num_nodes(); ++h) chance += g.node(h).kind == NodeKind::kChance;
  j["nodes"] = g.num_nodes();
  j["terminals"] = g.num_terminals();
  j["chance_nodes"] = chance;
  j["players"] = ojson::array();
  for (int i = 0; i < g.num_players(); ++i) {
    ojson p = ojson::object();
    p["name"] = g.player_names()[i];
    p["infosets"] = g.num_infosets(i);
    p["sequences"] = g.num_sequences(i);
    p["pure_strategies"] = std::to_string(NumPureStrategies(g, i));
    p["recommendation_states"] = std::to_string(g.RecommendationStateCount(i));
    j["players"].push_back(std::move(p));
  }
  Emit(ctx, "info", j);
  return kOk;
}

int Outcome(RunContext& ctx, const Inputs& in) {
  const Game g = ParseGame(ctx.Read(in.game));
  const MixtureOfProducts pi = ParseProfile(g, ctx.Read(in.profile), true);
  const OutcomeDistribution d = ComputeOutcomeDistribution(g, pi);
  ojson j = ojson::object();
  for (int z = 0; z < g.num_terminals(); ++z) {
    if (d[z] != 0) j[g.terminal_id(z)] = Num(d[z]);
  }
  Emit(ctx, "outcome", j);
  return kOk;
}

struct GapFlags {
  std::string notion = "efce";
  bool oracle = false;
  unsigned long long state_cap = 0;
  unsigned long long table_cap = OracleOptions{}.table_cap;
  unsigned long long policy_cap = OracleOptions{}.policy_cap;
};

int Gap(RunContext& ctx, const Inputs& in, const GapFlags& f) {
  const Game g = ParseGame(ctx.Read(in.game));
  // Behavior profiles are read recommendation for recommendation.
  const MixtureOfProducts pi = ParseProfile(g, ctx.Read(in.profile), true);
  const GapNotion notion = ParseGapNotion(f.notion);
  GapReport report;
  if (f.oracle) {
    OracleOptions options;
    options.table_cap = f.table_cap;
    options.policy_cap = f.policy_cap;
    report = BruteForceGap(g, pi, notion, options).report;
  } else {
    report = ComputeGap(g, pi, notion, f.state_cap);
  }
  ojson j = ojson::parse(GapReportToJson(g, report));
  j["method"] = f.oracle ? "oracle" : "dp";
  Emit(ctx, "gap", j);
  return kOk;
}

int Convert(RunContext& ctx, const Inputs& in, const std::string& out_path) {
  const Game g = ParseGame(ctx.Read(in.game));
  const MixtureOfProducts pi = ParseProfile(g, ctx.Read(in.profile));
  const MixtureOfProducts converted = EfceToBce(g, pi);
  const std::string text = SerializeProfile(g, converted);
  ojson summary = ojson::object();
  summary["efce_gap_in"] = Num(ComputeGap(g, pi, GapNotion::kEfce).gap);
  summary["bce_gap_out"] = Num(ComputeGap(g, converted, GapNotion::kBce).gap);
  summary["outcome_equivalent"] = OutcomeEquivalent(g, pi, converted);
  ctx.outputs["profile"] = ojson::parse(text);
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << summary.dump(2) << "\n";
    ctx.outputs["summary"] = summary;
  } else {
    WriteText(out_path, text);
    Emit(ctx, "summary", summary);
  }
  return kOk;
}

int Decompose(RunContext& ctx, const Inputs& in) {
  const Game g = ParseGame(ctx.Read(in.game));
  const ProfileDocument doc = ParseProfileDocument(g, ctx.Read(in.profile));
  if (!doc.is_behavior) throw std::invalid_argument("decompose expects a behavior profile");
  ojson j = ojson::object();
  ojson players = ojson::array();
  for (const BehaviorComponent& c : doc.behavior) {
    for (const BehaviorStrategy& b : c.behaviors) {
      const auto terms = gtcorr::Decompose(g, SequenceForm(g, b));
      ojson p = ojson::object();
      p["player"] = g.player_names()[b.player];
      p["K"] = terms.size();
      p["sequences"] = g.num_sequences(b.player);
      players.push_back(std::move(p));
    }
  }
  j["terms"] = std::move(players);
  j["profile"] = ProfileDoc(g, MixtureFromBehaviorProducts(g, doc.behavior));
  Emit(ctx, "decomposition", j);
  return kOk;
}

int Cbr(RunContext& ctx, const Inputs& in, const std::string& player, const std::string& seq) {
  const Game g = ParseGame(ctx.Read(in.game));
  const MixtureOfProducts pi = ParseProfile(g, ctx.Read(in.profile));
  const int i = g.FindPlayer(player);
  const int s = g.ParseSequence(i, seq);
  const auto r = CounterfactualBestResponse(g, pi, i, s);
  ojson j = ojson::object();
  j["player"] = g.player_names()[i];
  j["sequence"] = g.SequenceName(i, s);
  j["strategy"] = ojson::parse(PureStrategyToJson(g, r.strategy));
  j["value"] = Num(r.value);
  j["value_decimal"] = ToDecimal(r.value);
  j["event_mass"] = Num(r.reach.event_mass);
  j["fallback"] = r.fallback;
  Emit(ctx, "cbr", j);
  return kOk;
}

struct SolveFlags {
  std::string notion = "efce";
  std::string objective;
  std::string epsilon = "0";
  std::string out;
  unsigned long long profile_cap = EquilibriumOptions{}.profile_cap;
};

int Solve(RunContext& ctx, const Inputs& in, const SolveFlags& f) {
  const Game g = ParseGame(ctx.Read(in.game));
  EquilibriumOptions options;
  options.profile_cap = f.profile_cap;
  const Rational eps = ParseRational(f.epsilon);
  std::optional<std::vector<Rational>> objective;
  if (!f.objective.empty()) objective = ParseObjective(g, ctx.Read(f.objective));
  if (objective && eps != 0) throw std::invalid_argument("--objective solves exact equilibria only");
  EquilibriumResult r;
  if (f.notion == "efce") {
    r = objective ? OptimalEfce(g, *objective, options) : ComputeEfce(g, eps, options);
  } else if (f.notion == "bce") {
    if (eps != 0) throw std::invalid_argument("--epsilon applies to --notion efce only");
    r = objective ? OptimalBce(g, *objective, options) : ComputeBce(g, options);
  } else {
    throw std::invalid_argument("--notion must be efce or bce");
  }
  ojson j = ojson::object();
  j["notion"] = f.notion;
  j["gap"] = Num(r.gap);
  j["gap_decimal"] = ToDecimal(r.gap);
  if (objective) {
    j["value"] = Num(r.objective_value);
    j["value_decimal"] = ToDecimal(r.objective_value);
  }
  j["lp"] = {{"columns", r.num_columns},
             {"trigger_rows", r.num_rows},
             {"row_epsilon", Num(r.row_epsilon)},
             {"rounds", r.rounds},
             {"pivots", r.pivots}};
  const std::string text = SerializeProfile(g, r.profile);
  if (f.out.empty()) {
    j["profile"] = ojson::parse(text);
  } else {
    WriteText(f.out, text);
    j["profile_path"] = f.out;
  }
  Emit(ctx, "solve", j);
  return kOk;
}

int PaperCheck(RunContext& ctx) {
  const auto results = RunAcceptanceSuite({}, &std::cout);
  int failed = 0;
  ojson list = ojson::array();
  for (const CriterionResult& r : results) {
    failed += !r.passed;
    list.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  ctx.outputs["criteria"] = list;
  std::cout << (failed == 0 ? "paper-check: all criteria passed"
                            : "paper-check: " + std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? kOk : kFailure;
}

int Run(int argc, char** argv) {
  CLI::App app{"Exact correlated-equilibrium tools for extensive-form games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GTCORR_VERSION);
  std::string report_path;
  app.add_option("--report", report_path, "Write a run report (inputs, hashes, outputs) as JSON");

  Inputs in;
  GapFlags gap;
  SolveFlags solve;
  std::string out_path, player, sequence;

  auto game_arg = [&](CLI::App* sub) { sub->add_option("game", in.game, "Game JSON")->required(); };
  auto profile_arg = [&](CLI::App* sub) {
    sub->add_option("profile", in.profile, "Profile JSON")->required();
  };

  std::function<int(RunContext&)> action;
  auto bind = [&](CLI::App* sub, std::function<int(RunContext&)> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a game file");
  game_arg(validate);
  bind(validate, [&](RunContext& c) { return Validate(c, in); });

  CLI::App* info = app.add_subcommand("info", "Summarize a game");
  game_arg(info);
  bind(info, [&](RunContext& c) { return Info(c, in); });

  CLI::App* outcome = app.add_subcommand("outcome", "Outcome distribution of a profile");
  game_arg(outcome);
  profile_arg(outcome);
  bind(outcome, [&](RunContext& c) { return Outcome(c, in); });

  CLI::App* gap_cmd = app.add_subcommand("gap", "Equilibrium gap of a profile");
  game_arg(gap_cmd);
  profile_arg(gap_cmd);
  gap_cmd->add_option("--notion", gap.notion, "efce, bce, full-efce or nfcce")->capture_default_str();
  gap_cmd->add_flag("--oracle", gap.oracle, "Use the brute-force definitional oracle");
  gap_cmd->add_option("--state-cap", gap.state_cap, "Recommendation-state cap (default GT_STATE_CAP or 1e6)");
  gap_cmd->add_option("--table-cap", gap.table_cap, "Oracle: raw deviation tables")->capture_default_str();
  gap_cmd->add_option("--policy-cap", gap.policy_cap, "Oracle: keyed policies")->capture_default_str();
  bind(gap_cmd, [&](RunContext& c) { return Gap(c, in, gap); });

  CLI::App* convert = app.add_subcommand("convert", "Convert an EFCE into an outcome-equivalent BCE");
  game_arg(convert);
  profile_arg(convert);
  convert->add_option("-o,--output", out_path, "Write the converted profile here");
  bind(convert, [&](RunContext& c) { return Convert(c, in, out_path); });

  CLI::App* decompose = app.add_subcommand("decompose", "Decompose behavior strategies into pure mixtures");
  game_arg(decompose);
  profile_arg(decompose);
  bind(decompose, [&](RunContext& c) { return Decompose(c, in); });

  CLI::App* cbr = app.add_subcommand("cbr", "Counterfactual best response at a sequence");
  game_arg(cbr);
  profile_arg(cbr);
  cbr->add_option("--player", player, "Player name or 1-based index")->required();
  cbr->add_option("--sequence", sequence, "\"infoset:action\", or \"∅\" for the root")->required();
  bind(cbr, [&](RunContext& c) { return Cbr(c, in, player, sequence); });

  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute an (optimal) EFCE or BCE");
  game_arg(solve_cmd);
  solve_cmd->add_option("--notion", solve.notion, "efce or bce")->capture_default_str();
  solve_cmd->add_option("--objective", solve.objective, "Objective JSON {\"c\": {terminal: value}}");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Target gap for efce, as p/q")->capture_default_str();
  solve_cmd->add_option("-o,--output", solve.out, "Write the profile here instead of inline");
  solve_cmd->add_option("--profile-cap", solve.profile_cap, "Maximum LP columns")->capture_default_str();
  bind(solve_cmd, [&](RunContext& c) { return Solve(c, in, solve); });

  CLI::App* paper = app.add_subcommand("paper-check", "Run the acceptance suite");
  bind(paper, [&](RunContext& c) { return PaperCheck(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  RunContext ctx;
  ctx.command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    code = action(ctx);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = kParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    code = kRefused;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    code = kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kFailure;
  }
  if (!report_path.empty()) {
    ojson report = ojson::object();
    report["command"] = ctx.command;
    report["arguments"] = std::vector<std::string>(argv + 1, argv + argc);
    report["inputs"] = ctx.inputs;
    report["outputs"] = ctx.outputs;
    report["exit_code"] = code;
    report["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["version"] = GTCORR_VERSION;
    WriteText(report_path, report.dump(2) + "\n");
  }
  return code;
}

}  // namespace
}  // namespace gtcorr

int main(int argc, char** argv) { return gtcorr::Run(argc, argv); }
