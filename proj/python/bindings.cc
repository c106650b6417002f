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

// Python bindings. Rich values cross the boundary as JSON text; the gtcorr
// package turns them into dicts and Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "gtcorr/acceptance.h"
#include "gtcorr/convert.h"
#include "gtcorr/equilibrium.h"
#include "gtcorr/errors.h"
#include "gtcorr/fixtures.h"
#include "gtcorr/game_json.h"
#include "gtcorr/metrics.h"
#include "gtcorr/oracles.h"
#include "gtcorr/profile_json.h"
#include "gtcorr/rational.h"
#include "json.hpp"

namespace py = pybind11;

namespace gtcorr {
namespace {

using ojson = nlohmann::ordered_json;

std::string ValidateJson(std::string_view text) {
  const ValidationReport report = Validate(ParseGameTree(text));
  ojson j = ojson::object();
  j["ok"] = report.ok;
  j["violations"] = ojson::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back({{"kind", std::string(ViolationKindName(v.kind))},
                               {"location", v.location},
                               {"message", v.message}});
  }
  return j.dump();
}

std::string OutcomeJson(const Game& g, std::string_view profile) {
  const OutcomeDistribution d = ComputeOutcomeDistribution(g, ParseProfile(g, profile, true));
  ojson j = ojson::object();
  for (int z = 0; z < g.num_terminals(); ++z) {
    if (d[z] != 0) j[g.terminal_id(z)] = ToString(d[z]);
  }
  return j.dump();
}

std::string GapJson(const Game& g, std::string_view profile, const std::string& notion,
                    bool oracle, unsigned long long state_cap, unsigned long long table_cap,
                    unsigned long long policy_cap) {
  const MixtureOfProducts pi = ParseProfile(g, profile, true);
  const GapNotion n = ParseGapNotion(notion);
  if (!oracle) return GapReportToJson(g, ComputeGap(g, pi, n, state_cap));
  OracleOptions options;
  options.table_cap = table_cap;
  options.policy_cap = policy_cap;
  return GapReportToJson(g, BruteForceGap(g, pi, n, options).report);
}

std::string ConvertJson(const Game& g, std::string_view profile) {
  return SerializeProfile(g, EfceToBce(g, ParseProfile(g, profile)));
}

std::string DecomposeJson(const Game& g, std::string_view profile) {
  return SerializeProfile(g, ParseProfile(g, profile));
}

std::string CbrJson(const Game& g, std::string_view profile, const std::string& player,
                    const std::string& sequence) {
  const int i = g.FindPlayer(player);
  const int s = g.ParseSequence(i, sequence);
  const auto r = CounterfactualBestResponse(g, ParseProfile(g, profile), i, s);
  ojson j = ojson::object();
  j["player"] = g.player_names()[i];
  j["sequence"] = g.SequenceName(i, s);
  j["strategy"] = ojson::parse(PureStrategyToJson(g, r.strategy));
  j["value"] = ToString(r.value);
  j["event_mass"] = ToString(r.reach.event_mass);
  j["fallback"] = r.fallback;
  return j.dump();
}

std::string SolveJson(const Game& g, const std::string& notion,
                      const std::optional<std::string>& objective, const std::string& epsilon,
                      unsigned long long profile_cap) {
  EquilibriumOptions options;
  options.profile_cap = profile_cap;
  const Rational eps = ParseRational(epsilon);
  std::optional<std::vector<Rational>> c;
  if (objective) c = ParseObjective(g, *objective);
  if (c && eps != 0) throw std::invalid_argument("objective solves exact equilibria only");
  EquilibriumResult r;
  if (notion == "efce") {
    r = c ? OptimalEfce(g, *c, options) : ComputeEfce(g, eps, options);
  } else if (notion == "bce") {
    if (eps != 0) throw std::invalid_argument("epsilon applies to efce only");
    r = c ? OptimalBce(g, *c, options) : ComputeBce(g, options);
  } else {
    throw std::invalid_argument("notion must be efce or bce");
  }
  ojson j = ojson::object();
  j["notion"] = notion;
  j["gap"] = ToString(r.gap);
  if (c) j["value"] = ToString(r.objective_value);
  j["lp"] = {{"columns", r.num_columns},
             {"trigger_rows", r.num_rows},
             {"row_epsilon", ToString(r.row_epsilon)},
             {"rounds", r.rounds},
             {"pivots", r.pivots}};
  j["profile"] = ojson::parse(SerializeProfile(g, r.profile));
  return j.dump();
}

std::string PaperCheckJson() {
  ojson list = ojson::array();
  for (const CriterionResult& r : RunAcceptanceSuite({}, nullptr)) {
    list.push_back({{"criterion", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
  }
  return list.dump();
}

}  // namespace
}  // namespace gtcorr

PYBIND11_MODULE(_gtcorr, m) {
  using namespace gtcorr;
  m.doc() = "Exact correlated equilibria of extensive-form games";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GameError>(m, "GameError", PyExc_ValueError);
  py::register_exception<InvalidProfileError>(m, "InvalidProfileError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<Game>(m, "Game")
      .def(py::init([](const std::string& text) { return ParseGame(text); }), py::arg("text"))
      .def_property_readonly("players", &Game::player_names)
      .def_property_readonly("terminal_ids",
                             [](const Game& g) {
                               std::vector<std::string> ids;
                               for (int z = 0; z < g.num_terminals(); ++z) {
                                 ids.push_back(g.terminal_id(z));
                               }
                               return ids;
                             })
      .def("num_infosets", &Game::num_infosets, py::arg("player"))
      .def("num_sequences", &Game::num_sequences, py::arg("player"))
      .def("to_json", [](const Game& g) { return SerializeGame(g.tree()); });

  m.def("validate", &ValidateJson, py::arg("text"));
  m.def("outcome", &OutcomeJson, py::arg("game"), py::arg("profile"));
  m.def("gap", &GapJson, py::arg("game"), py::arg("profile"), py::arg("notion") = "efce",
        py::arg("oracle") = false, py::arg("state_cap") = 0,
        py::arg("table_cap") = OracleOptions{}.table_cap,
        py::arg("policy_cap") = OracleOptions{}.policy_cap);
  m.def("convert", &ConvertJson, py::arg("game"), py::arg("profile"));
  m.def("decompose", &DecomposeJson, py::arg("game"), py::arg("profile"));
  m.def("cbr", &CbrJson, py::arg("game"), py::arg("profile"), py::arg("player"),
        py::arg("sequence"));
  m.def("solve", &SolveJson, py::arg("game"), py::arg("notion") = "efce",
        py::arg("objective") = std::nullopt, py::arg("epsilon") = "0",
        py::arg("profile_cap") = EquilibriumOptions{}.profile_cap,
        py::call_guard<py::gil_scoped_release>());
  m.def("paper_check", &PaperCheckJson, py::call_guard<py::gil_scoped_release>());
  m.def("fixture_names", &FixtureNames);
  m.def("fixture", [](const std::string& name) { return std::string(FixtureText(name)); },
        py::arg("name"));
  m.attr("__version__") = GTCORR_VERSION;
}
