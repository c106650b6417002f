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

#include "gtcorr/profile_json.h"

#include "gtcorr/errors.h"
#include "json_util.h"

namespace gtcorr {
namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

PureStrategy ReadPure(const Game& game, int player, const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "actions must be an object");
  PureStrategy x{player, std::vector<int>(game.num_infosets(player), -1)};
  for (const auto& [id, label] : j.items()) {
    const int I = game.FindInfoset(player, id);
    if (I < 0) {
      throw InvalidProfileError(where + ": " + game.player_names()[player] +
                                " has no infoset \"" + id + "\"");
    }
    if (!label.is_string()) throw ParseError(where + "/" + id, "action label must be a string");
    const int a = game.FindAction(player, I, label.get<std::string>());
    if (a < 0) {
      throw InvalidProfileError(where + ": infoset \"" + id + "\" has no action \"" +
                                label.get<std::string>() + "\"");
    }
    x.actions[I] = a;
  }
  for (int I = 0; I < game.num_infosets(player); ++I) {
    if (x.actions[I] < 0) {
      throw InvalidProfileError(where + ": no action for infoset \"" +
                                game.infoset(player, I).id + "\"");
    }
  }
  return x;
}

BehaviorStrategy ReadBehavior(const Game& game, int player, const json& j,
                              const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "behavior must be an object");
  BehaviorStrategy b{player, {}};
  std::vector<char> seen(game.num_infosets(player), 0);
  for (int I = 0; I < game.num_infosets(player); ++I) {
    b.locals.emplace_back(game.num_actions(player, I), Rational(0));
  }
  for (const auto& [id, local] : j.items()) {
    const int I = game.FindInfoset(player, id);
    if (I < 0) {
      throw InvalidProfileError(where + ": " + game.player_names()[player] +
                                " has no infoset \"" + id + "\"");
    }
    if (!local.is_object()) throw ParseError(where + "/" + id, "local must be an object");
    seen[I] = 1;
    for (const auto& [label, prob] : local.items()) {
      const int a = game.FindAction(player, I, label);
      if (a < 0) {
        throw InvalidProfileError(where + ": infoset \"" + id + "\" has no action \"" + label +
                                  "\"");
      }
      b.locals[I][a] = ReadRational(prob, where + "/" + id + "/" + label);
    }
  }
  for (int I = 0; I < game.num_infosets(player); ++I) {
    if (!seen[I]) {
      throw InvalidProfileError(where + ": no distribution for infoset \"" +
                                game.infoset(player, I).id + "\"");
    }
  }
  CheckBehaviorStrategy(game, b);
  return b;
}

}  // namespace

ProfileDocument ParseProfileDocument(const Game& game, std::string_view text) {
  const json doc = ParseJsonDocument(text);
  if (!doc.is_object()) throw ParseError("/", "profile document must be a JSON object");
  const json& comps = RequireField(doc, "components", "");
  if (!comps.is_array()) throw ParseError("/components", "must be an array");
  ProfileDocument out;
  const int n = game.num_players();
  for (size_t t = 0; t < comps.size(); ++t) {
    const std::string where = "/components/" + std::to_string(t);
    const json& c = comps[t];
    if (!c.is_object()) throw ParseError(where, "component must be an object");
    const Rational alpha = ReadRational(RequireField(c, "alpha", where), where + "/alpha");
    const bool behavior = c.contains("behaviors");
    if (t == 0) {
      out.is_behavior = behavior;
    } else if (behavior != out.is_behavior) {
      throw ParseError(where, "cannot mix behavior and mixture components");
    }
    const char* key = behavior ? "behaviors" : "strategies";
    const json& per_player = RequireField(c, key, where);
    if (!per_player.is_array() || static_cast<int>(per_player.size()) != n) {
      throw ParseError(where + "/" + key,
                       "expected an array with one entry per player (" + std::to_string(n) + ")");
    }
    if (behavior) {
      BehaviorComponent bc{alpha, {}};
      for (int i = 0; i < n; ++i) {
        bc.behaviors.push_back(
            ReadBehavior(game, i, per_player[i], where + "/behaviors/" + std::to_string(i)));
      }
      out.behavior.push_back(std::move(bc));
      continue;
    }
    MixtureOfProducts::Component comp{alpha, {}};
    for (int i = 0; i < n; ++i) {
      const std::string pw = where + "/strategies/" + std::to_string(i);
      if (!per_player[i].is_array()) throw ParseError(pw, "must be an array");
      std::vector<WeightedStrategy> list;
      for (size_t k = 0; k < per_player[i].size(); ++k) {
        const std::string kw = pw + "/" + std::to_string(k);
        const json& entry = per_player[i][k];
        if (!entry.is_object()) throw ParseError(kw, "entry must be an object");
        Rational beta = ReadRational(RequireField(entry, "beta", kw), kw + "/beta");
        list.push_back({std::move(beta), ReadPure(game, i, RequireField(entry, "actions", kw),
                                                  kw + "/actions")});
      }
      comp.strategies.push_back(std::move(list));
    }
    out.mixture.components.push_back(std::move(comp));
  }
  if (!out.is_behavior) CheckMixture(game, out.mixture);
  return out;
}

MixtureOfProducts ParseProfile(const Game& game, std::string_view text, bool expand_behavior) {
  ProfileDocument doc = ParseProfileDocument(game, text);
  if (!doc.is_behavior) return std::move(doc.mixture);
  return expand_behavior ? ExpandBehaviorProducts(game, doc.behavior)
                         : MixtureFromBehaviorProducts(game, doc.behavior);
}

ojson PureStrategyJson(const Game& game, const PureStrategy& x) {
  ojson actions = ojson::object();
  for (int I = 0; I < game.num_infosets(x.player); ++I) {
    const Infoset& info = game.infoset(x.player, I);
    actions[info.id] = info.labels[x.actions[I]];
  }
  return actions;
}

ojson ProfileJson(const Game& game, const MixtureOfProducts& pi) {
  ojson comps = ojson::array();
  for (const auto& comp : pi.components) {
    ojson c = ojson::object();
    c["alpha"] = ToString(comp.alpha);
    ojson strategies = ojson::array();
    for (const auto& list : comp.strategies) {
      ojson entries = ojson::array();
      for (const WeightedStrategy& ws : list) {
        ojson e = ojson::object();
        e["beta"] = ToString(ws.beta);
        e["actions"] = PureStrategyJson(game, ws.strategy);
        entries.push_back(std::move(e));
      }
      strategies.push_back(std::move(entries));
    }
    c["strategies"] = std::move(strategies);
    comps.push_back(std::move(c));
  }
  ojson doc = ojson::object();
  doc["components"] = std::move(comps);
  return doc;
}

std::string SerializeProfile(const Game& game, const MixtureOfProducts& pi) {
  return ProfileJson(game, pi).dump(2) + "\n";
}

std::string PureStrategyToJson(const Game& game, const PureStrategy& x) {
  return PureStrategyJson(game, x).dump();
}

std::string PureStrategyName(const Game& game, const PureStrategy& x) {
  std::string out;
  for (int I = 0; I < game.num_infosets(x.player); ++I) {
    if (!out.empty()) out += ",";
    out += game.infoset(x.player, I).id + ":" + game.infoset(x.player, I).labels[x.actions[I]];
  }
  return "(" + out + ")";
}

std::vector<Rational> ParseObjective(const Game& game, std::string_view text) {
  const json doc = ParseJsonDocument(text);
  if (!doc.is_object()) throw ParseError("/", "objective document must be a JSON object");
  const json& c = RequireField(doc, "c", "");
  if (!c.is_object()) throw ParseError("/c", "must be an object");
  std::vector<Rational> out(game.num_terminals(), Rational(0));
  for (const auto& [id, value] : c.items()) {
    const int z = game.FindTerminal(id);
    if (z < 0) throw InvalidProfileError("objective names unknown terminal \"" + id + "\"");
    out[z] = ReadRational(value, "/c/" + id);
  }
  return out;
}

}  // namespace gtcorr
