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

#include "gtcorr/deviation.h"

#include "gtcorr/errors.h"
#include "json_util.h"

namespace gtcorr {

std::vector<int> ChainHistory(const Game& game, const PureStrategy& x, int infoset) {
  std::vector<int> hist;
  for (int K : game.InfosetChain(x.player, infoset)) hist.push_back(x.actions[K]);
  return hist;
}

namespace {

// Local action of phi(x) at J.
int DeviatedAction(const Game& game, const Deviation& phi, const PureStrategy& x,
                   const std::vector<char>& reached, int J) {
  const int p = phi.player;
  if (!phi.triggers.empty()) {
    for (const auto& [s, cont] : phi.triggers) {
      if (s == 0) return cont.actions[J];
    }
    // Top-most fired trigger on J's chain.
    for (int K : game.InfosetChain(p, J)) {
      const int s = game.SequenceOf(p, K, x.actions[K]);
      if (!reached[s]) break;
      for (const auto& [t, cont] : phi.triggers) {
        if (t == s) return cont.actions[J];
      }
    }
    return x.actions[J];
  }
  if (!phi.rules.empty()) {
    auto it = phi.rules.find({J, ChainHistory(game, x, J)});
    return it == phi.rules.end() ? x.actions[J] : it->second;
  }
  return x.actions[J];
}

}  // namespace

PureStrategy ApplyDeviation(const Game& game, const Deviation& phi, const PureStrategy& x) {
  if (x.player != phi.player) throw InternalError("deviation applied to another player");
  if (!phi.table.empty()) {
    return PureStrategyAt(game, phi.player, phi.table[PureStrategyIndex(game, x)]);
  }
  const std::vector<char> reached = ReachedSequences(game, x);
  PureStrategy y = x;
  for (int J = 0; J < game.num_infosets(x.player); ++J) {
    y.actions[J] = DeviatedAction(game, phi, x, reached, J);
  }
  return y;
}

PureStrategy ApplyDeviationFrom(const Game& game, const Deviation& phi, int infoset,
                                const PureStrategy& x) {
  const PureStrategy full = ApplyDeviation(game, phi, x);
  PureStrategy y = x;
  for (int J = 0; J < game.num_infosets(x.player); ++J) {
    if (game.InfosetPrecedes(x.player, infoset, J)) y.actions[J] = full.actions[J];
  }
  return y;
}

std::string DeviationToJson(const Game& game, const Deviation& phi) {
  using ojson = nlohmann::ordered_json;
  ojson j = ojson::object();
  const int p = phi.player;
  if (p < 0) {
    j["kind"] = "identity";
    return j.dump();
  }
  if (!phi.triggers.empty()) {
    j["kind"] = "trigger";
    j["player"] = game.player_names()[p];
    ojson list = ojson::array();
    for (const auto& [s, cont] : phi.triggers) {
      ojson e = ojson::object();
      e["sequence"] = game.SequenceName(p, s);
      // Only the part of the continuation that can matter: J and below.
      ojson acts = ojson::object();
      for (int J = 0; J < game.num_infosets(p); ++J) {
        if (s == 0 || game.InfosetPrecedes(p, game.sequence(p, s).infoset, J)) {
          acts[game.infoset(p, J).id] = game.infoset(p, J).labels[cont.actions[J]];
        }
      }
      e["continuation"] = std::move(acts);
      list.push_back(std::move(e));
    }
    j["triggers"] = std::move(list);
  } else if (!phi.rules.empty()) {
    j["kind"] = "history";
    j["player"] = game.player_names()[p];
    ojson list = ojson::array();
    for (const auto& [key, action] : phi.rules) {
      const auto& [J, hist] = key;
      ojson e = ojson::object();
      e["infoset"] = game.infoset(p, J).id;
      ojson h = ojson::object();
      const std::vector<int>& chain = game.InfosetChain(p, J);
      for (size_t k = 0; k < chain.size(); ++k) {
        h[game.infoset(p, chain[k]).id] = game.infoset(p, chain[k]).labels[hist[k]];
      }
      e["recommended"] = std::move(h);
      e["play"] = game.infoset(p, J).labels[action];
      list.push_back(std::move(e));
    }
    j["rules"] = std::move(list);
  } else if (!phi.table.empty()) {
    j["kind"] = "table";
    j["player"] = game.player_names()[p];
    const std::vector<PureStrategy> all = AllPureStrategies(game, p);
    ojson list = ojson::array();
    for (size_t x = 0; x < phi.table.size(); ++x) {
      if (phi.table[x] == static_cast<int>(x)) continue;
      ojson e = ojson::object();
      e["from"] = PureStrategyJson(game, all[x]);
      e["to"] = PureStrategyJson(game, all[phi.table[x]]);
      list.push_back(std::move(e));
    }
    j["map"] = std::move(list);
  } else {
    j["kind"] = "identity";
    j["player"] = game.player_names()[p];
  }
  return j.dump();
}

}  // namespace gtcorr
