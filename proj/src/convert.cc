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

#include "gtcorr/convert.h"

#include <optional>
#include <stdexcept>

#include "gtcorr/errors.h"
#include "profile_tables.h"

namespace gtcorr {
namespace {

CounterfactualBestResponseResult Cbr(const Game& game, const ProfileTables& tables, int player,
                                     int sequence) {
  CounterfactualBestResponseResult out;
  out.reach.player = player;
  out.reach.sequence = sequence;
  out.reach.event_mass = 0;
  for (int t = 0; t < tables.num_components(); ++t) {
    out.reach.event_mass += tables.alpha[t] * tables.sf[t][player][sequence];
  }
  // A zero-mass event is never a deviation point of a support strategy, so
  // any total answer will do; use the unconditional law.
  const int conditioned = out.reach.event_mass == 0 ? 0 : sequence;
  out.fallback = conditioned != sequence;
  if (out.fallback) out.reach.event_mass = 1;
  out.reach.reach = UnnormalizedReach(game, tables, player, conditioned);
  std::vector<Rational> w(game.num_terminals());
  for (int z = 0; z < game.num_terminals(); ++z) {
    w[z] = game.payoff(z, player) * game.chance_reach(z) * out.reach.reach[z];
  }
  const int infoset = sequence == 0 ? -1 : game.sequence(player, sequence).infoset;
  BestResponse br = ComputeBestResponse(game, player, infoset, w);
  out.strategy = std::move(br.strategy);
  out.value = br.value / out.reach.event_mass;
  return out;
}

}  // namespace

CounterfactualBestResponseResult CounterfactualBestResponse(const Game& game,
                                                            const MixtureOfProducts& pi,
                                                            int player, int sequence) {
  CheckMixture(game, pi);
  if (player < 0 || player >= game.num_players() || sequence < 0 ||
      sequence >= game.num_sequences(player)) {
    throw std::out_of_range("no such player or sequence");
  }
  return Cbr(game, BuildProfileTables(game, pi), player, sequence);
}

CbrTable ComputeCbrTable(const Game& game, const MixtureOfProducts& pi, int player) {
  CheckMixture(game, pi);
  const ProfileTables tables = BuildProfileTables(game, pi);
  CbrTable table;
  table.player = player;
  for (int s = 0; s < game.num_sequences(player); ++s) {
    table.entries.push_back(Cbr(game, tables, player, s));
  }
  return table;
}

int DeviationPoint(const Game& game, const PureStrategy& x, int infoset) {
  const int player = x.player;
  const std::vector<int>& chain = game.InfosetChain(player, infoset);
  for (size_t k = 0; k + 1 < chain.size(); ++k) {
    // The path to I leaves chain[k] through action b.
    const int b = game.sequence(player, game.infoset(player, chain[k + 1]).parent_sequence).action;
    if (x.actions[chain[k]] != b) return game.SequenceOf(player, chain[k], x.actions[chain[k]]);
  }
  return -1;
}

MixtureOfProducts EfceToBce(const Game& game, const MixtureOfProducts& pi) {
  CheckMixture(game, pi);
  const ProfileTables tables = BuildProfileTables(game, pi);
  MixtureOfProducts out = pi;
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<std::optional<CounterfactualBestResponseResult>> cbr(game.num_sequences(i));
    for (size_t t = 0; t < pi.components.size(); ++t) {
      for (WeightedStrategy& ws : out.components[t].strategies[i]) {
        const PureStrategy x = ws.strategy;  // deviation points refer to the original
        const std::vector<char> reached = ReachedSequences(game, x);
        for (int I = 0; I < game.num_infosets(i); ++I) {
          if (reached[game.infoset(i, I).parent_sequence]) continue;
          const int s = DeviationPoint(game, x, I);
          if (s < 0) throw InternalError("unreached infoset without a deviation point");
          if (!cbr[s]) cbr[s] = Cbr(game, tables, i, s);
          if (cbr[s]->fallback && pi.components[t].alpha != 0 && ws.beta != 0) {
            throw InternalError("deviation point of a support strategy has zero mass");
          }
          ws.strategy.actions[I] = cbr[s]->strategy.actions[I];
        }
      }
    }
  }
  return out;
}

Rational RestrictedDeviationValue(const Game& game, const MixtureOfProducts& pi, int player,
                                  const Deviation& phi, int infoset) {
  CheckMixture(game, pi);
  Rational total = 0;
  ForEachSupportProfile(pi, [&](const Rational& w, const PureProfile& x) {
    PureProfile y = x;
    y[player] = ApplyDeviationFrom(game, phi, infoset, x[player]);
    total += w * (PureUtility(game, y, player) - PureUtility(game, x, player));
  });
  return total;
}

}  // namespace gtcorr
