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

#include "gtcorr/metrics.h"

#include "gtcorr/errors.h"
#include "profile_tables.h"

namespace gtcorr {

ProfileTables BuildProfileTables(const Game& game, const MixtureOfProducts& pi) {
  const int n = game.num_players();
  ProfileTables tables;
  for (const auto& comp : pi.components) {
    tables.alpha.push_back(comp.alpha);
    std::vector<std::vector<Rational>> sf(n);
    for (int i = 0; i < n; ++i) {
      sf[i].assign(game.num_sequences(i), Rational(0));
      for (const WeightedStrategy& ws : comp.strategies[i]) {
        if (ws.beta == 0) continue;
        const std::vector<char> reached = ReachedSequences(game, ws.strategy);
        for (size_t s = 0; s < reached.size(); ++s) {
          if (reached[s]) sf[i][s] += ws.beta;
        }
      }
    }
    std::vector<std::vector<Rational>> opp(n, std::vector<Rational>(game.num_terminals()));
    for (int z = 0; z < game.num_terminals(); ++z) {
      // Prefix/suffix products avoid division by zero reach.
      std::vector<Rational> prefix(n + 1, Rational(1)), suffix(n + 1, Rational(1));
      for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * sf[i][game.TerminalSequence(z, i)];
      for (int i = n - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1] * sf[i][game.TerminalSequence(z, i)];
      }
      for (int i = 0; i < n; ++i) opp[i][z] = prefix[i] * suffix[i + 1];
    }
    tables.sf.push_back(std::move(sf));
    tables.opp.push_back(std::move(opp));
  }
  return tables;
}

std::vector<Rational> UnnormalizedReach(const Game& game, const ProfileTables& tables, int player,
                                        int sequence) {
  std::vector<Rational> reach(game.num_terminals(), Rational(0));
  for (int t = 0; t < tables.num_components(); ++t) {
    const Rational w = tables.alpha[t] * tables.sf[t][player][sequence];
    if (w == 0) continue;
    for (int z = 0; z < game.num_terminals(); ++z) reach[z] += w * tables.opp[t][player][z];
  }
  return reach;
}

OutcomeDistribution ComputeOutcomeDistribution(const Game& game, const MixtureOfProducts& pi) {
  const ProfileTables tables = BuildProfileTables(game, pi);
  OutcomeDistribution dist(game.num_terminals(), Rational(0));
  for (int t = 0; t < tables.num_components(); ++t) {
    for (int z = 0; z < game.num_terminals(); ++z) {
      dist[z] += tables.alpha[t] * game.chance_reach(z) *
                 tables.sf[t][0][game.TerminalSequence(z, 0)] * tables.opp[t][0][z];
    }
  }
  return dist;
}

Rational ExpectedUtility(const Game& game, const MixtureOfProducts& pi, int player) {
  const OutcomeDistribution dist = ComputeOutcomeDistribution(game, pi);
  Rational total = 0;
  for (int z = 0; z < game.num_terminals(); ++z) total += dist[z] * game.payoff(z, player);
  return total;
}

Rational PureUtility(const Game& game, const PureProfile& x, int player) {
  std::vector<std::vector<char>> reached;
  for (const PureStrategy& xi : x) reached.push_back(ReachedSequences(game, xi));
  Rational total = 0;
  for (int z = 0; z < game.num_terminals(); ++z) {
    bool on = true;
    for (int j = 0; j < game.num_players() && on; ++j) on = reached[j][game.TerminalSequence(z, j)];
    if (on) total += game.chance_reach(z) * game.payoff(z, player);
  }
  return total;
}

Rational CounterfactualUtility(const Game& game, const PureProfile& x, int player, int infoset) {
  std::vector<std::vector<char>> reached;
  for (const PureStrategy& xi : x) reached.push_back(ReachedSequences(game, xi));
  Rational total = 0;
  for (int z : game.TerminalsBelow(player, infoset)) {
    if (!PlaysFrom(game, x[player], infoset, z)) continue;
    bool on = true;
    for (int j = 0; j < game.num_players() && on; ++j) {
      if (j != player) on = reached[j][game.TerminalSequence(z, j)];
    }
    if (on) total += game.chance_reach(z) * game.payoff(z, player);
  }
  return total;
}

namespace {

// sum_t alpha_t (sum_k beta x_i^{(t,k)}(z|I)) opp_t(z) for z below I.
std::vector<Rational> CounterfactualReach(const Game& game, const MixtureOfProducts& pi,
                                          const ProfileTables& tables, int player, int infoset) {
  std::vector<Rational> out(game.num_terminals(), Rational(0));
  const std::vector<int>& below = game.TerminalsBelow(player, infoset);
  for (int t = 0; t < tables.num_components(); ++t) {
    if (tables.alpha[t] == 0) continue;
    for (int z : below) {
      Rational own = 0;
      for (const WeightedStrategy& ws : pi.components[t].strategies[player]) {
        if (ws.beta != 0 && PlaysFrom(game, ws.strategy, infoset, z)) own += ws.beta;
      }
      out[z] += tables.alpha[t] * own * tables.opp[t][player][z];
    }
  }
  return out;
}

Rational NodeChanceReach(const Game& game, int h) {
  Rational p = 1;
  for (int cur = h; game.node(cur).parent >= 0; cur = game.node(cur).parent) {
    const Node& parent = game.node(game.node(cur).parent);
    if (parent.kind == NodeKind::kChance) p *= parent.probs[game.node(cur).parent_action];
  }
  return p;
}

}  // namespace

Rational CounterfactualUtility(const Game& game, const MixtureOfProducts& pi, int player,
                               int infoset) {
  const ProfileTables tables = BuildProfileTables(game, pi);
  const std::vector<Rational> reach = CounterfactualReach(game, pi, tables, player, infoset);
  Rational total = 0;
  for (int z : game.TerminalsBelow(player, infoset)) {
    total += game.payoff(z, player) * game.chance_reach(z) * reach[z];
  }
  return total;
}

ConditionalReach ComputeConditionalReach(const Game& game, const MixtureOfProducts& pi,
                                         int player, int sequence) {
  const ProfileTables tables = BuildProfileTables(game, pi);
  ConditionalReach out;
  out.player = player;
  out.sequence = sequence;
  out.event_mass = 0;
  for (int t = 0; t < tables.num_components(); ++t) {
    out.event_mass += tables.alpha[t] * tables.sf[t][player][sequence];
  }
  out.reach = UnnormalizedReach(game, tables, player, sequence);
  return out;
}

Rational ConditionalSubtreeUtility(const Game& game, const MixtureOfProducts& pi, int player,
                                   int owner, int infoset) {
  const ProfileTables tables = BuildProfileTables(game, pi);
  const std::vector<Rational> reach = CounterfactualReach(game, pi, tables, owner, infoset);
  Rational value = 0;
  for (int z : game.TerminalsBelow(owner, infoset)) {
    value += game.payoff(z, player) * game.chance_reach(z) * reach[z];
  }
  // Environment reach of the infoset's nodes.
  Rational mass = 0;
  for (int h : game.infoset(owner, infoset).nodes) {
    const Rational p = NodeChanceReach(game, h);
    for (int t = 0; t < tables.num_components(); ++t) {
      Rational others = tables.alpha[t];
      for (int j = 0; j < game.num_players() && others != 0; ++j) {
        if (j != owner) others *= tables.sf[t][j][game.NodeSequence(h, j)];
      }
      mass += p * others;
    }
  }
  if (mass == 0) return 0;
  return value / mass;
}

bool OutcomeEquivalent(const Game& game, const MixtureOfProducts& a, const MixtureOfProducts& b) {
  return ComputeOutcomeDistribution(game, a) == ComputeOutcomeDistribution(game, b);
}

bool CounterfactuallyOutcomeEquivalent(const Game& game, const MixtureOfProducts& a,
                                       const MixtureOfProducts& b) {
  const ProfileTables ta = BuildProfileTables(game, a);
  const ProfileTables tb = BuildProfileTables(game, b);
  for (int i = 0; i < game.num_players(); ++i) {
    for (int I = 0; I < game.num_infosets(i); ++I) {
      if (CounterfactualReach(game, a, ta, i, I) != CounterfactualReach(game, b, tb, i, I)) {
        return false;
      }
    }
  }
  return true;
}

BestResponse ComputeBestResponse(const Game& game, int player, int infoset,
                                 const std::vector<Rational>& weights) {
  const int ni = game.num_infosets(player);
  std::vector<Rational> best(ni);
  std::vector<int> choice(ni, 0);
  auto sequence_value = [&](int s) {
    Rational v = 0;
    for (int z : game.TerminalsAt(player, s)) v += weights[z];
    for (int J : game.ChildInfosets(player, s)) v += best[J];
    return v;
  };
  // Children always carry larger infoset indices.
  for (int J = ni - 1; J >= 0; --J) {
    const Infoset& info = game.infoset(player, J);
    bool first = true;
    for (int a : info.lex_order) {
      Rational v = sequence_value(game.SequenceOf(player, J, a));
      if (first || v > best[J]) {
        best[J] = std::move(v);
        choice[J] = a;
        first = false;
      }
    }
  }
  BestResponse out{FirstPureStrategy(game, player), 0};
  for (int J = 0; J < ni; ++J) {
    if (infoset < 0 || game.InfosetPrecedes(player, infoset, J)) out.strategy.actions[J] = choice[J];
  }
  out.value = infoset < 0 ? sequence_value(0) : best[infoset];
  return out;
}

}  // namespace gtcorr
