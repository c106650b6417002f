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

#include "gtcorr/strategy.h"

#include <algorithm>
#include <string>

#include "gtcorr/errors.h"

namespace gtcorr {
namespace {

std::string PlayerName(const Game& game, int player) {
  return game.player_names()[player];
}

void CheckPlayer(const Game& game, int player) {
  if (player < 0 || player >= game.num_players()) {
    throw InvalidProfileError("strategy names player " + std::to_string(player) +
                              ", which does not exist");
  }
}

// Odometer over per-infoset choice lists, infoset 0 most significant.
template <typename Fn>
void ForEachAssignment(const std::vector<std::vector<int>>& choices, Fn&& fn) {
  const size_t m = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<size_t> pos(m, 0);
  std::vector<int> actions(m);
  while (true) {
    for (size_t I = 0; I < m; ++I) actions[I] = choices[I][pos[I]];
    fn(actions);
    size_t k = m;
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (m == 0) return;
  }
}

}  // namespace

void CheckPureStrategy(const Game& game, const PureStrategy& x) {
  CheckPlayer(game, x.player);
  if (static_cast<int>(x.actions.size()) != game.num_infosets(x.player)) {
    throw InvalidProfileError("pure strategy of " + PlayerName(game, x.player) + " assigns " +
                              std::to_string(x.actions.size()) + " infosets, expected " +
                              std::to_string(game.num_infosets(x.player)));
  }
  for (int I = 0; I < game.num_infosets(x.player); ++I) {
    if (x.actions[I] < 0 || x.actions[I] >= game.num_actions(x.player, I)) {
      throw InvalidProfileError("illegal action at infoset " + game.infoset(x.player, I).id);
    }
  }
}

void CheckBehaviorStrategy(const Game& game, const BehaviorStrategy& b) {
  CheckPlayer(game, b.player);
  if (static_cast<int>(b.locals.size()) != game.num_infosets(b.player)) {
    throw InvalidProfileError("behavior strategy of " + PlayerName(game, b.player) +
                              " covers the wrong number of infosets");
  }
  for (int I = 0; I < game.num_infosets(b.player); ++I) {
    const std::string& id = game.infoset(b.player, I).id;
    if (static_cast<int>(b.locals[I].size()) != game.num_actions(b.player, I)) {
      throw InvalidProfileError("local distribution at " + id + " has the wrong length");
    }
    Rational sum = 0;
    for (const Rational& q : b.locals[I]) {
      if (q < 0) throw InvalidProfileError("negative probability at " + id);
      sum += q;
    }
    if (sum != 1) {
      throw InvalidProfileError("local distribution at " + id + " sums to " + ToString(sum));
    }
  }
}

void CheckMixture(const Game& game, const MixtureOfProducts& pi) {
  if (pi.components.empty()) throw InvalidProfileError("profile has no components");
  Rational alpha_sum = 0;
  for (size_t t = 0; t < pi.components.size(); ++t) {
    const auto& comp = pi.components[t];
    const std::string where = "component " + std::to_string(t);
    if (comp.alpha < 0) throw InvalidProfileError(where + ": negative alpha");
    alpha_sum += comp.alpha;
    if (static_cast<int>(comp.strategies.size()) != game.num_players()) {
      throw InvalidProfileError(where + ": expected one strategy list per player");
    }
    for (int i = 0; i < game.num_players(); ++i) {
      const auto& list = comp.strategies[i];
      if (list.empty()) throw InvalidProfileError(where + ": empty list for " + PlayerName(game, i));
      Rational beta_sum = 0;
      for (const WeightedStrategy& ws : list) {
        if (ws.beta < 0) throw InvalidProfileError(where + ": negative beta");
        if (ws.strategy.player != i) {
          throw InvalidProfileError(where + ": strategy listed under the wrong player");
        }
        CheckPureStrategy(game, ws.strategy);
        beta_sum += ws.beta;
      }
      if (beta_sum != 1) {
        throw InvalidProfileError(where + ": weights of " + PlayerName(game, i) + " sum to " +
                                  ToString(beta_sum));
      }
    }
  }
  if (alpha_sum != 1) throw InvalidProfileError("alphas sum to " + ToString(alpha_sum));
}

PureStrategy FirstPureStrategy(const Game& game, int player) {
  PureStrategy x{player, std::vector<int>(game.num_infosets(player))};
  for (int I = 0; I < game.num_infosets(player); ++I) {
    x.actions[I] = game.infoset(player, I).lex_order[0];
  }
  return x;
}

std::vector<char> ReachedSequences(const Game& game, const PureStrategy& x) {
  const int p = x.player;
  std::vector<char> reached(game.num_sequences(p), 0);
  reached[0] = 1;
  // Parent sequences always have smaller indices.
  for (int s = 1; s < game.num_sequences(p); ++s) {
    const Sequence& seq = game.sequence(p, s);
    reached[s] = reached[game.ParentSequence(p, s)] && x.actions[seq.infoset] == seq.action;
  }
  return reached;
}

bool PlaysFrom(const Game& game, const PureStrategy& x, int infoset, int z) {
  const int p = x.player;
  for (int s = game.TerminalSequence(z, p); s > 0; s = game.ParentSequence(p, s)) {
    const Sequence& seq = game.sequence(p, s);
    if (x.actions[seq.infoset] != seq.action) return false;
    if (seq.infoset == infoset) return true;
  }
  return false;
}

SequenceFormVector SequenceForm(const Game& game, const PureStrategy& x) {
  const std::vector<char> reached = ReachedSequences(game, x);
  SequenceFormVector v{x.player, std::vector<Rational>(reached.size())};
  for (size_t s = 0; s < reached.size(); ++s) v.reach[s] = reached[s] ? 1 : 0;
  return v;
}

SequenceFormVector SequenceForm(const Game& game, const BehaviorStrategy& b) {
  const int p = b.player;
  SequenceFormVector v{p, std::vector<Rational>(game.num_sequences(p))};
  v.reach[0] = 1;
  for (int s = 1; s < game.num_sequences(p); ++s) {
    const Sequence& seq = game.sequence(p, s);
    v.reach[s] = v.reach[game.ParentSequence(p, s)] * b.locals[seq.infoset][seq.action];
  }
  return v;
}

void CheckSequenceForm(const Game& game, const SequenceFormVector& v) {
  CheckPlayer(game, v.player);
  const int p = v.player;
  if (static_cast<int>(v.reach.size()) != game.num_sequences(p)) {
    throw InvalidProfileError("sequence-form vector has the wrong length");
  }
  if (v.reach[0] != 1) throw InvalidProfileError("reach of the empty sequence is not 1");
  for (int s = 0; s < game.num_sequences(p); ++s) {
    if (v.reach[s] < 0) {
      throw InvalidProfileError("negative reach at " + game.SequenceName(p, s));
    }
  }
  for (int I = 0; I < game.num_infosets(p); ++I) {
    Rational flow = 0;
    for (int a = 0; a < game.num_actions(p, I); ++a) flow += v.reach[game.SequenceOf(p, I, a)];
    if (flow != v.reach[game.infoset(p, I).parent_sequence]) {
      throw InvalidProfileError("flow is not conserved at infoset " + game.infoset(p, I).id);
    }
  }
}

std::vector<WeightedStrategy> Decompose(const Game& game, const SequenceFormVector& v) {
  CheckSequenceForm(game, v);
  const int p = v.player;
  const int ni = game.num_infosets(p);
  std::vector<Rational> residual = v.reach;
  std::vector<WeightedStrategy> out;
  while (residual[0] > 0) {
    PureStrategy x{p, std::vector<int>(ni)};
    std::vector<char> on_trace(residual.size(), 0);
    on_trace[0] = 1;
    for (int I = 0; I < ni; ++I) {
      const Infoset& info = game.infoset(p, I);
      x.actions[I] = info.lex_order[0];
      if (!on_trace[info.parent_sequence]) continue;
      // Flow conservation of the residual guarantees a positive action here.
      bool found = false;
      for (int a : info.lex_order) {
        if (residual[game.SequenceOf(p, I, a)] > 0) {
          x.actions[I] = a;
          found = true;
          break;
        }
      }
      if (!found) throw InternalError("decomposition residual lost flow at " + info.id);
      on_trace[game.SequenceOf(p, I, x.actions[I])] = 1;
    }
    Rational beta = residual[0];
    for (size_t s = 0; s < residual.size(); ++s) {
      if (on_trace[s] && residual[s] < beta) beta = residual[s];
    }
    for (size_t s = 0; s < residual.size(); ++s) {
      if (on_trace[s]) residual[s] -= beta;
    }
    out.push_back({beta, std::move(x)});
  }
  return out;
}

std::vector<WeightedStrategy> ExpandBehavior(const Game& game, const BehaviorStrategy& b,
                                             size_t cap) {
  CheckBehaviorStrategy(game, b);
  const int p = b.player;
  std::vector<std::vector<int>> choices(game.num_infosets(p));
  size_t count = 1;
  for (int I = 0; I < game.num_infosets(p); ++I) {
    for (int a : game.infoset(p, I).lex_order) {
      if (b.locals[I][a] > 0) choices[I].push_back(a);
    }
    count *= choices[I].size();
    if (count > cap) {
      throw ResourceLimitError("behavior strategy of " + PlayerName(game, p) + " has more than " +
                               std::to_string(cap) + " pure strategies in its support");
    }
  }
  std::vector<WeightedStrategy> out;
  ForEachAssignment(choices, [&](const std::vector<int>& actions) {
    Rational w = 1;
    for (size_t I = 0; I < actions.size(); ++I) w *= b.locals[I][actions[I]];
    out.push_back({w, PureStrategy{p, actions}});
  });
  return out;
}

MixtureOfProducts MixtureFromBehaviorProducts(const Game& game,
                                              const std::vector<BehaviorComponent>& profiles) {
  MixtureOfProducts pi;
  for (const BehaviorComponent& comp : profiles) {
    if (static_cast<int>(comp.behaviors.size()) != game.num_players()) {
      throw InvalidProfileError("behavior component needs one strategy per player");
    }
    MixtureOfProducts::Component out{comp.alpha, {}};
    for (int i = 0; i < game.num_players(); ++i) {
      CheckBehaviorStrategy(game, comp.behaviors[i]);
      out.strategies.push_back(Decompose(game, SequenceForm(game, comp.behaviors[i])));
    }
    pi.components.push_back(std::move(out));
  }
  CheckMixture(game, pi);
  return pi;
}

MixtureOfProducts ExpandBehaviorProducts(const Game& game,
                                         const std::vector<BehaviorComponent>& profiles) {
  MixtureOfProducts pi;
  for (const BehaviorComponent& comp : profiles) {
    if (static_cast<int>(comp.behaviors.size()) != game.num_players()) {
      throw InvalidProfileError("behavior component needs one strategy per player");
    }
    MixtureOfProducts::Component out{comp.alpha, {}};
    for (int i = 0; i < game.num_players(); ++i) {
      out.strategies.push_back(ExpandBehavior(game, comp.behaviors[i]));
    }
    pi.components.push_back(std::move(out));
  }
  CheckMixture(game, pi);
  return pi;
}

void ForEachSupportProfile(const MixtureOfProducts& pi,
                           const std::function<void(const Rational&, const PureProfile&)>& fn) {
  for (const auto& comp : pi.components) {
    if (comp.alpha == 0) continue;
    const size_t n = comp.strategies.size();
    std::vector<std::vector<int>> choices(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < comp.strategies[i].size(); ++k) {
        if (comp.strategies[i][k].beta > 0) choices[i].push_back(static_cast<int>(k));
      }
    }
    PureProfile profile(n);
    ForEachAssignment(choices, [&](const std::vector<int>& ks) {
      Rational w = comp.alpha;
      for (size_t i = 0; i < n; ++i) {
        w *= comp.strategies[i][ks[i]].beta;
        profile[i] = comp.strategies[i][ks[i]].strategy;
      }
      fn(w, profile);
    });
  }
}

std::vector<std::pair<Rational, PureProfile>> ProfileSupport(const MixtureOfProducts& pi) {
  std::vector<std::pair<Rational, PureProfile>> out;
  ForEachSupportProfile(pi, [&](const Rational& w, const PureProfile& x) { out.emplace_back(w, x); });
  return out;
}

MixtureOfProducts MixtureFromPureProfiles(
    const std::vector<std::pair<Rational, PureProfile>>& weighted_profiles) {
  MixtureOfProducts pi;
  for (const auto& [w, profile] : weighted_profiles) {
    MixtureOfProducts::Component comp{w, {}};
    for (const PureStrategy& x : profile) comp.strategies.push_back({{Rational(1), x}});
    pi.components.push_back(std::move(comp));
  }
  return pi;
}

size_t PureStrategyIndex(const Game& game, const PureStrategy& x) {
  size_t index = 0;
  for (int I = 0; I < game.num_infosets(x.player); ++I) {
    const std::vector<int>& order = game.infoset(x.player, I).lex_order;
    const size_t rank = std::find(order.begin(), order.end(), x.actions[I]) - order.begin();
    index = index * order.size() + rank;
  }
  return index;
}

PureStrategy PureStrategyAt(const Game& game, int player, size_t index) {
  PureStrategy x{player, std::vector<int>(game.num_infosets(player))};
  for (int I = game.num_infosets(player) - 1; I >= 0; --I) {
    const std::vector<int>& order = game.infoset(player, I).lex_order;
    x.actions[I] = order[index % order.size()];
    index /= order.size();
  }
  return x;
}

unsigned long long NumPureStrategies(const Game& game, int player) {
  unsigned long long total = 1;
  for (int I = 0; I < game.num_infosets(player); ++I) {
    const unsigned long long w = game.num_actions(player, I);
    if (total > ~0ULL / w) return ~0ULL;
    total *= w;
  }
  return total;
}

std::vector<PureStrategy> AllPureStrategies(const Game& game, int player, size_t cap) {
  if (NumPureStrategies(game, player) > cap) {
    throw ResourceLimitError(PlayerName(game, player) + " has more than " + std::to_string(cap) +
                             " pure strategies");
  }
  std::vector<std::vector<int>> choices(game.num_infosets(player));
  for (int I = 0; I < game.num_infosets(player); ++I) choices[I] = game.infoset(player, I).lex_order;
  std::vector<PureStrategy> out;
  ForEachAssignment(choices, [&](const std::vector<int>& actions) {
    out.push_back(PureStrategy{player, actions});
  });
  return out;
}

}  // namespace gtcorr
