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

#include "gtcorr/equilibrium.h"

#include <map>
#include <set>
#include <string>

#include "gtcorr/convert.h"
#include "gtcorr/errors.h"
#include "gtcorr/lp.h"
#include "gtcorr/metrics.h"
#include "profile_tables.h"

namespace gtcorr {
namespace {

// Reduced strategies that branch only at infosets in `root`'s subtree (all
// infosets for root = -1); everything else is lexicographically first.
std::vector<PureStrategy> ReducedFrom(const Game& game, int player, int root, size_t cap) {
  std::vector<PureStrategy> out;
  PureStrategy x = FirstPureStrategy(game, player);
  std::vector<char> reached(game.num_sequences(player), 0);
  reached[0] = 1;
  const int ni = game.num_infosets(player);
  auto branches = [&](int I) {
    if (root >= 0 && !game.InfosetPrecedes(player, root, I)) return false;
    return I == root || reached[game.infoset(player, I).parent_sequence] != 0;
  };
  // Infosets are numbered so that parents come first.
  auto rec = [&](auto&& self, int I) -> void {
    if (I == ni) {
      if (out.size() >= cap) {
        throw ResourceLimitError("more than " + std::to_string(cap) + " reduced strategies for " +
                                 game.player_names()[player]);
      }
      out.push_back(x);
      return;
    }
    const Infoset& info = game.infoset(player, I);
    if (!branches(I)) {
      x.actions[I] = info.lex_order[0];
      self(self, I + 1);
      return;
    }
    for (int a : info.lex_order) {
      x.actions[I] = a;
      const int s = game.SequenceOf(player, I, a);
      reached[s] = 1;
      self(self, I + 1);
      reached[s] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

int TriggerInfoset(const Game& game, int player, int sequence) {
  return sequence == 0 ? -1 : game.sequence(player, sequence).infoset;
}

PureStrategy Splice(const Game& game, const TriggerConstraint& trigger, const PureStrategy& x) {
  const int J = TriggerInfoset(game, trigger.player, trigger.sequence);
  if (J < 0) return trigger.continuation;
  PureStrategy y = x;
  for (int I = 0; I < game.num_infosets(trigger.player); ++I) {
    if (game.InfosetPrecedes(trigger.player, J, I)) y.actions[I] = trigger.continuation.actions[I];
  }
  return y;
}

// Column data shared by every row: per-player reach of each reduced strategy.
class ColumnSpace {
 public:
  ColumnSpace(const Game& game, unsigned long long cap) : game_(game) {
    const int n = game.num_players();
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) {
      strategies_.push_back(ReducedPureStrategies(game, i, cap));
      const unsigned long long k = strategies_.back().size();
      if (total > cap / k) {
        throw ResourceLimitError("the pure-profile LP would need more than " +
                                 std::to_string(cap) + " columns");
      }
      total *= k;
      reached_.emplace_back();
      for (const PureStrategy& x : strategies_[i]) reached_[i].push_back(ReachedSequences(game, x));
    }
    std::vector<int> digits(n, 0);
    while (true) {
      columns_.push_back(digits);
      int k = n - 1;
      while (k >= 0 && ++digits[k] == static_cast<int>(strategies_[k].size())) digits[k--] = 0;
      if (k < 0) break;
    }
    // Per-column environment reach of every terminal, excluding chance.
    utility_.assign(columns_.size(), std::vector<Rational>(n, Rational(0)));
    for (size_t c = 0; c < columns_.size(); ++c) {
      for (int z = 0; z < game.num_terminals(); ++z) {
        if (!Reaches(c, z, -1, nullptr)) continue;
        for (int i = 0; i < n; ++i) utility_[c][i] += game.chance_reach(z) * game.payoff(z, i);
      }
    }
  }

  size_t size() const { return columns_.size(); }
  const PureStrategy& Strategy(size_t c, int i) const { return strategies_[i][columns_[c][i]]; }
  PureProfile Profile(size_t c) const {
    PureProfile x;
    for (int i = 0; i < game_.num_players(); ++i) x.push_back(Strategy(c, i));
    return x;
  }
  const std::vector<char>& Reached(size_t c, int i) const { return reached_[i][columns_[c][i]]; }
  const Rational& Utility(size_t c, int i) const { return utility_[c][i]; }

  // Whether column c reaches z, with player `swap`'s reach replaced.
  bool Reaches(size_t c, int z, int swap, const std::vector<char>* replaced) const {
    for (int j = 0; j < game_.num_players(); ++j) {
      const std::vector<char>& r = j == swap ? *replaced : Reached(c, j);
      if (!r[game_.TerminalSequence(z, j)]) return false;
    }
    return true;
  }

  std::vector<Rational> Row(const TriggerConstraint& trigger) const {
    const int i = trigger.player;
    std::vector<Rational> row(size(), Rational(0));
    for (size_t c = 0; c < size(); ++c) {
      if (!Reached(c, i)[trigger.sequence]) continue;
      const std::vector<char> y = ReachedSequences(game_, Splice(game_, trigger, Strategy(c, i)));
      Rational u = 0;
      for (int z = 0; z < game_.num_terminals(); ++z) {
        if (Reaches(c, z, i, &y)) u += game_.chance_reach(z) * game_.payoff(z, i);
      }
      row[c] = u - Utility(c, i);
    }
    return row;
  }

  std::vector<Rational> ObjectiveRow(const std::vector<Rational>& objective) const {
    std::vector<Rational> row(size(), Rational(0));
    for (size_t c = 0; c < size(); ++c) {
      for (int z = 0; z < game_.num_terminals(); ++z) {
        if (objective[z] != 0 && Reaches(c, z, -1, nullptr)) row[c] += objective[z] * game_.chance_reach(z);
      }
    }
    return row;
  }

  MixtureOfProducts ToProfile(const std::vector<Rational>& mu) const {
    std::vector<std::pair<Rational, PureProfile>> support;
    for (size_t c = 0; c < size(); ++c) {
      if (mu[c] > 0) support.emplace_back(mu[c], Profile(c));
    }
    return MixtureFromPureProfiles(support);
  }

 private:
  const Game& game_;
  std::vector<std::vector<PureStrategy>> strategies_;
  std::vector<std::vector<std::vector<char>>> reached_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::vector<Rational>> utility_;
};

using TriggerKey = std::tuple<int, int, std::vector<int>>;

TriggerKey KeyOf(const Game& game, const TriggerConstraint& t) {
  // Only the continuation's actions that the splice reads matter.
  const int J = TriggerInfoset(game, t.player, t.sequence);
  std::vector<int> actions;
  for (int I = 0; I < game.num_infosets(t.player); ++I) {
    if (J < 0 || game.InfosetPrecedes(t.player, J, I)) actions.push_back(t.continuation.actions[I]);
  }
  return {t.player, t.sequence, std::move(actions)};
}

// Most profitable trigger per (player, sequence): the counterfactual best
// response against the current distribution.
std::vector<TriggerConstraint> Separate(const Game& game, const MixtureOfProducts& pi) {
  const ProfileTables tables = BuildProfileTables(game, pi);
  std::vector<TriggerConstraint> out;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int s = 0; s < game.num_sequences(i); ++s) {
      const std::vector<Rational> reach = UnnormalizedReach(game, tables, i, s);
      std::vector<Rational> w(game.num_terminals());
      for (int z = 0; z < game.num_terminals(); ++z) {
        w[z] = game.payoff(z, i) * game.chance_reach(z) * reach[z];
      }
      out.push_back({i, s, ComputeBestResponse(game, i, TriggerInfoset(game, i, s), w).strategy});
    }
  }
  return out;
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational v = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) v += a[k] * b[k];
  }
  return v;
}

EquilibriumResult SolveTriggerLp(const Game& game, const ColumnSpace& space,
                                 const std::vector<Rational>* objective,
                                 const Rational& row_epsilon, const EquilibriumOptions& options) {
  LinearProgram lp;
  const std::vector<Rational> c =
      objective ? space.ObjectiveRow(*objective) : std::vector<Rational>(space.size(), Rational(0));
  for (size_t k = 0; k < space.size(); ++k) lp.AddVariable(c[k]);
  lp.AddRow(std::vector<Rational>(space.size(), Rational(1)), Relation::kEqual, 1);
  std::set<TriggerKey> present;
  auto add = [&](const TriggerConstraint& t) {
    if (!present.insert(KeyOf(game, t)).second) return false;
    lp.AddRow(space.Row(t), Relation::kLessEqual, row_epsilon);
    return true;
  };
  if (!options.lazy_rows) {
    for (const TriggerConstraint& t : AllTriggers(game, options.trigger_cap)) add(t);
  }
  EquilibriumResult result;
  result.row_epsilon = row_epsilon;
  result.num_columns = space.size();
  while (true) {
    ++result.rounds;
    const LpSolution sol = SolveLp(lp);
    result.pivots += sol.pivots;
    if (sol.status != LpStatus::kOptimal) {
      // Correlated equilibria always exist and the region is a polytope.
      throw InternalError("trigger LP reported " + std::string(LpStatusName(sol.status)));
    }
    result.profile = space.ToProfile(sol.x);
    result.objective_value = sol.value;
    if (!options.lazy_rows) break;
    bool added = false;
    for (const TriggerConstraint& t : Separate(game, result.profile)) {
      if (Dot(space.Row(t), sol.x) > row_epsilon) added |= add(t);
    }
    if (!added) break;
  }
  result.num_rows = lp.rows.size() - 1;
  return result;
}

EquilibriumResult SolveEfce(const Game& game, const Rational& epsilon,
                            const std::vector<Rational>* objective,
                            const EquilibriumOptions& options) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (objective && static_cast<int>(objective->size()) != game.num_terminals()) {
    throw std::invalid_argument("objective must have one entry per terminal");
  }
  const ColumnSpace space(game, options.profile_cap);
  EquilibriumResult result = SolveTriggerLp(game, space, objective, epsilon, options);
  result.gap = ComputeGap(game, result.profile, GapNotion::kEfce).gap;
  if (result.gap > epsilon && epsilon > 0) {
    // A causal deviation may fire several disjoint triggers, each worth up
    // to the row bound; at most one per sequence.
    int m = 1;
    for (int i = 0; i < game.num_players(); ++i) m = std::max(m, game.num_sequences(i));
    result = SolveTriggerLp(game, space, objective, epsilon / m, options);
    result.gap = ComputeGap(game, result.profile, GapNotion::kEfce).gap;
  }
  if (result.gap > epsilon) {
    throw InternalError("trigger LP solution fails the causal-deviation check: gap " +
                        ToString(result.gap));
  }
  if (!objective) result.objective_value = 0;
  return result;
}

EquilibriumResult ToBce(const Game& game, EquilibriumResult efce) {
  efce.profile = EfceToBce(game, efce.profile);
  efce.gap = ComputeGap(game, efce.profile, GapNotion::kBce).gap;
  if (efce.gap != 0) {
    throw InternalError("converted EFCE is not an exact BCE: gap " + ToString(efce.gap));
  }
  return efce;
}

}  // namespace

std::vector<PureStrategy> ReducedPureStrategies(const Game& game, int player, size_t cap) {
  return ReducedFrom(game, player, -1, cap);
}

std::vector<PureProfile> ReducedProfiles(const Game& game, unsigned long long cap) {
  const ColumnSpace space(game, cap);
  std::vector<PureProfile> out;
  for (size_t c = 0; c < space.size(); ++c) out.push_back(space.Profile(c));
  return out;
}

Rational TriggerCoefficient(const Game& game, const TriggerConstraint& trigger,
                            const PureProfile& x) {
  if (!ReachedSequences(game, x[trigger.player])[trigger.sequence]) return 0;
  PureProfile y = x;
  y[trigger.player] = Splice(game, trigger, x[trigger.player]);
  return PureUtility(game, y, trigger.player) - PureUtility(game, x, trigger.player);
}

Rational TriggerValue(const Game& game, const TriggerConstraint& trigger,
                      const MixtureOfProducts& pi) {
  Rational v = 0;
  ForEachSupportProfile(pi, [&](const Rational& w, const PureProfile& x) {
    v += w * TriggerCoefficient(game, trigger, x);
  });
  return v;
}

std::vector<TriggerConstraint> AllTriggers(const Game& game, size_t cap) {
  std::vector<TriggerConstraint> out;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int s = 0; s < game.num_sequences(i); ++s) {
      for (PureStrategy& c : ReducedFrom(game, i, TriggerInfoset(game, i, s), cap)) {
        if (out.size() >= cap) {
          throw ResourceLimitError("more than " + std::to_string(cap) + " trigger constraints");
        }
        out.push_back({i, s, std::move(c)});
      }
    }
  }
  return out;
}

Rational ObjectiveValue(const Game& game, const MixtureOfProducts& pi,
                        const std::vector<Rational>& objective) {
  const OutcomeDistribution d = ComputeOutcomeDistribution(game, pi);
  Rational v = 0;
  for (int z = 0; z < game.num_terminals(); ++z) v += objective[z] * d[z];
  return v;
}

EquilibriumResult ComputeEfce(const Game& game, const Rational& epsilon,
                              const EquilibriumOptions& options) {
  return SolveEfce(game, epsilon, nullptr, options);
}

EquilibriumResult OptimalEfce(const Game& game, const std::vector<Rational>& objective,
                              const EquilibriumOptions& options) {
  EquilibriumResult r = SolveEfce(game, 0, &objective, options);
  if (ObjectiveValue(game, r.profile, objective) != r.objective_value) {
    throw InternalError("LP objective disagrees with the profile's c-value");
  }
  return r;
}

EquilibriumResult ComputeBce(const Game& game, const EquilibriumOptions& options) {
  return ToBce(game, ComputeEfce(game, 0, options));
}

EquilibriumResult OptimalBce(const Game& game, const std::vector<Rational>& objective,
                             const EquilibriumOptions& options) {
  EquilibriumResult r = ToBce(game, OptimalEfce(game, objective, options));
  if (ObjectiveValue(game, r.profile, objective) != r.objective_value) {
    throw InternalError("conversion changed the objective value");
  }
  return r;
}

}  // namespace gtcorr
