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

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "gtcorr/errors.h"
#include "gtcorr/metrics.h"
#include "json_util.h"
#include "profile_tables.h"

namespace gtcorr {
namespace {

std::vector<Rational> UtilityWeights(const Game& game, int player,
                                     const std::vector<Rational>& reach) {
  std::vector<Rational> w(game.num_terminals());
  for (int z = 0; z < game.num_terminals(); ++z) {
    w[z] = game.payoff(z, player) * game.chance_reach(z) * reach[z];
  }
  return w;
}

struct PlayerGap {
  Rational gap;
  Deviation witness;
};

// Causal deviations. T(s) is the best commitment once the recommendation is
// known to reach s; V(s) the value of obeying at s and deciding later. A
// deviator that first disobeys after seeing Ia learns nothing more, so
// max(T, V) per recommendation state is exact.
PlayerGap EfceGap(const Game& game, const ProfileTables& tables, int i, const Rational& eu) {
  const int ns = game.num_sequences(i);
  std::vector<std::vector<Rational>> w(ns);
  std::vector<BestResponse> commit(ns);
  for (int s = 0; s < ns; ++s) {
    w[s] = UtilityWeights(game, i, UnnormalizedReach(game, tables, i, s));
    const int I = s == 0 ? -1 : game.sequence(i, s).infoset;
    commit[s] = ComputeBestResponse(game, i, I, w[s]);
  }
  std::vector<Rational> obey(ns);
  std::vector<char> deviate(ns, 0);
  for (int s = ns - 1; s >= 0; --s) {
    Rational v = 0;
    for (int z : game.TerminalsAt(i, s)) v += w[s][z];
    for (int J : game.ChildInfosets(i, s)) {
      for (int a = 0; a < game.num_actions(i, J); ++a) {
        const int c = game.SequenceOf(i, J, a);
        if (commit[c].value > obey[c]) {
          deviate[c] = 1;
          v += commit[c].value;
        } else {
          v += obey[c];
        }
      }
    }
    obey[s] = std::move(v);
  }
  PlayerGap out;
  out.witness.player = i;
  if (commit[0].value > obey[0]) {
    out.gap = commit[0].value - eu;
    out.witness.triggers.emplace_back(0, commit[0].strategy);
    return out;
  }
  out.gap = obey[0] - eu;
  // Outermost triggers only; states below a trigger are never consulted.
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int J : game.ChildInfosets(i, s)) {
      for (int a = 0; a < game.num_actions(i, J); ++a) {
        const int c = game.SequenceOf(i, J, a);
        if (deviate[c]) {
          out.witness.triggers.emplace_back(c, commit[c].strategy);
        } else {
          stack.push_back(c);
        }
      }
    }
  }
  std::sort(out.witness.triggers.begin(), out.witness.triggers.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

PlayerGap NfcceGap(const Game& game, const ProfileTables& tables, int i, const Rational& eu) {
  const BestResponse br =
      ComputeBestResponse(game, i, -1, UtilityWeights(game, i, UnnormalizedReach(game, tables, i, 0)));
  // The identity is in the class too, so a profile whose correlation beats
  // every constant still has gap 0.
  PlayerGap out;
  out.witness.player = i;
  out.gap = 0;
  if (br.value > eu) {
    out.gap = br.value - eu;
    out.witness.triggers.emplace_back(0, br.strategy);
  }
  return out;
}

// Behavioral deviations: one state per (infoset J, local recommendations on
// J's chain). Support strategies matching the history are carried along so
// that the environment weight of each state is exact.
class RecommendationDp {
 public:
  struct State {
    Rational opt;
    int choice = -1;
  };

  RecommendationDp(const Game& game, const MixtureOfProducts& pi, const ProfileTables& tables,
                   int player)
      : game_(game), pi_(pi), tables_(tables), i_(player), states_(game.num_infosets(player)) {
    Match all(tables.num_components());
    for (int t = 0; t < tables.num_components(); ++t) {
      if (tables.alpha[t] == 0) continue;
      const auto& list = pi.components[t].strategies[player];
      for (size_t k = 0; k < list.size(); ++k) {
        if (list[k].beta != 0) all[t].push_back(static_cast<int>(k));
      }
    }
    std::vector<int> hist;
    for (int J : game.ChildInfosets(player, 0)) Expand(J, hist, all);
  }

  // Sum over recommendation histories of the optimal counterfactual value
  // at I.
  Rational OptimalAt(int I) const {
    Rational total = 0;
    for (const auto& [hist, st] : states_[I]) total += st.opt;
    return total;
  }

  // Deviation rules for every state at or below I (I = -1: all).
  Deviation Rules(int I) const {
    Deviation d;
    d.player = i_;
    for (int J = 0; J < game_.num_infosets(i_); ++J) {
      if (I >= 0 && !game_.InfosetPrecedes(i_, I, J)) continue;
      for (const auto& [hist, st] : states_[J]) {
        if (st.choice != hist.back()) d.rules[{J, hist}] = st.choice;
      }
    }
    return d;
  }

 private:
  using Match = std::vector<std::vector<int>>;  // [t] -> support indices k

  int Rec(int t, int k, int J) const {
    return pi_.components[t].strategies[i_][k].strategy.actions[J];
  }

  // Splits `match` by the recommendation at J and solves each child state.
  void Expand(int J, std::vector<int>& hist, const Match& match) {
    const int na = game_.num_actions(i_, J);
    std::vector<Match> split(na, Match(match.size()));
    for (size_t t = 0; t < match.size(); ++t) {
      for (int k : match[t]) split[Rec(static_cast<int>(t), k, J)][t].push_back(k);
    }
    for (int a = 0; a < na; ++a) {
      bool empty = true;
      for (const auto& ks : split[a]) empty = empty && ks.empty();
      if (empty) continue;  // zero mass: value 0, obey
      hist.push_back(a);
      Solve(J, hist, split[a]);
      hist.pop_back();
    }
  }

  void Solve(int J, std::vector<int>& hist, const Match& match) {
    // Environment weight per component: alpha_t * sum of matching betas.
    std::vector<Rational> mass(match.size(), Rational(0));
    for (size_t t = 0; t < match.size(); ++t) {
      for (int k : match[t]) mass[t] += pi_.components[t].strategies[i_][k].beta;
      mass[t] *= tables_.alpha[t];
    }
    const int na = game_.num_actions(i_, J);
    for (int c = 0; c < na; ++c) {
      for (int Jc : game_.ChildInfosets(i_, game_.SequenceOf(i_, J, c))) Expand(Jc, hist, match);
    }
    auto value_of = [&](int c) {
      const int s = game_.SequenceOf(i_, J, c);
      Rational v = 0;
      for (int z : game_.TerminalsAt(i_, s)) {
        Rational env = 0;
        for (size_t t = 0; t < match.size(); ++t) {
          if (mass[t] != 0) env += mass[t] * tables_.opp[t][i_][z];
        }
        v += game_.payoff(z, i_) * game_.chance_reach(z) * env;
      }
      for (int Jc : game_.ChildInfosets(i_, s)) {
        const size_t depth = hist.size();
        hist.push_back(0);
        for (int a = 0; a < game_.num_actions(i_, Jc); ++a) {
          hist[depth] = a;
          auto it = states_[Jc].find(hist);
          if (it != states_[Jc].end()) v += it->second.opt;
        }
        hist.pop_back();
      }
      return v;
    };
    // Obeying wins ties, then the lexicographically first action.
    const int rec = hist.back();
    State st{value_of(rec), rec};
    for (int c : game_.infoset(i_, J).lex_order) {
      if (c == rec) continue;
      Rational v = value_of(c);
      if (v > st.opt) st = {std::move(v), c};
    }
    states_[J][hist] = std::move(st);
  }

  const Game& game_;
  const MixtureOfProducts& pi_;
  const ProfileTables& tables_;
  int i_;
  std::vector<std::map<std::vector<int>, State>> states_;
};

void CheckStateCap(const Game& game, unsigned long long cap) {
  unsigned long long total = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const unsigned long long c = game.RecommendationStateCount(i);
    total = c > ~0ULL - total ? ~0ULL : total + c;
  }
  if (total > cap) {
    throw ResourceLimitError("recommendation-history dynamic program needs " +
                             std::to_string(total) + " states, above the cap of " +
                             std::to_string(cap) + " (set GT_STATE_CAP to raise it)");
  }
}

// E_pi u_i(x; I), computed by walking each support strategy of the player.
Rational ObedientCounterfactual(const Game& game, const MixtureOfProducts& pi,
                                const ProfileTables& tables, int i, int I) {
  Rational total = 0;
  for (int t = 0; t < tables.num_components(); ++t) {
    if (tables.alpha[t] == 0) continue;
    for (const WeightedStrategy& ws : pi.components[t].strategies[i]) {
      if (ws.beta == 0) continue;
      for (int z : game.TerminalsBelow(i, I)) {
        if (!PlaysFrom(game, ws.strategy, I, z)) continue;
        total += tables.alpha[t] * ws.beta * tables.opp[t][i][z] * game.payoff(z, i) *
                 game.chance_reach(z);
      }
    }
  }
  return total;
}

}  // namespace

std::string_view GapNotionName(GapNotion notion) {
  switch (notion) {
    case GapNotion::kEfce:
      return "efce";
    case GapNotion::kBce:
      return "bce";
    case GapNotion::kFullEfce:
      return "full-efce";
    case GapNotion::kNfcce:
      return "nfcce";
  }
  return "unknown";
}

GapNotion ParseGapNotion(std::string_view name) {
  for (GapNotion n : {GapNotion::kEfce, GapNotion::kBce, GapNotion::kFullEfce, GapNotion::kNfcce}) {
    if (GapNotionName(n) == name) return n;
  }
  throw std::invalid_argument("unknown notion \"" + std::string(name) +
                              "\" (expected efce, bce, full-efce or nfcce)");
}

unsigned long long DefaultStateCap() {
  if (const char* env = std::getenv("GT_STATE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1'000'000ULL;
}

GapReport ComputeGap(const Game& game, const MixtureOfProducts& pi, GapNotion notion,
                     unsigned long long state_cap) {
  CheckMixture(game, pi);
  if (notion == GapNotion::kBce || notion == GapNotion::kFullEfce) {
    CheckStateCap(game, state_cap == 0 ? DefaultStateCap() : state_cap);
  }
  const ProfileTables tables = BuildProfileTables(game, pi);
  GapReport report;
  report.notion = notion;
  report.gap = 0;
  const int n = game.num_players();
  if (notion == GapNotion::kBce) report.per_infoset.resize(n);
  for (int i = 0; i < n; ++i) {
    const Rational eu = ExpectedUtility(game, pi, i);
    PlayerGap pg;
    int witness_infoset = -1;
    switch (notion) {
      case GapNotion::kEfce:
        pg = EfceGap(game, tables, i, eu);
        break;
      case GapNotion::kNfcce:
        pg = NfcceGap(game, tables, i, eu);
        break;
      case GapNotion::kFullEfce: {
        RecommendationDp dp(game, pi, tables, i);
        Rational value = 0;
        const std::vector<Rational> reach = UnnormalizedReach(game, tables, i, 0);
        for (int z : game.TerminalsAt(i, 0)) {
          value += game.payoff(z, i) * game.chance_reach(z) * reach[z];
        }
        for (int J : game.ChildInfosets(i, 0)) value += dp.OptimalAt(J);
        pg.gap = value - eu;
        pg.witness = dp.Rules(-1);
        break;
      }
      case GapNotion::kBce: {
        RecommendationDp dp(game, pi, tables, i);
        pg.gap = 0;
        pg.witness.player = i;
        for (int I = 0; I < game.num_infosets(i); ++I) {
          Rational g = dp.OptimalAt(I) - ObedientCounterfactual(game, pi, tables, i, I);
          if (g < 0) throw InternalError("negative counterfactual gap");
          if (g > pg.gap) {
            pg.gap = g;
            witness_infoset = I;
          }
          report.per_infoset[i].push_back(std::move(g));
        }
        if (witness_infoset >= 0) pg.witness = dp.Rules(witness_infoset);
        break;
      }
    }
    if (pg.gap < 0) throw InternalError("negative gap for player " + game.player_names()[i]);
    if (pg.gap > report.gap) {
      report.gap = pg.gap;
      report.witness_player = i;
      report.witness_infoset = witness_infoset;
      report.witness = pg.witness;
    }
    report.per_player.push_back(std::move(pg.gap));
  }
  return report;
}

std::string GapReportToJson(const Game& game, const GapReport& report) {
  using ojson = nlohmann::ordered_json;
  ojson j = ojson::object();
  j["notion"] = std::string(GapNotionName(report.notion));
  j["gap"] = ToString(report.gap);
  j["gap_decimal"] = ToDecimal(report.gap);
  ojson per_player = ojson::object();
  for (int i = 0; i < game.num_players(); ++i) {
    per_player[game.player_names()[i]] = ToString(report.per_player[i]);
  }
  j["per_player"] = std::move(per_player);
  if (report.notion == GapNotion::kBce) {
    ojson per_infoset = ojson::object();
    for (int i = 0; i < game.num_players(); ++i) {
      ojson m = ojson::object();
      for (int I = 0; I < game.num_infosets(i); ++I) {
        m[game.infoset(i, I).id] = ToString(report.per_infoset[i][I]);
      }
      per_infoset[game.player_names()[i]] = std::move(m);
    }
    j["per_infoset"] = std::move(per_infoset);
  }
  ojson witness = ojson::parse(DeviationToJson(game, report.witness));
  if (report.witness_infoset >= 0) {
    witness["at_infoset"] = game.infoset(report.witness_player, report.witness_infoset).id;
  }
  j["witness"] = std::move(witness);
  return j.dump(2) + "\n";
}

}  // namespace gtcorr
