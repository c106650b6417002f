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

#include "gtcorr/oracles.h"

#include <algorithm>
#include <map>

#include "gtcorr/errors.h"

namespace gtcorr {
namespace {

// Everything the oracle needs about one player, computed from the expanded
// support only.
class PlayerView {
 public:
  PlayerView(const Game& game, int player, size_t pure_cap)
      : game_(game), i_(player), pure_(EnumeratePure(game, player, pure_cap)) {
    const int ni = game.num_infosets(player);
    for (const PureStrategy& x : pure_) reached_.push_back(ReachedSequences(game, x));
    causal_key_.assign(ni, std::vector<int>(pure_.size()));
    behavioral_key_.assign(ni, std::vector<int>(pure_.size()));
    num_causal_keys_.assign(ni, 0);
    num_behavioral_keys_.assign(ni, 0);
    for (int I = 0; I < ni; ++I) {
      std::map<std::vector<int>, int> causal, behavioral;
      for (size_t x = 0; x < pure_.size(); ++x) {
        std::vector<int> ck, bk;
        for (int J : game.InfosetChain(player, I)) {
          bk.push_back(pure_[x].actions[J]);
          for (int a = 0; a < game.num_actions(player, J); ++a) {
            ck.push_back(reached_[x][game.SequenceOf(player, J, a)]);
          }
        }
        causal_key_[I][x] = causal.try_emplace(ck, static_cast<int>(causal.size())).first->second;
        behavioral_key_[I][x] =
            behavioral.try_emplace(bk, static_cast<int>(behavioral.size())).first->second;
      }
      num_causal_keys_[I] = static_cast<int>(causal.size());
      num_behavioral_keys_[I] = static_cast<int>(behavioral.size());
    }
  }

  const std::vector<PureStrategy>& pure() const { return pure_; }
  size_t size() const { return pure_.size(); }
  bool Reaches(int x, int I) const {
    return reached_[x][game_.infoset(i_, I).parent_sequence];
  }
  int Key(bool causal, int I, int x) const {
    return causal ? causal_key_[I][x] : behavioral_key_[I][x];
  }
  int NumKeys(bool causal, int I) const {
    return causal ? num_causal_keys_[I] : num_behavioral_keys_[I];
  }

  bool Conforms(const DeviationTable& phi, bool causal) const {
    for (int I = 0; I < game_.num_infosets(i_); ++I) {
      std::vector<int> seen(NumKeys(causal, I), -1);
      for (size_t x = 0; x < pure_.size(); ++x) {
        if (causal && !Reaches(phi[x], I)) continue;
        const int out = pure_[phi[x]].actions[I];
        int& slot = seen[Key(causal, I, static_cast<int>(x))];
        if (slot < 0) {
          slot = out;
        } else if (slot != out) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  const Game& game_;
  int i_;
  std::vector<PureStrategy> pure_;
  std::vector<std::vector<char>> reached_;
  std::vector<std::vector<int>> causal_key_, behavioral_key_;
  std::vector<int> num_causal_keys_, num_behavioral_keys_;
};

// Payoff matrices over (recommended x, played y), aggregated over the
// expanded support: A[x][y] = sum_e w_e 1[x_i^e = x] u_i(y, x_{-i}^e) and the
// counterfactual version per infoset.
class RegretTables {
 public:
  RegretTables(const Game& game, const MixtureOfProducts& pi, int player, const PlayerView& view)
      : game_(game), i_(player), view_(view) {
    const size_t nx = view.size();
    std::vector<std::vector<Rational>> env(nx);  // [x][z], chance excluded
    for (const auto& [w, profile] : ProfileSupport(pi)) {
      const int x = static_cast<int>(PureStrategyIndex(game, profile[player]));
      if (env[x].empty()) {
        env[x].assign(game.num_terminals(), Rational(0));
        active_.push_back(x);
      }
      std::vector<std::vector<char>> reached;
      for (const PureStrategy& xj : profile) reached.push_back(ReachedSequences(game, xj));
      for (int z = 0; z < game.num_terminals(); ++z) {
        bool on = true;
        for (int j = 0; j < game.num_players() && on; ++j) {
          if (j != player) on = reached[j][game.TerminalSequence(z, j)];
        }
        if (on) env[x][z] += w;
      }
    }
    std::sort(active_.begin(), active_.end());
    const int ni = game.num_infosets(player);
    ordinary_.assign(nx, {});
    counterfactual_.assign(ni, std::vector<std::vector<Rational>>(nx));
    for (int x : active_) {
      ordinary_[x].assign(nx, Rational(0));
      for (int I = 0; I < ni; ++I) counterfactual_[I][x].assign(nx, Rational(0));
      for (size_t y = 0; y < nx; ++y) {
        const PureStrategy& ys = view.pure()[y];
        const std::vector<char> reached = ReachedSequences(game, ys);
        for (int z = 0; z < game.num_terminals(); ++z) {
          if (env[x][z] == 0) continue;
          const Rational v = game.payoff(z, player) * game.chance_reach(z) * env[x][z];
          if (reached[game.TerminalSequence(z, player)]) ordinary_[x][y] += v;
        }
        for (int I = 0; I < ni; ++I) {
          for (int z : game.TerminalsBelow(player, I)) {
            if (env[x][z] == 0 || !PlaysFrom(game, ys, I, z)) continue;
            counterfactual_[I][x][y] += game.payoff(z, player) * game.chance_reach(z) * env[x][z];
          }
        }
      }
    }
  }

  const std::vector<int>& active() const { return active_; }

  Rational Regret(const DeviationTable& phi) const {
    Rational r = 0;
    for (int x : active_) r += ordinary_[x][phi[x]] - ordinary_[x][x];
    return r;
  }
  Rational CounterfactualRegret(const DeviationTable& phi, int I) const {
    Rational r = 0;
    for (int x : active_) r += counterfactual_[I][x][phi[x]] - counterfactual_[I][x][x];
    return r;
  }

 private:
  const Game& game_;
  int i_;
  const PlayerView& view_;
  std::vector<int> active_;
  std::vector<std::vector<Rational>> ordinary_;
  std::vector<std::vector<std::vector<Rational>>> counterfactual_;
};

// Tracks the best table per player (and per infoset for bce).
struct Best {
  Rational value = 0;
  DeviationTable table;
  std::vector<Rational> per_infoset;
  int infoset = -1;
};

void Consider(const RegretTables& rt, GapNotion notion, int ni, const DeviationTable& phi,
              Best& best) {
  if (notion != GapNotion::kBce) {
    Rational r = rt.Regret(phi);
    if (r > best.value) {
      best.value = std::move(r);
      best.table = phi;
    }
    return;
  }
  for (int I = 0; I < ni; ++I) {
    Rational r = rt.CounterfactualRegret(phi, I);
    if (r > best.per_infoset[I]) best.per_infoset[I] = r;
    if (r > best.value) {
      best.value = std::move(r);
      best.table = phi;
      best.infoset = I;
    }
  }
}

// Odometer increment; false once every digit wrapped.
bool Next(std::vector<int>& digits, const std::vector<int>& radix) {
  for (size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

unsigned long long SaturatingPow(unsigned long long base, unsigned long long exp) {
  unsigned long long r = 1;
  for (unsigned long long k = 0; k < exp; ++k) {
    if (base != 0 && r > ~0ULL / base) return ~0ULL;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<PureStrategy> EnumeratePure(const Game& game, int player, size_t cap) {
  return AllPureStrategies(game, player, cap);
}

bool IsCausal(const Game& game, int player, const DeviationTable& phi) {
  return PlayerView(game, player, phi.size()).Conforms(phi, true);
}

bool IsBehavioral(const Game& game, int player, const DeviationTable& phi) {
  return PlayerView(game, player, phi.size()).Conforms(phi, false);
}

bool IsConstant(const DeviationTable& phi) {
  for (int y : phi) {
    if (y != phi.front()) return false;
  }
  return true;
}

OracleReport BruteForceGap(const Game& game, const MixtureOfProducts& pi, GapNotion notion,
                           const OracleOptions& options) {
  CheckMixture(game, pi);
  OracleReport out;
  GapReport& report = out.report;
  report.notion = notion;
  report.gap = 0;
  if (notion == GapNotion::kBce) report.per_infoset.resize(game.num_players());
  const bool causal = notion == GapNotion::kEfce;
  for (int i = 0; i < game.num_players(); ++i) {
    const PlayerView view(game, i, options.pure_cap);
    const RegretTables rt(game, pi, i, view);
    const int nx = static_cast<int>(view.size());
    const int ni = game.num_infosets(i);
    Best best;
    best.per_infoset.assign(ni, Rational(0));
    DeviationTable identity(nx);
    for (int x = 0; x < nx; ++x) identity[x] = x;
    best.table = identity;

    if (notion == GapNotion::kNfcce) {
      out.method.push_back(OracleMethod::kRawTables);
      for (int y = 0; y < nx; ++y) Consider(rt, notion, ni, DeviationTable(nx, y), best);
    } else if (SaturatingPow(nx, nx) <= options.table_cap) {
      out.method.push_back(OracleMethod::kRawTables);
      DeviationTable phi(nx, 0);
      const std::vector<int> radix(nx, nx);
      do {
        if (view.Conforms(phi, causal)) Consider(rt, notion, ni, phi, best);
      } while (Next(phi, radix));
    } else {
      out.method.push_back(OracleMethod::kKeyedPolicies);
      // One digit per (infoset, key): the local action for that information.
      std::vector<int> radix, offset(ni);
      unsigned long long count = 1;
      for (int I = 0; I < ni; ++I) {
        offset[I] = static_cast<int>(radix.size());
        for (int k = 0; k < view.NumKeys(causal, I); ++k) {
          radix.push_back(game.num_actions(i, I));
          count = count > ~0ULL / radix.back() ? ~0ULL : count * radix.back();
        }
      }
      if (count > options.policy_cap) {
        throw ResourceLimitError("oracle for " + game.player_names()[i] + " needs " +
                                 std::to_string(count) + " keyed policies, above the cap of " +
                                 std::to_string(options.policy_cap));
      }
      std::vector<int> digits(radix.size(), 0);
      DeviationTable phi = identity;
      do {
        for (int x : rt.active()) {
          PureStrategy y{i, std::vector<int>(ni)};
          for (int I = 0; I < ni; ++I) {
            y.actions[I] = digits[offset[I] + view.Key(causal, I, x)];
          }
          phi[x] = static_cast<int>(PureStrategyIndex(game, y));
        }
        const Rational before = best.value;
        Consider(rt, notion, ni, phi, best);
        if (best.value > before) {
          // Materialize the whole table for the witness.
          for (int x = 0; x < nx; ++x) {
            PureStrategy y{i, std::vector<int>(ni)};
            for (int I = 0; I < ni; ++I) {
              y.actions[I] = digits[offset[I] + view.Key(causal, I, x)];
            }
            best.table[x] = static_cast<int>(PureStrategyIndex(game, y));
          }
        }
      } while (Next(digits, radix));
    }

    if (notion == GapNotion::kBce) report.per_infoset[i] = best.per_infoset;
    if (best.value > report.gap) {
      report.gap = best.value;
      report.witness_player = i;
      report.witness_infoset = best.infoset;
      report.witness = Deviation{};
      report.witness.player = i;
      report.witness.table = best.table;
    }
    report.per_player.push_back(best.value);
  }
  return out;
}

Rational TableRegret(const Game& game, const MixtureOfProducts& pi, int player,
                     const DeviationTable& phi) {
  const PlayerView view(game, player, phi.size());
  return RegretTables(game, pi, player, view).Regret(phi);
}

Rational TableCounterfactualRegret(const Game& game, const MixtureOfProducts& pi, int player,
                                   const DeviationTable& phi, int infoset) {
  const PlayerView view(game, player, phi.size());
  return RegretTables(game, pi, player, view).CounterfactualRegret(phi, infoset);
}

ConditionalReach ExpandedConditionalReach(const Game& game, const MixtureOfProducts& pi,
                                          int player, int sequence) {
  ConditionalReach out;
  out.player = player;
  out.sequence = sequence;
  out.event_mass = 0;
  out.reach.assign(game.num_terminals(), Rational(0));
  for (const auto& [w, profile] : ProfileSupport(pi)) {
    std::vector<std::vector<char>> reached;
    for (const PureStrategy& xj : profile) reached.push_back(ReachedSequences(game, xj));
    if (!reached[player][sequence]) continue;
    out.event_mass += w;
    for (int z = 0; z < game.num_terminals(); ++z) {
      bool on = true;
      for (int j = 0; j < game.num_players() && on; ++j) {
        if (j != player) on = reached[j][game.TerminalSequence(z, j)];
      }
      if (on) out.reach[z] += w;
    }
  }
  return out;
}

}  // namespace gtcorr
