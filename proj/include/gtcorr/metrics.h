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

#ifndef GTCORR_METRICS_H_
#define GTCORR_METRICS_H_

#include <string>
#include <string_view>
#include <vector>

#include "gtcorr/deviation.h"
#include "gtcorr/game.h"
#include "gtcorr/rational.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// Probability per terminal, indexed like Game terminals.
using OutcomeDistribution = std::vector<Rational>;

Rational ExpectedUtility(const Game& game, const MixtureOfProducts& pi, int player);
OutcomeDistribution ComputeOutcomeDistribution(const Game& game, const MixtureOfProducts& pi);
// u_i(x) for a pure profile.
Rational PureUtility(const Game& game, const PureProfile& x, int player);

// u_i(x; I) = sum_{z > I} u_i(z) p(z) x_i(z|I) x_{-i}(z). Chance reach is
// included.
Rational CounterfactualUtility(const Game& game, const PureProfile& x, int player, int infoset);
// E_pi u_i(x; I).
Rational CounterfactualUtility(const Game& game, const MixtureOfProducts& pi, int player,
                               int infoset);

// E_pi[x_{-i}(z) 1[x_i(sigma) = 1]] per terminal (chance excluded) and the
// event mass P[x_i(sigma) = 1].
struct ConditionalReach {
  int player = -1;
  int sequence = 0;
  Rational event_mass;
  std::vector<Rational> reach;
};

ConditionalReach ComputeConditionalReach(const Game& game, const MixtureOfProducts& pi,
                                         int player, int sequence);

// Utility of `player` inside infoset J of `owner`, conditional on play
// reaching J: owner's own moves above J are set aside, everyone else plays
// the recommendation, and the result is normalized by the environment reach
// of J. Zero when J cannot be reached.
Rational ConditionalSubtreeUtility(const Game& game, const MixtureOfProducts& pi, int player,
                                   int owner, int infoset);

bool OutcomeEquivalent(const Game& game, const MixtureOfProducts& a, const MixtureOfProducts& b);
// Equal E_pi[x_i(z|I) x_{-i}(z)] for every player, infoset and z > I.
bool CounterfactuallyOutcomeEquivalent(const Game& game, const MixtureOfProducts& a,
                                       const MixtureOfProducts& b);

enum class GapNotion { kEfce, kBce, kFullEfce, kNfcce };
std::string_view GapNotionName(GapNotion notion);
GapNotion ParseGapNotion(std::string_view name);  // throws std::invalid_argument

struct GapReport {
  GapNotion notion = GapNotion::kEfce;
  Rational gap;
  std::vector<Rational> per_player;
  // bce only: [player][infoset] counterfactual gaps.
  std::vector<std::vector<Rational>> per_infoset;
  // The maximizing player (and infoset for bce); -1 when every gap is 0 and
  // the identity is the witness.
  int witness_player = -1;
  int witness_infoset = -1;
  Deviation witness;
};

// Default cap on recommendation-history states for the bce and full-efce
// dynamic programs, overridable through GT_STATE_CAP.
unsigned long long DefaultStateCap();

// Exact worst-case regret over the notion's deviation class. Throws
// ResourceLimitError when the bce/full-efce state count exceeds `state_cap`
// (0 means DefaultStateCap()).
GapReport ComputeGap(const Game& game, const MixtureOfProducts& pi, GapNotion notion,
                     unsigned long long state_cap = 0);

std::string GapReportToJson(const Game& game, const GapReport& report);

// Best pure response of `player` from infoset I downward (I = -1: whole
// game) against per-terminal weights w(z) (which should already include
// u_i, chance and opponent reach). Ties go to the lexicographically first
// action; infosets outside the subtree get their first action.
struct BestResponse {
  PureStrategy strategy;
  Rational value;
};
BestResponse ComputeBestResponse(const Game& game, int player, int infoset,
                                 const std::vector<Rational>& weights);

}  // namespace gtcorr

#endif  // GTCORR_METRICS_H_
