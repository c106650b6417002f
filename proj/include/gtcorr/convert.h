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

#ifndef GTCORR_CONVERT_H_
#define GTCORR_CONVERT_H_

#include <vector>

#include "gtcorr/deviation.h"
#include "gtcorr/game.h"
#include "gtcorr/metrics.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

struct CounterfactualBestResponseResult {
  PureStrategy strategy;
  // E[u_i(x', x_{-i}; I) | x_i(sigma) = 1], I the infoset of sigma (the
  // whole game for the empty sequence).
  Rational value;
  ConditionalReach reach;
  // The event had probability zero and the unconditional law was used.
  bool fallback = false;
};

// Backward induction from sigma's infoset; ties go to the lexicographically
// first action, and infosets outside the subtree get their first action.
CounterfactualBestResponseResult CounterfactualBestResponse(const Game& game,
                                                            const MixtureOfProducts& pi,
                                                            int player, int sequence);

// One entry per sequence of the player, indexed by sequence.
struct CbrTable {
  int player = -1;
  std::vector<CounterfactualBestResponseResult> entries;
};
CbrTable ComputeCbrTable(const Game& game, const MixtureOfProducts& pi, int player);

// Ja with x(Ja) = 1, J on I's chain and Ja not leading to I: where x leaves
// the path to an infoset it does not reach. -1 when x reaches I.
int DeviationPoint(const Game& game, const PureStrategy& x, int infoset);

// Replaces the action of every support strategy at each infoset it does
// not reach by the counterfactual best response at its deviation point.
// Weights and structure are unchanged.
MixtureOfProducts EfceToBce(const Game& game, const MixtureOfProducts& pi);

// R_i(pi, phi restricted to infosets at or below I).
Rational RestrictedDeviationValue(const Game& game, const MixtureOfProducts& pi, int player,
                                  const Deviation& phi, int infoset);

}  // namespace gtcorr

#endif  // GTCORR_CONVERT_H_
