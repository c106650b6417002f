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

#ifndef GTCORR_STRATEGY_H_
#define GTCORR_STRATEGY_H_

#include <functional>
#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/rational.h"

namespace gtcorr {

// One action per infoset of `player`, indexed by player-local infoset.
struct PureStrategy {
  int player = -1;
  std::vector<int> actions;

  bool operator==(const PureStrategy&) const = default;
  auto operator<=>(const PureStrategy&) const = default;
};

// Independent local distributions, one per infoset, over document-order
// actions.
struct BehaviorStrategy {
  int player = -1;
  std::vector<std::vector<Rational>> locals;
};

// Reach probabilities over the player's sequences (index 0 is the empty
// sequence).
struct SequenceFormVector {
  int player = -1;
  std::vector<Rational> reach;

  bool operator==(const SequenceFormVector&) const = default;
};

struct WeightedStrategy {
  Rational beta;
  PureStrategy strategy;
};

// sum_t alpha_t (x)_i sum_k beta_{t,k} x_i^{(t,k)}. Each player keeps its own
// number of terms per component.
struct MixtureOfProducts {
  struct Component {
    Rational alpha;
    std::vector<std::vector<WeightedStrategy>> strategies;  // [player][k]
  };
  std::vector<Component> components;
};

using PureProfile = std::vector<PureStrategy>;

// Per-component input to MixtureFromBehaviorProducts.
struct BehaviorComponent {
  Rational alpha;
  std::vector<BehaviorStrategy> behaviors;  // one per player
};

// Throws InvalidProfileError unless legal for the game.
void CheckPureStrategy(const Game& game, const PureStrategy& x);
void CheckBehaviorStrategy(const Game& game, const BehaviorStrategy& b);
void CheckMixture(const Game& game, const MixtureOfProducts& pi);

// Lexicographically first action at every infoset.
PureStrategy FirstPureStrategy(const Game& game, int player);

// x_i(s) for every sequence s.
std::vector<char> ReachedSequences(const Game& game, const PureStrategy& x);
// x_i(z|I): x plays every own action on the path from I to terminal z.
// False when z does not lie below I.
bool PlaysFrom(const Game& game, const PureStrategy& x, int infoset, int z);

SequenceFormVector SequenceForm(const Game& game, const PureStrategy& x);
SequenceFormVector SequenceForm(const Game& game, const BehaviorStrategy& b);

// Throws InvalidProfileError unless reach(empty) = 1, reach >= 0 and flow is
// conserved at every infoset.
void CheckSequenceForm(const Game& game, const SequenceFormVector& v);

// Greedy flow decomposition of a sequence-form vector into pure strategies.
// Each round traces one pure strategy through positive residual mass (the
// lexicographically first positive action where the trace arrives, the
// lexicographically first action elsewhere) and subtracts the largest
// feasible multiple, which zeroes at least one residual coordinate. Hence at
// most |Sigma_i| terms; the result reproduces v exactly.
std::vector<WeightedStrategy> Decompose(const Game& game, const SequenceFormVector& v);

// Every pure strategy in the product support of b with its product weight,
// in lexicographic order. Throws ResourceLimitError above `cap` terms.
std::vector<WeightedStrategy> ExpandBehavior(const Game& game, const BehaviorStrategy& b,
                                             size_t cap = 1'000'000);

// Decomposes each behavior strategy; outcome-equivalent with small supports.
MixtureOfProducts MixtureFromBehaviorProducts(const Game& game,
                                              const std::vector<BehaviorComponent>& profiles);
// Literal product expansion: the same correlated distribution, recommendation
// for recommendation.
MixtureOfProducts ExpandBehaviorProducts(const Game& game,
                                         const std::vector<BehaviorComponent>& profiles);

// Every (t, k_1, ..., k_n) with weight alpha_t prod_i beta_i^{(t,k_i)} > 0.
void ForEachSupportProfile(const MixtureOfProducts& pi,
                           const std::function<void(const Rational&, const PureProfile&)>& fn);
std::vector<std::pair<Rational, PureProfile>> ProfileSupport(const MixtureOfProducts& pi);

// Mixture with one component per pure profile, K = 1.
MixtureOfProducts MixtureFromPureProfiles(
    const std::vector<std::pair<Rational, PureProfile>>& weighted_profiles);

// All pure strategies of the player in lexicographic order (infosets in
// index order, actions in label order). Throws ResourceLimitError above cap.
std::vector<PureStrategy> AllPureStrategies(const Game& game, int player, size_t cap = 1'000'000);
// Position of x in AllPureStrategies(game, x.player).
size_t PureStrategyIndex(const Game& game, const PureStrategy& x);
PureStrategy PureStrategyAt(const Game& game, int player, size_t index);
// |X_i| = prod_I |A_I|, saturating.
unsigned long long NumPureStrategies(const Game& game, int player);

}  // namespace gtcorr

#endif  // GTCORR_STRATEGY_H_
