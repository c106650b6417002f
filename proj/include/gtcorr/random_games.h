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

#ifndef GTCORR_RANDOM_GAMES_H_
#define GTCORR_RANDOM_GAMES_H_

#include <cstdint>
#include <random>

#include "gtcorr/game.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

struct RandomGameOptions {
  int max_nodes = 30;
  int min_players = 1;
  int max_players = 3;
  int max_actions = 3;
  // Chance nodes are drawn with this probability (in percent).
  int chance_percent = 20;
  // Probability (percent) that a decision node joins an existing infoset
  // with the same own history, when one is compatible.
  int merge_percent = 50;
  int max_payoff = 4;   // numerators in [-max_payoff, max_payoff]
  int max_denominator = 3;
};

// A random valid game with perfect recall. Deterministic in the seed.
Game RandomGame(std::mt19937_64& rng, const RandomGameOptions& options = {});

// Random rational in [0, 1] with a small denominator.
Rational RandomUnitRational(std::mt19937_64& rng, int max_denominator = 4);

BehaviorStrategy RandomBehaviorStrategy(const Game& game, int player, std::mt19937_64& rng,
                                        int max_weight = 3);

// Mixture of `components` random behavior products, expanded literally.
MixtureOfProducts RandomProfile(const Game& game, std::mt19937_64& rng, int components = 2);

}  // namespace gtcorr

#endif  // GTCORR_RANDOM_GAMES_H_
