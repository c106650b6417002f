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

#ifndef GTCORR_EQUILIBRIUM_H_
#define GTCORR_EQUILIBRIUM_H_

#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/rational.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// One pure strategy per reach pattern: unreached infosets take their
// lexicographically first action. Lexicographic order.
std::vector<PureStrategy> ReducedPureStrategies(const Game& game, int player,
                                                size_t cap = 1'000'000);
// Cartesian product of the reduced strategies; the LP columns.
std::vector<PureProfile> ReducedProfiles(const Game& game, unsigned long long cap);

// "Obey until the recommendation reaches `sequence`, then play
// `continuation` at its infoset and below" (from the root for sequence 0).
struct TriggerConstraint {
  int player = -1;
  int sequence = 0;
  PureStrategy continuation;
};

// 1[x_i(sequence) = 1] (u_i(x with the continuation spliced in) - u_i(x)).
Rational TriggerCoefficient(const Game& game, const TriggerConstraint& trigger,
                            const PureProfile& x);
// Expected coefficient under pi.
Rational TriggerValue(const Game& game, const TriggerConstraint& trigger,
                      const MixtureOfProducts& pi);
// Every trigger with a reduced continuation below its infoset.
std::vector<TriggerConstraint> AllTriggers(const Game& game, size_t cap = 100'000);

// sum_z c(z) P_pi[z].
Rational ObjectiveValue(const Game& game, const MixtureOfProducts& pi,
                        const std::vector<Rational>& objective);

struct EquilibriumOptions {
  unsigned long long profile_cap = 20'000;
  // Generate trigger rows lazily from counterfactual best responses (the
  // default) or write out the whole family up front.
  bool lazy_rows = true;
  size_t trigger_cap = 100'000;
};

struct EquilibriumResult {
  MixtureOfProducts profile;  // one component per pure profile, K = 1
  Rational objective_value;   // c-value (0 without an objective)
  Rational gap;               // verified efce gap (bce gap for the BCE calls)
  Rational row_epsilon;       // right-hand side used on trigger rows
  int rounds = 0;
  size_t num_rows = 0;
  size_t num_columns = 0;
  long pivots = 0;
};

// An epsilon-EFCE, verified with the causal-deviation gap.
EquilibriumResult ComputeEfce(const Game& game, const Rational& epsilon = 0,
                              const EquilibriumOptions& options = {});
// An exact EFCE maximizing sum_z c(z) P[z].
EquilibriumResult OptimalEfce(const Game& game, const std::vector<Rational>& objective,
                              const EquilibriumOptions& options = {});
// EfceToBce of the above, verified to have bce gap 0.
EquilibriumResult ComputeBce(const Game& game, const EquilibriumOptions& options = {});
EquilibriumResult OptimalBce(const Game& game, const std::vector<Rational>& objective,
                             const EquilibriumOptions& options = {});

}  // namespace gtcorr

#endif  // GTCORR_EQUILIBRIUM_H_
