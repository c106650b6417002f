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

#ifndef GTCORR_SRC_PROFILE_TABLES_H_
#define GTCORR_SRC_PROFILE_TABLES_H_

#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/rational.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// Per-component marginals of a mixture of products. Within a component the
// players are independent, so everything the metrics need factorizes into
// these.
struct ProfileTables {
  std::vector<Rational> alpha;
  // sf[t][i][s]: sum_k beta x_i^{(t,k)}(s).
  std::vector<std::vector<std::vector<Rational>>> sf;
  // opp[t][i][z]: prod_{j != i} sf[t][j][sigma_j(z)].
  std::vector<std::vector<std::vector<Rational>>> opp;

  int num_components() const { return static_cast<int>(alpha.size()); }
};

ProfileTables BuildProfileTables(const Game& game, const MixtureOfProducts& pi);

// sum_t alpha_t sf[t][i][s] opp[t][i][z] per terminal.
std::vector<Rational> UnnormalizedReach(const Game& game, const ProfileTables& tables, int player,
                                        int sequence);

}  // namespace gtcorr

#endif  // GTCORR_SRC_PROFILE_TABLES_H_
