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

#ifndef GTCORR_ORACLES_H_
#define GTCORR_ORACLES_H_

#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/metrics.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// Definitional (slow) counterparts of the metrics, for cross-checking.

// phi: X_i -> X_i as image indices into EnumeratePure(game, i).
using DeviationTable = std::vector<int>;

std::vector<PureStrategy> EnumeratePure(const Game& game, int player, size_t cap = 4096);

// phi(x)(.|I) depends only on I and the reach bits x(Ja), J before-or-at I.
// Outputs are compared only where both images actually reach I; what a
// strategy does at an infoset it never reaches is unobservable, and the
// literal reading would exclude the identity map.
bool IsCausal(const Game& game, int player, const DeviationTable& phi);
// phi(x)(.|I) depends only on I and the local recommendations x(.|J),
// J before-or-at I.
bool IsBehavioral(const Game& game, int player, const DeviationTable& phi);
bool IsConstant(const DeviationTable& phi);

struct OracleOptions {
  // Raw tables are enumerated when |X_i|^|X_i| is at most this; otherwise
  // the oracle enumerates per-infoset policies keyed by the class's
  // information (reach bits or recommendation histories).
  unsigned long long table_cap = 100'000;
  unsigned long long policy_cap = 200'000;
  size_t pure_cap = 4096;
};

// How the oracle covered each player's class.
enum class OracleMethod { kRawTables, kKeyedPolicies };

struct OracleReport {
  GapReport report;  // witness.table holds the maximizing phi
  std::vector<OracleMethod> method;
};

// Max over the class of R_i(pi, phi) (efce, full-efce, nfcce) or of
// R_i(pi, phi; I) (bce), by direct evaluation over the expanded support.
// Throws ResourceLimitError when a player exceeds both caps.
OracleReport BruteForceGap(const Game& game, const MixtureOfProducts& pi, GapNotion notion,
                           const OracleOptions& options = {});

// R_i(pi, phi) and R_i(pi, phi; I) for one table, evaluated on the
// expanded support.
Rational TableRegret(const Game& game, const MixtureOfProducts& pi, int player,
                     const DeviationTable& phi);
Rational TableCounterfactualRegret(const Game& game, const MixtureOfProducts& pi, int player,
                                   const DeviationTable& phi, int infoset);

// Conditional reach from the expanded support, without factorization.
ConditionalReach ExpandedConditionalReach(const Game& game, const MixtureOfProducts& pi,
                                          int player, int sequence);

}  // namespace gtcorr

#endif  // GTCORR_ORACLES_H_
