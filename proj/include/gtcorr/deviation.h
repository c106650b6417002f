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

#ifndef GTCORR_DEVIATION_H_
#define GTCORR_DEVIATION_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// A deviation phi: X_i -> X_i in one of three concrete forms.
//
//  - Triggers: obey until the recommendation reaches a trigger sequence Ja,
//    then play the continuation at J and below. Sequence 0 (the empty
//    sequence) triggers at the root, giving a constant deviation. When
//    several triggers fire, the one closest to the root wins.
//  - History rules: at infoset J, given the local recommendations on J's
//    chain (top-down, J last), play the listed action; obey otherwise.
//  - Raw table: image index per pure strategy, in AllPureStrategies order.
//
// Exactly one form is populated.
struct Deviation {
  int player = -1;
  std::vector<std::pair<int, PureStrategy>> triggers;
  std::map<std::pair<int, std::vector<int>>, int> rules;
  std::vector<int> table;

  bool is_identity() const { return triggers.empty() && rules.empty() && table.empty(); }
};

PureStrategy ApplyDeviation(const Game& game, const Deviation& phi, const PureStrategy& x);

// Same deviation restricted to infosets J with I before J; elsewhere obey.
PureStrategy ApplyDeviationFrom(const Game& game, const Deviation& phi, int infoset,
                                const PureStrategy& x);

// Local recommendations of x on J's chain, top-down.
std::vector<int> ChainHistory(const Game& game, const PureStrategy& x, int infoset);

std::string DeviationToJson(const Game& game, const Deviation& phi);

}  // namespace gtcorr

#endif  // GTCORR_DEVIATION_H_
