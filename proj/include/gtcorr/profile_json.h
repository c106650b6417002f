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

#ifndef GTCORR_PROFILE_JSON_H_
#define GTCORR_PROFILE_JSON_H_

#include <string>
#include <string_view>
#include <vector>

#include "gtcorr/game.h"
#include "gtcorr/strategy.h"

namespace gtcorr {

// Mixture documents:
//   {"components":[{"alpha":"p/q","strategies":[[{"beta":"p/q",
//       "actions":{infosetId: actionLabel,...}}...] per player]}]}
// Behavior documents:
//   {"components":[{"alpha":"p/q","behaviors":[{infosetId:{label:"p/q",...}}...]}]}
// Behavior locals may omit zero-probability actions.
struct ProfileDocument {
  bool is_behavior = false;
  MixtureOfProducts mixture;                // when !is_behavior
  std::vector<BehaviorComponent> behavior;  // when is_behavior
};

// Throws ParseError on schema problems, InvalidProfileError when the profile
// is well-formed but not legal for the game.
ProfileDocument ParseProfileDocument(const Game& game, std::string_view text);

// Mixture documents as-is; behavior documents through
// MixtureFromBehaviorProducts (or the literal product expansion when
// `expand_behavior` is set).
MixtureOfProducts ParseProfile(const Game& game, std::string_view text,
                               bool expand_behavior = false);

std::string SerializeProfile(const Game& game, const MixtureOfProducts& pi);

// {"infosetId": "label", ...} in infoset order.
std::string PureStrategyToJson(const Game& game, const PureStrategy& x);
// Compact "I:a,J:b" rendering for reports and test messages.
std::string PureStrategyName(const Game& game, const PureStrategy& x);

// Objective documents: {"c": {terminalId: "p/q", ...}}, omitted terminals 0.
std::vector<Rational> ParseObjective(const Game& game, std::string_view text);

}  // namespace gtcorr

#endif  // GTCORR_PROFILE_JSON_H_
