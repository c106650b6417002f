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

#ifndef GTCORR_GAME_JSON_H_
#define GTCORR_GAME_JSON_H_

#include <string>
#include <string_view>

#include "gtcorr/game.h"

namespace gtcorr {

// Reads the game JSON document:
//   {"players": [name...], "root": Node}
//   Node = {"kind":"chance","actions":[{"label","prob","child"}...]}
//        | {"kind":"decision","player":int,"infoset":id,"actions":[{"label","child"}...]}
//        | {"kind":"terminal","payoffs":["p/q"...]}
// Throws ParseError with a line:column (syntax) or JSON pointer (schema)
// location. Payload semantics beyond the schema (perfect recall, chance
// sums) are left to Validate().
GameTree ParseGameTree(std::string_view text);

// ParseGameTree followed by Game::FromTree.
Game ParseGame(std::string_view text);

// Canonical serialization: fixed key order, two-space indent, rationals in
// lowest terms. ParseGameTree(SerializeGame(t)) serializes identically.
std::string SerializeGame(const GameTree& tree);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace gtcorr

#endif  // GTCORR_GAME_JSON_H_
