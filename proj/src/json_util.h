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

#ifndef GTCORR_SRC_JSON_UTIL_H_
#define GTCORR_SRC_JSON_UTIL_H_

#include <string>
#include <string_view>

#include "gtcorr/game.h"
#include "gtcorr/rational.h"
#include "gtcorr/strategy.h"
#include "json.hpp"

namespace gtcorr {

// Parses JSON text, mapping syntax errors to ParseError("line L, column C").
nlohmann::json ParseJsonDocument(std::string_view text);

const nlohmann::json& RequireField(const nlohmann::json& obj, const char* key,
                                   const std::string& where);
std::string RequireString(const nlohmann::json& obj, const char* key, const std::string& where);

// Accepts "p/q" / "p" strings and JSON integers.
Rational ReadRational(const nlohmann::json& value, const std::string& where);

// Document fragments shared by the serializers and reports.
nlohmann::ordered_json PureStrategyJson(const Game& game, const PureStrategy& x);
nlohmann::ordered_json ProfileJson(const Game& game, const MixtureOfProducts& pi);

}  // namespace gtcorr

#endif  // GTCORR_SRC_JSON_UTIL_H_
