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

#include "json_util.h"

#include <stdexcept>

#include "gtcorr/errors.h"

namespace gtcorr {

using nlohmann::json;

json ParseJsonDocument(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Map the byte offset to a 1-based line and column.
    const size_t offset = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    size_t line = 1, column = 1;
    for (size_t k = 0; k < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     e.what());
  }
}

const json& RequireField(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where.empty() ? "/" : where, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string RequireString(const json& obj, const char* key, const std::string& where) {
  const json& v = RequireField(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "/" + key, "must be a string");
  return v.get<std::string>();
}

Rational ReadRational(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(mpz_class(value.dump(), 10));
  }
  if (!value.is_string()) throw ParseError(where, "rational must be a \"p/q\" string");
  try {
    return ParseRational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

}  // namespace gtcorr
