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

#ifndef GTCORR_ERRORS_H_
#define GTCORR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gtcorr {

// Malformed game or profile document. `where` carries a line/column or a
// JSON pointer into the document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Semantically invalid game (fails validation, unknown player or infoset).
class GameError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Profile that is not a valid correlated profile for the game.
class InvalidProfileError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration or state-count cap would be exceeded.
class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A post-condition the library verifies on its own output did not hold.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gtcorr

#endif  // GTCORR_ERRORS_H_
