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

#ifndef GTCORR_FIXTURES_H_
#define GTCORR_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

namespace gtcorr {

// Bundled documents from data/fixtures, compiled in so that tests and
// `gt paper-check` need no data directory. Names are relative paths, e.g.
// "ebos.game.json" or "invalid/chance_sum.game.json".
std::vector<std::string> FixtureNames();
// Throws std::out_of_range for unknown names.
std::string_view FixtureText(std::string_view name);

}  // namespace gtcorr

#endif  // GTCORR_FIXTURES_H_
