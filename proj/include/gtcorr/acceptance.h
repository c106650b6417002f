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

#ifndef GTCORR_ACCEPTANCE_H_
#define GTCORR_ACCEPTANCE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gtcorr {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;                 // one-line summary of what was checked
  std::vector<std::string> failures;  // first few failed checks
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260417;
  int random_games = 200;       // criteria 3, 6 and 10
  int oracle_games = 50;        // criterion 4 (feasible games required)
  int decompositions = 100;     // criterion 5, per fixture and player
  int optimal_pairs = 20;       // criterion 7
};

// Runs criteria 1-10 in order. When `out` is set, prints one line per
// criterion as soon as it finishes.
std::vector<CriterionResult> RunAcceptanceSuite(const AcceptanceOptions& options = {},
                                                std::ostream* out = nullptr);

std::string FormatCriterion(const CriterionResult& result);

}  // namespace gtcorr

#endif  // GTCORR_ACCEPTANCE_H_
