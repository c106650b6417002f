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

#ifndef GTCORR_LP_H_
#define GTCORR_LP_H_

#include <optional>
#include <string_view>
#include <vector>

#include "gtcorr/rational.h"

namespace gtcorr {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// max (or min) objective . x  subject to  rows[r] . x (relation) rhs[r],
// lower <= x <= upper. Rows are dense.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  bool maximize = true;
  std::vector<Rational> lower;                  // empty: all 0
  std::vector<std::optional<Rational>> upper;   // empty: none

  int AddVariable(const Rational& cost = 0);
  void AddRow(std::vector<Rational> row, Relation relation, Rational rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value;
  // Dual multipliers, one per row (bound rows excluded); checked against
  // x by weak duality before returning.
  std::vector<Rational> duals;
  long pivots = 0;
};

// Dense two-phase primal simplex with Bland's rule, exact arithmetic.
// Optimal answers are certified (zero primal residual, dual feasibility,
// equal objectives); a failed certificate throws InternalError.
LpSolution SolveLp(const LinearProgram& lp);

}  // namespace gtcorr

#endif  // GTCORR_LP_H_
