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

#include "gtcorr/lp.h"

#include <stdexcept>
#include <string>

#include "gtcorr/errors.h"

namespace gtcorr {
namespace {

// Standard form: max c.x, A x (rel) b with b >= 0, x >= 0.
struct StandardForm {
  std::vector<std::vector<Rational>> a;
  std::vector<Relation> rel;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<int> sign;  // +1, or -1 where the row was negated to make b >= 0
  Rational offset;        // objective constant from shifting by lower bounds
};

StandardForm Standardize(const LinearProgram& lp) {
  const int n = lp.num_vars;
  StandardForm sf;
  std::vector<Rational> lower = lp.lower;
  lower.resize(n, Rational(0));
  sf.c = lp.objective;
  sf.c.resize(n, Rational(0));
  if (!lp.maximize) {
    for (Rational& v : sf.c) v = -v;
  }
  sf.offset = 0;
  // Callers may hand in uncanonical values (e.g. Rational(10, 2)); GMP
  // comparisons require canonical form.
  for (Rational& v : sf.c) v.canonicalize();
  for (Rational& v : lower) v.canonicalize();
  for (int j = 0; j < n; ++j) sf.offset += sf.c[j] * lower[j];
  auto add = [&](std::vector<Rational> row, Relation rel, Rational rhs) {
    row.resize(n, Rational(0));
    for (Rational& v : row) v.canonicalize();
    rhs.canonicalize();
    for (int j = 0; j < n; ++j) rhs -= row[j] * lower[j];
    sf.a.push_back(std::move(row));
    sf.rel.push_back(rel);
    sf.b.push_back(std::move(rhs));
  };
  for (size_t r = 0; r < lp.rows.size(); ++r) add(lp.rows[r], lp.relations[r], lp.rhs[r]);
  for (int j = 0; j < n && j < static_cast<int>(lp.upper.size()); ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rational> row(n, Rational(0));
    row[j] = 1;
    add(std::move(row), Relation::kLessEqual, *lp.upper[j]);
  }
  sf.sign.assign(sf.a.size(), 1);
  return sf;
}

class Simplex {
 public:
  explicit Simplex(StandardForm sf) : sf_(std::move(sf)) {
    const int m = static_cast<int>(sf_.a.size());
    const int n = static_cast<int>(sf_.c.size());
    // Normalized copy: negate rows with negative rhs.
    std::vector<Relation> rel = sf_.rel;
    for (int r = 0; r < m; ++r) {
      if (sf_.b[r] < 0) {
        sign_.push_back(-1);
        if (rel[r] == Relation::kLessEqual) {
          rel[r] = Relation::kGreaterEqual;
        } else if (rel[r] == Relation::kGreaterEqual) {
          rel[r] = Relation::kLessEqual;
        }
      } else {
        sign_.push_back(1);
      }
    }
    int cols = n;
    std::vector<int> slack(m, -1), art(m, -1);
    for (int r = 0; r < m; ++r) {
      if (rel[r] != Relation::kEqual) slack[r] = cols++;
    }
    first_artificial_ = cols;
    for (int r = 0; r < m; ++r) {
      if (rel[r] != Relation::kLessEqual) art[r] = cols++;
    }
    cols_ = cols;
    t_.assign(m, std::vector<Rational>(cols, Rational(0)));
    b_.resize(m);
    basis_.resize(m);
    identity_.resize(m);
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < n; ++j) {
        if (sf_.a[r][j] != 0) t_[r][j] = sign_[r] * sf_.a[r][j];
      }
      b_[r] = sign_[r] * sf_.b[r];
      if (slack[r] >= 0) t_[r][slack[r]] = rel[r] == Relation::kLessEqual ? 1 : -1;
      if (art[r] >= 0) t_[r][art[r]] = 1;
      basis_[r] = art[r] >= 0 ? art[r] : slack[r];
      identity_[r] = basis_[r];
    }
  }

  LpSolution Solve() {
    LpSolution out;
    const int n = static_cast<int>(sf_.c.size());
    if (first_artificial_ < cols_) {
      std::vector<Rational> phase1(cols_, Rational(0));
      for (int j = first_artificial_; j < cols_; ++j) phase1[j] = -1;
      Run(phase1, cols_, out.pivots);  // bounded by 0
      if (Objective(phase1) < 0) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
      DriveOutArtificials(out.pivots);
    }
    std::vector<Rational> cost(cols_, Rational(0));
    for (int j = 0; j < n; ++j) cost[j] = sf_.c[j];
    if (!Run(cost, first_artificial_, out.pivots)) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
    out.status = LpStatus::kOptimal;
    std::vector<Rational> x(n, Rational(0));
    for (size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < n) x[basis_[r]] = b_[r];
    }
    // y_r = c_B B^{-1} e_r, read off the columns that started as identity.
    std::vector<Rational> y(basis_.size(), Rational(0));
    for (size_t r = 0; r < basis_.size(); ++r) {
      Rational v = 0;
      for (size_t k = 0; k < basis_.size(); ++k) {
        if (cost[basis_[k]] != 0) v += cost[basis_[k]] * t_[k][identity_[r]];
      }
      y[r] = sign_[r] * v;
    }
    Certify(x, y);
    out.x = std::move(x);
    out.duals = std::move(y);
    out.value = Objective(cost) + sf_.offset;
    return out;
  }

  const StandardForm& form() const { return sf_; }

 private:
  Rational Objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (size_t r = 0; r < basis_.size(); ++r) v += cost[basis_[r]] * b_[r];
    return v;
  }

  void Pivot(int row, int col, std::vector<Rational>& z) {
    const Rational p = t_[row][col];
    for (int j = 0; j < cols_; ++j) {
      if (t_[row][j] != 0) t_[row][j] /= p;
    }
    b_[row] /= p;
    for (size_t k = 0; k < t_.size(); ++k) {
      if (static_cast<int>(k) == row || t_[k][col] == 0) continue;
      const Rational f = t_[k][col];
      for (int j = 0; j < cols_; ++j) {
        if (t_[row][j] != 0) t_[k][j] -= f * t_[row][j];
      }
      b_[k] -= f * b_[row];
    }
    if (!z.empty() && z[col] != 0) {
      const Rational f = z[col];
      for (int j = 0; j < cols_; ++j) {
        if (t_[row][j] != 0) z[j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  // Maximizes cost over the current basis, entering only columns below
  // `allowed`. Bland: smallest improving column, then smallest basic index
  // among tied ratios. False when unbounded.
  bool Run(const std::vector<Rational>& cost, int allowed, long& pivots) {
    std::vector<Rational> z(cost);
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Rational& cb = cost[basis_[k]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) {
        if (t_[k][j] != 0) z[j] -= cb * t_[k][j];
      }
    }
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (z[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = b_[r] / t_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter, z);
      ++pivots;
    }
  }

  void DriveOutArtificials(long& pivots) {
    std::vector<Rational> none;
    for (size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (t_[r][j] != 0) {
          Pivot(static_cast<int>(r), j, none);
          ++pivots;
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at 0.
    }
  }

  void Certify(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    const int n = static_cast<int>(x.size());
    Rational primal = 0, dual = 0;
    for (int j = 0; j < n; ++j) {
      if (x[j] < 0) throw InternalError("simplex certificate: negative variable");
      primal += sf_.c[j] * x[j];
    }
    std::vector<Rational> aty(n, Rational(0));
    for (size_t r = 0; r < sf_.a.size(); ++r) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) {
        if (sf_.a[r][j] == 0) continue;
        lhs += sf_.a[r][j] * x[j];
        aty[j] += sf_.a[r][j] * y[r];
      }
      const bool ok = sf_.rel[r] == Relation::kLessEqual    ? lhs <= sf_.b[r]
                      : sf_.rel[r] == Relation::kGreaterEqual ? lhs >= sf_.b[r]
                                                             : lhs == sf_.b[r];
      if (!ok) throw InternalError("simplex certificate: row " + std::to_string(r) + " violated");
      if ((sf_.rel[r] == Relation::kLessEqual && y[r] < 0) ||
          (sf_.rel[r] == Relation::kGreaterEqual && y[r] > 0)) {
        throw InternalError("simplex certificate: dual sign at row " + std::to_string(r));
      }
      dual += sf_.b[r] * y[r];
    }
    for (int j = 0; j < n; ++j) {
      if (aty[j] < sf_.c[j]) {
        throw InternalError("simplex certificate: reduced cost of column " + std::to_string(j));
      }
    }
    if (primal != dual) throw InternalError("simplex certificate: duality gap");
  }

  StandardForm sf_;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
  std::vector<int> identity_;
  int cols_ = 0;
  int first_artificial_ = 0;
};

}  // namespace

int LinearProgram::AddVariable(const Rational& cost) {
  for (auto& row : rows) row.emplace_back(0);
  objective.resize(num_vars, Rational(0));
  objective.push_back(cost);
  return num_vars++;
}

void LinearProgram::AddRow(std::vector<Rational> row, Relation relation, Rational value) {
  row.resize(num_vars, Rational(0));
  rows.push_back(std::move(row));
  relations.push_back(relation);
  rhs.push_back(std::move(value));
}

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution SolveLp(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) > lp.num_vars || lp.rows.size() != lp.relations.size() ||
      lp.rows.size() != lp.rhs.size()) {
    throw std::invalid_argument("inconsistent linear program dimensions");
  }
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.size()) > lp.num_vars) {
      throw std::invalid_argument("constraint row longer than the variable count");
    }
  }
  Simplex simplex(Standardize(lp));
  LpSolution out = simplex.Solve();
  if (out.status == LpStatus::kOptimal) {
    for (int j = 0; j < lp.num_vars; ++j) {
      if (j < static_cast<int>(lp.lower.size())) out.x[j] += lp.lower[j];
    }
    if (!lp.maximize) out.value = -out.value;
    out.duals.resize(lp.rows.size());
  }
  return out;
}

}  // namespace gtcorr
