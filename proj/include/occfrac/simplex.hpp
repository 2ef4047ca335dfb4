// Copyright 2026 The occfrac Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occfrac/errors.hpp"
#include "occfrac/rational.hpp"

namespace occfrac {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

enum class Sense { kMaximize, kMinimize };

/// optimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  RationalVector objective;
  RationalMatrix rows;
  RationalVector rhs;
  Sense sense = Sense::kMaximize;

  std::size_t column_count() const { return objective.size(); }
  std::size_t row_count() const { return rows.size(); }

  void validate() const {
    if (rhs.size() != rows.size()) {
      throw StructuralError("rhs has " + std::to_string(rhs.size()) + " entries for " +
                            std::to_string(rows.size()) + " rows");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != objective.size()) {
        throw StructuralError("row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(objective.size()));
      }
    }
  }
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

/// When optimal: rows.primal = rhs, primal >= 0, objective.primal = dual.rhs,
/// and the dual prices satisfy every reduced-cost sign condition.
struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  Rational value;
  RationalVector primal;
  std::vector<std::size_t> basis;  // basic columns, in row order of the final tableau
  RationalVector dual;             // one per constraint row; redundant rows get 0
};

/// Solves a square system exactly; nullopt if the matrix is singular.
inline std::optional<RationalVector> solve_square_system(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw StructuralError("system size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw StructuralError("matrix is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace detail {

// Dense two-phase tableau simplex with Bland's rule.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const RationalVector& max_objective)
      : n_(lp.column_count()), c_(max_objective) {
    const std::size_t m = lp.row_count();
    t_.assign(m, RationalVector(n_ + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = lp.rhs[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      t_[i][n_ + i] = Rational(1);
      t_[i][rhs_col()] = flip ? -lp.rhs[i] : lp.rhs[i];
      basis_.push_back(n_ + i);
      row_origin_.push_back(i);
    }
  }

  LPStatus run() {
    // Phase 1: maximize -(sum of artificials).
    RationalVector phase1(n_ + t_.size());
    for (std::size_t i = 0; i < t_.size(); ++i) phase1[n_ + i] = Rational(-1);
    iterate(phase1, n_ + t_.size());
    Rational infeasibility;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] >= n_) infeasibility += t_[i][rhs_col()];
    if (infeasibility.sign() > 0) return LPStatus::kInfeasible;
    drive_out_artificials();
    // Phase 2 over structural columns only.
    return iterate(c_, n_) ? LPStatus::kOptimal : LPStatus::kUnbounded;
  }

  RationalVector primal() const {
    RationalVector x(n_);
    for (std::size_t i = 0; i < t_.size(); ++i) x[basis_[i]] = t_[i][rhs_col()];
    return x;
  }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<std::size_t>& row_origin() const { return row_origin_; }

 private:
  std::size_t rhs_col() const { return t_.empty() ? 0 : t_[0].size() - 1; }

  Rational cost(const RationalVector& obj, std::size_t j) const {
    return j < obj.size() ? obj[j] : Rational(0);
  }

  // Returns false if unbounded.
  bool iterate(const RationalVector& obj, std::size_t allowed_columns) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_columns && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost(obj, j);
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (!t_[i][j].is_zero()) reduced -= cost(obj, basis_[i]) * t_[i][j];
        }
        if (reduced.sign() > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t j = *entering;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][j].sign() <= 0) continue;
        const Rational ratio = t_[i][rhs_col()] / t_[i][j];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, j);
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = t_[r][col];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][col].is_zero()) continue;
      const Rational f = t_[i][col];
      for (std::size_t k = 0; k < t_[i].size(); ++k) {
        if (!t_[r][k].is_zero()) t_[i][k] -= f * t_[r][k];
      }
    }
    basis_[r] = col;
  }

  // Artificials left in the basis sit at level zero. Pivot each onto any
  // structural column with a nonzero entry; rows with none are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_ && !col; ++j)
        if (!t_[i][j].is_zero() && !is_basic(j)) col = j;
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        row_origin_.erase(row_origin_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  RationalVector c_;
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_origin_;  // original row index of each tableau row
};

}  // namespace detail

/// Exact two-phase simplex (Bland's rule throughout).
inline LPSolution solve(const LinearProgram& lp) {
  lp.validate();
  const bool minimize = lp.sense == Sense::kMinimize;
  RationalVector c = lp.objective;
  if (minimize)
    for (auto& v : c) v = -v;

  detail::Tableau tab(lp, c);
  LPSolution sol;
  sol.status = tab.run();
  if (sol.status != LPStatus::kOptimal) return sol;

  sol.primal = tab.primal();
  sol.basis = tab.basis();
  for (std::size_t j = 0; j < lp.column_count(); ++j) sol.value += lp.objective[j] * sol.primal[j];

  // Dual prices from B^T y = c_B over the non-redundant rows.
  const auto& origin = tab.row_origin();
  const std::size_t m = origin.size();
  RationalMatrix bt(m, RationalVector(m));
  RationalVector cb(m);
  for (std::size_t i = 0; i < m; ++i) {
    cb[i] = c[sol.basis[i]];
    for (std::size_t r = 0; r < m; ++r) bt[i][r] = lp.rows[origin[r]][sol.basis[i]];
  }
  auto y = solve_square_system(std::move(bt), std::move(cb));
  if (!y) throw StructuralError("optimal basis is singular");
  sol.dual.assign(lp.row_count(), Rational(0));
  for (std::size_t r = 0; r < m; ++r) sol.dual[origin[r]] = minimize ? -(*y)[r] : (*y)[r];
  return sol;
}

/// Per-column dual slack. For maximization slack_j = (y^T A - c)_j, for
/// minimization slack_j = (c - y^T A)_j; dual-feasible iff all slack >= 0.
struct DualSlackReport {
  RationalVector slack;
  std::vector<bool> tight;
  bool feasible = true;
  Rational dual_objective;  // y . b
};

inline DualSlackReport check_dual_feasible(const LinearProgram& lp, const RationalVector& dual) {
  lp.validate();
  if (dual.size() != lp.row_count()) {
    throw StructuralError("dual has " + std::to_string(dual.size()) + " entries for " +
                          std::to_string(lp.row_count()) + " rows");
  }
  DualSlackReport rep;
  for (std::size_t j = 0; j < lp.column_count(); ++j) {
    Rational yta;
    for (std::size_t r = 0; r < lp.row_count(); ++r) yta += dual[r] * lp.rows[r][j];
    Rational s = lp.sense == Sense::kMaximize ? yta - lp.objective[j] : lp.objective[j] - yta;
    rep.tight.push_back(s.is_zero());
    if (s.sign() < 0) rep.feasible = false;
    rep.slack.push_back(std::move(s));
  }
  for (std::size_t r = 0; r < lp.row_count(); ++r) rep.dual_objective += dual[r] * lp.rhs[r];
  return rep;
}

}  // namespace occfrac
