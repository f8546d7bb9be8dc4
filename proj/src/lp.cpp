#include "ivff/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ivff {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-9;

// Dense simplex tableau over the variables of the phase at hand.
// basis_[i] holds the variable occupying row i.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<double>(cols, 0.0)), b_(rows, 0.0),
        basis_(rows, 0), rows_(rows), cols_(cols) {}

  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = a_[pr][pc];
    for (std::size_t j = 0; j < cols_; ++j) a_[pr][j] /= p;
    b_[pr] /= p;
    a_[pr][pc] = 1.0;  // cancel roundoff on the pivot itself
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      const double f = a_[i][pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) a_[i][j] -= f * a_[pr][j];
      a_[i][pc] = 0.0;
      b_[i] -= f * b_[pr];
    }
    basis_[pr] = pc;
  }

  // Reduced costs for cost vector c over the current basis.
  std::vector<double> reduced_costs(const std::vector<double>& c) const {
    std::vector<double> r(c);
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) r[j] -= cb * a_[i][j];
    }
    return r;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
};

// Runs Bland-rule simplex iterations until optimal or unbounded.
// `restrict_cols` bounds the columns eligible to enter (used in phase 2 to
// keep artificials out). Returns false when unbounded, with the offending
// entering column in `unbounded_col`.
bool iterate(Tableau& t, const std::vector<double>& c, std::size_t restrict_cols,
             std::size_t& unbounded_col) {
  const std::size_t max_iters = 200000;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    const std::vector<double> r = t.reduced_costs(c);
    std::size_t enter = restrict_cols;
    for (std::size_t j = 0; j < restrict_cols; ++j) {
      if (r[j] < -kPivotTol) { enter = j; break; }  // Bland: lowest index
    }
    if (enter == restrict_cols) return true;  // optimal

    // Ratio test; Bland tie-break on the smallest basis variable index.
    std::size_t leave_row = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double aie = t.a_[i][enter];
      if (aie > kPivotTol) {
        const double ratio = t.b_[i] / aie;
        if (ratio < best_ratio - kPivotTol ||
            (std::abs(ratio - best_ratio) <= kPivotTol &&
             (leave_row == t.rows() || t.basis_[i] < t.basis_[leave_row]))) {
          best_ratio = ratio;
          leave_row = i;
        }
      }
    }
    if (leave_row == t.rows()) {
      unbounded_col = enter;
      return false;
    }
    t.pivot(leave_row, enter);
  }
  throw Error(ErrorKind::Internal, "simplex iteration limit exceeded");
}

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  const std::size_t n = problem.num_vars;
  const std::size_t m = problem.rows.size();
  if (problem.objective.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "objective length " + std::to_string(problem.objective.size()) +
                    " != num_vars " + std::to_string(n));
  }
  if (problem.rhs.size() != m) {
    throw Error(ErrorKind::DimensionMismatch,
                "rhs length " + std::to_string(problem.rhs.size()) +
                    " != row count " + std::to_string(m));
  }
  for (const auto& row : problem.rows) {
    if (row.size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "constraint row length " + std::to_string(row.size()) +
                      " != num_vars " + std::to_string(n));
    }
  }

  // Phase 1 tableau: original variables plus one artificial per row.
  Tableau t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = problem.rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.a_[i][j] = sign * problem.rows[i][j];
    t.b_[i] = sign * problem.rhs[i];
    t.a_[i][n + i] = 1.0;
    t.basis_[i] = n + i;
  }

  std::vector<double> phase1_cost(n + m, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1.0;

  std::size_t unbounded_col = 0;
  if (!iterate(t, phase1_cost, n + m, unbounded_col)) {
    throw Error(ErrorKind::Internal, "phase-1 objective unbounded");
  }
  double infeas = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis_[i] >= n) infeas += t.b_[i];
  }
  LpSolution sol;
  if (infeas > 1e-8) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive surviving artificials out of the basis; a row with no eligible
  // pivot column is redundant and can stay (its rhs is ~0 and its artificial
  // is blocked from re-entering below).
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis_[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.a_[i][j]) > kPivotTol) {
        t.pivot(i, j);
        break;
      }
    }
  }

  std::vector<double> phase2_cost(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2_cost[j] = problem.objective[j];

  if (!iterate(t, phase2_cost, n, unbounded_col)) {
    sol.status = LpStatus::Unbounded;
    // Ray along the entering column: unit step on it, compensating moves on
    // the basics; Ad = 0, d >= 0, objective . d < 0 by construction.
    sol.ray.assign(n, 0.0);
    sol.ray[unbounded_col] = 1.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.basis_[i] < n) sol.ray[t.basis_[i]] = -t.a_[i][unbounded_col];
    }
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (t.basis_[i] < n) sol.x[t.basis_[i]] = t.b_[i];
    }
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis_[i] < n) sol.x[t.basis_[i]] = std::max(0.0, t.b_[i]);
  }
  sol.objective_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sol.objective_value += problem.objective[j] * sol.x[j];
  }
  const std::vector<double> r = t.reduced_costs(phase2_cost);
  sol.reduced_costs.assign(r.begin(), r.begin() + static_cast<long>(n));
  return sol;
}

}  // namespace ivff
