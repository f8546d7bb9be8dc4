#pragma once

#include <cstddef>
#include <vector>

#include "ivff/errors.hpp"

namespace ivff {

/// Equality-form linear program: minimize objective . x subject to
/// rows[i] . x = rhs[i] and x >= 0. Callers add their own slack variables.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;            // length num_vars
  std::vector<std::vector<double>> rows;    // each length num_vars
  std::vector<double> rhs;                  // length rows.size()
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;               // length num_vars when Optimal
  double objective_value = 0.0;        // objective . x when Optimal
  std::vector<double> reduced_costs;   // optimality certificate when Optimal
  /// When Unbounded: a feasible point and a ray with rows . ray = 0,
  /// ray >= 0, objective . ray < 0.
  std::vector<double> ray;
};

const char* to_string(LpStatus status);

/// Two-phase primal simplex with Bland's anti-cycling rule and pivot
/// tolerance 1e-9. Deterministic: identical inputs give identical solutions.
LpSolution lp_solve(const LpProblem& problem);

}  // namespace ivff
