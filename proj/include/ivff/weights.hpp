#pragma once

#include <vector>

#include "ivff/lp.hpp"
#include "ivff/matrix.hpp"

namespace ivff {

/// Per-criterion total deviation D_j: the sum of pairwise distances between
/// all ordered pairs of alternatives within column j.
struct DeviationTable {
  std::vector<double> total;  // one entry per criterion, >= 0
};

DeviationTable deviation_table(const DecisionMatrix& m);

/// Closed-form weights from a deviation table: the maximizer of
/// sum_j w_j D_j over the surface sum_j w_j^3 = 1 (w_j proportional to
/// sqrt(D_j)), then normalized to sum 1. Exposed separately so callers can
/// check invariance under rescaling of the distance.
WeightVector weights_from_deviations(const std::vector<double>& deviations);

/// weights_from_deviations applied to deviation_table(m).
/// Throws AllColumnsConstant when every column is constant.
WeightVector per_dm_weights(const DecisionMatrix& m);

/// Degenerate linear-program variant: maximize sum_j w_j D_j over the
/// simplex. The optimum is a vertex concentrating all weight on the largest
/// deviation; exact ties are split uniformly afterwards.
WeightVector per_dm_weights_lp(const DecisionMatrix& m);

struct GroupWeights {
  WeightVector weights;
  double objective = 0.0;  // minimized weighted L1 disagreement
};

/// Consistency-minimizing group weights: minimize
/// sum_j sum_k alpha_k |w_j^k - w_j*| over the simplex, linearized with a
/// nonnegative split pair per (k, j) and solved by the LP engine.
GroupWeights group_weights(const std::vector<WeightVector>& per_dm,
                           const std::vector<double>& alpha);

}  // namespace ivff
