#include "ivff/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ivff {

DecisionMatrix DecisionMatrix::make(std::string dm_id, std::size_t alternatives,
                                    std::size_t criteria,
                                    std::vector<Ivffn> cells) {
  if (alternatives < 2 || criteria < 1) {
    throw Error(ErrorKind::ShapeMismatch,
                "decision matrix needs >= 2 alternatives and >= 1 criterion, got " +
                    std::to_string(alternatives) + "x" + std::to_string(criteria));
  }
  if (cells.size() != alternatives * criteria) {
    throw Error(ErrorKind::ShapeMismatch,
                "cell count " + std::to_string(cells.size()) + " != " +
                    std::to_string(alternatives) + "x" + std::to_string(criteria));
  }
  DecisionMatrix m;
  m.dm_id_ = std::move(dm_id);
  m.alternatives_ = alternatives;
  m.criteria_ = criteria;
  m.cells_ = std::move(cells);
  return m;
}

DecisionMatrix DecisionMatrix::select_alternatives(
    const std::vector<std::size_t>& keep) const {
  std::vector<Ivffn> cells;
  cells.reserve(keep.size() * criteria_);
  for (std::size_t i : keep) {
    for (std::size_t j = 0; j < criteria_; ++j) cells.push_back(at(i, j));
  }
  return make(dm_id_, keep.size(), criteria_, std::move(cells));
}

WeightVector WeightVector::make(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= -kEps)) {
      throw Error(ErrorKind::OutOfRange,
                  "negative weight " + std::to_string(w));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kEps) {
    throw Error(ErrorKind::OutOfRange,
                "weights sum to " + std::to_string(sum) + ", expected 1");
  }
  WeightVector v;
  v.w_ = std::move(weights);
  for (double& w : v.w_) {
    if (w < 0.0) w = 0.0;
  }
  return v;
}

WeightVector WeightVector::uniform(std::size_t n) {
  return make(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DeviationTable deviation_table(const DecisionMatrix& m) {
  DeviationTable table;
  table.total.assign(m.criteria(), 0.0);
  for (std::size_t j = 0; j < m.criteria(); ++j) {
    double d = 0.0;
    // Both ordered pairs count; distance is symmetric so sum the upper
    // triangle twice.
    for (std::size_t a = 0; a < m.alternatives(); ++a) {
      for (std::size_t b = a + 1; b < m.alternatives(); ++b) {
        d += 2.0 * distance(m.at(a, j), m.at(b, j));
      }
    }
    table.total[j] = d;
  }
  return table;
}

WeightVector weights_from_deviations(const std::vector<double>& deviations) {
  double sum_sqrt = 0.0;
  for (double d : deviations) {
    if (d < 0.0) {
      throw Error(ErrorKind::OutOfRange, "negative deviation");
    }
    sum_sqrt += std::sqrt(d);
  }
  if (sum_sqrt <= kEps) {
    throw Error(ErrorKind::AllColumnsConstant,
                "every criterion column is constant; weights are undefined");
  }
  std::vector<double> w(deviations.size());
  for (std::size_t j = 0; j < deviations.size(); ++j) {
    w[j] = std::sqrt(deviations[j]) / sum_sqrt;
  }
  return WeightVector::make(std::move(w));
}

WeightVector per_dm_weights(const DecisionMatrix& m) {
  return weights_from_deviations(deviation_table(m).total);
}

WeightVector per_dm_weights_lp(const DecisionMatrix& m) {
  const DeviationTable table = deviation_table(m);
  const std::size_t n = table.total.size();

  double dmax = 0.0;
  for (double d : table.total) dmax = std::max(dmax, d);
  if (dmax <= kEps) {
    throw Error(ErrorKind::AllColumnsConstant,
                "every criterion column is constant; weights are undefined");
  }

  // maximize D . w over the simplex == minimize -D . w with one equality row.
  LpProblem lp;
  lp.num_vars = n;
  lp.objective.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = -table.total[j];
  lp.rows.push_back(std::vector<double>(n, 1.0));
  lp.rhs.push_back(1.0);
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw Error(ErrorKind::InfeasibleLp,
                std::string("simplex returned ") + to_string(sol.status) +
                    " on the simplex-constrained weight program");
  }

  // Ties among maximal deviations are split uniformly.
  std::vector<double> w(n, 0.0);
  const double tie_tol = 1e-9 * std::max(1.0, dmax);
  std::size_t tied = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (table.total[j] >= dmax - tie_tol) ++tied;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (table.total[j] >= dmax - tie_tol) w[j] = 1.0 / static_cast<double>(tied);
  }
  return WeightVector::make(std::move(w));
}

GroupWeights group_weights(const std::vector<WeightVector>& per_dm,
                           const std::vector<double>& alpha) {
  const std::size_t g = per_dm.size();
  if (g == 0 || alpha.size() != g) {
    throw Error(ErrorKind::DimensionMismatch,
                "need one influence weight per decision maker");
  }
  const std::size_t n = per_dm[0].size();
  for (const auto& w : per_dm) {
    if (w.size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "per-DM weight vectors disagree on criterion count");
    }
  }
  double asum = 0.0;
  for (double a : alpha) {
    if (!(a >= -kEps)) {
      throw Error(ErrorKind::OutOfRange, "negative influence weight");
    }
    asum += a;
  }
  if (std::abs(asum - 1.0) > 1e-6) {
    throw Error(ErrorKind::OutOfRange,
                "influence weights sum to " + std::to_string(asum));
  }

  // Variables: group weights (n), then the positive/negative deviation
  // splits, one pair per (dm, criterion), dm-major.
  const std::size_t nv = n + 2 * n * g;
  const std::size_t phi0 = n;
  const std::size_t psi0 = n + n * g;

  LpProblem lp;
  lp.num_vars = nv;
  lp.objective.assign(nv, 0.0);
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      lp.objective[phi0 + k * n + j] = alpha[k];
      lp.objective[psi0 + k * n + j] = alpha[k];
    }
  }
  // w_j^k - w_j* - phi_jk + psi_jk = 0, rearranged to put the constant on
  // the right-hand side.
  for (std::size_t k = 0; k < g; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> row(nv, 0.0);
      row[j] = -1.0;
      row[phi0 + k * n + j] = -1.0;
      row[psi0 + k * n + j] = 1.0;
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(-per_dm[k][j]);
    }
  }
  {
    std::vector<double> row(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1.0);
  }

  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw Error(ErrorKind::InfeasibleLp,
                std::string("group-weight program returned ") + to_string(sol.status));
  }

  std::vector<double> w(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
  // The simplex meets the unit-sum row to ~1e-12; rescale so the
  // WeightVector invariant holds bit-for-bit downstream.
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= sum;
  GroupWeights out;
  out.weights = WeightVector::make(std::move(w));
  out.objective = sol.objective_value;
  return out;
}

}  // namespace ivff
