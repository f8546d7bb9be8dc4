#include "ivff/aggregate.hpp"

#include <cmath>
#include <string>

namespace ivff {

const char* to_string(Aggregator op) {
  return op == Aggregator::WeightedAveraging ? "wa" : "wg";
}

namespace {

void check_lengths(std::size_t values, std::size_t weights) {
  if (values == 0 || values != weights) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(values) + " values vs " + std::to_string(weights) +
                    " weights");
  }
}

// prod over i of base_i^w_i with 0^0 == 1 (std::pow already guarantees it).
struct WeightedProducts {
  double mem_lo = 1.0, mem_hi = 1.0, non_lo = 1.0, non_hi = 1.0;
};

}  // namespace

Ivffn ivffwa(std::span<const Ivffn> values, std::span<const double> weights) {
  check_lengths(values.size(), weights.size());
  WeightedProducts p;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weights[i];
    p.mem_lo *= std::pow(1.0 - cube(values[i].mem_lo()), w);
    p.mem_hi *= std::pow(1.0 - cube(values[i].mem_hi()), w);
    p.non_lo *= std::pow(values[i].non_lo(), w);
    p.non_hi *= std::pow(values[i].non_hi(), w);
  }
  return Ivffn::from_parts(
      {cbrt_clamped(1.0 - p.mem_lo), cbrt_clamped(1.0 - p.mem_hi)},
      {p.non_lo, p.non_hi});
}

Ivffn ivffwg(std::span<const Ivffn> values, std::span<const double> weights) {
  check_lengths(values.size(), weights.size());
  WeightedProducts p;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double w = weights[i];
    p.mem_lo *= std::pow(values[i].mem_lo(), w);
    p.mem_hi *= std::pow(values[i].mem_hi(), w);
    p.non_lo *= std::pow(1.0 - cube(values[i].non_lo()), w);
    p.non_hi *= std::pow(1.0 - cube(values[i].non_hi()), w);
  }
  return Ivffn::from_parts(
      {p.mem_lo, p.mem_hi},
      {cbrt_clamped(1.0 - p.non_lo), cbrt_clamped(1.0 - p.non_hi)});
}

Ivffn aggregate(Aggregator op, std::span<const Ivffn> values,
                std::span<const double> weights) {
  return op == Aggregator::WeightedAveraging ? ivffwa(values, weights)
                                             : ivffwg(values, weights);
}

DecisionMatrix collapse_dms(const std::vector<DecisionMatrix>& matrices,
                            const std::vector<double>& influence,
                            Aggregator op) {
  if (matrices.empty() || matrices.size() != influence.size()) {
    throw Error(ErrorKind::ShapeMismatch,
                "need one influence weight per decision matrix");
  }
  const std::size_t m = matrices[0].alternatives();
  const std::size_t n = matrices[0].criteria();
  for (const auto& mat : matrices) {
    if (mat.alternatives() != m || mat.criteria() != n) {
      throw Error(ErrorKind::ShapeMismatch,
                  "decision matrices disagree on shape");
    }
  }
  std::vector<Ivffn> cells;
  cells.reserve(m * n);
  std::vector<Ivffn> column(matrices.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < matrices.size(); ++k) {
        column[k] = matrices[k].at(i, j);
      }
      cells.push_back(aggregate(op, column, influence));
    }
  }
  return DecisionMatrix::make("collective", m, n, std::move(cells));
}

std::vector<PreferenceValue> preference_values(const DecisionMatrix& collective,
                                               const WeightVector& weights,
                                               Aggregator op) {
  if (weights.size() != collective.criteria()) {
    throw Error(ErrorKind::ShapeMismatch,
                "weight count " + std::to_string(weights.size()) +
                    " != criterion count " + std::to_string(collective.criteria()));
  }
  std::vector<PreferenceValue> out;
  out.reserve(collective.alternatives());
  std::vector<Ivffn> row(collective.criteria());
  for (std::size_t i = 0; i < collective.alternatives(); ++i) {
    for (std::size_t j = 0; j < collective.criteria(); ++j) {
      row[j] = collective.at(i, j);
    }
    PreferenceValue pv;
    pv.value = aggregate(op, row, weights.values());
    pv.scores = score_triple(pv.value);
    out.push_back(pv);
  }
  return out;
}

}  // namespace ivff
