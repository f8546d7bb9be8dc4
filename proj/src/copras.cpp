#include "ivff/copras.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ivff {

const char* to_string(CoprasScoreMode mode) {
  return mode == CoprasScoreMode::Normalized ? "normalized" : "raw";
}

Ivffn masked_index(const std::vector<Ivffn>& row, const WeightVector& weights,
                   const std::vector<bool>& mask) {
  if (row.size() != weights.size() || row.size() != mask.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "row, weights and mask lengths disagree");
  }
  std::vector<Ivffn> values;
  std::vector<double> w;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (mask[j]) {
      values.push_back(row[j]);
      w.push_back(weights[j]);
    }
  }
  if (values.empty()) {
    throw Error(ErrorKind::EmptyMask, "mask selects no criteria");
  }
  return ivffwa(values, w);
}

void validate_partition(const std::vector<bool>& benefit_mask,
                        const std::vector<bool>& cost_mask) {
  if (benefit_mask.size() != cost_mask.size()) {
    throw Error(ErrorKind::DimensionMismatch, "mask lengths disagree");
  }
  bool any_benefit = false;
  for (std::size_t j = 0; j < benefit_mask.size(); ++j) {
    if (benefit_mask[j] && cost_mask[j]) {
      throw Error(ErrorKind::OverlapError,
                  "criterion " + std::to_string(j) + " is in both masks");
    }
    if (!benefit_mask[j] && !cost_mask[j]) {
      throw Error(ErrorKind::IncompletePartition,
                  "criterion " + std::to_string(j) + " is in neither mask");
    }
    any_benefit |= benefit_mask[j];
  }
  if (!any_benefit) {
    throw Error(ErrorKind::NoBenefitCriteria, "no benefit criteria in partition");
  }
}

CoprasReport copras_rank(const DecisionProblem& problem, const WeightVector& weights,
                         CoprasScoreMode mode) {
  problem.validate();
  const std::size_t n = problem.criterion_count();
  if (weights.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "weight count disagrees with criterion count");
  }

  CoprasReport report;
  report.problem_name = problem.name;
  report.score_mode = mode;
  report.weights_used = weights;

  std::vector<bool> benefit_mask(n, false);
  std::vector<bool> cost_mask(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    switch (problem.criteria[j].kind) {
      case CriterionKind::Benefit:
        benefit_mask[j] = true;
        report.benefit_criteria.push_back(j);
        break;
      case CriterionKind::Cost:
        cost_mask[j] = true;
        report.cost_criteria.push_back(j);
        break;
      case CriterionKind::Unspecified:
        if (std::none_of(problem.criteria.begin(), problem.criteria.end(),
                         [](const Criterion& c) {
                           return c.kind != CriterionKind::Unspecified;
                         })) {
          throw Error(ErrorKind::NoBenefitCriteria,
                      "criteria carry no benefit/cost kinds");
        }
        throw Error(ErrorKind::IncompletePartition,
                    "criterion '" + problem.criteria[j].name + "' has no kind");
    }
  }
  if (report.benefit_criteria.empty()) {
    throw Error(ErrorKind::NoBenefitCriteria, "no criterion is marked benefit");
  }
  const bool has_costs = !report.cost_criteria.empty();

  const DecisionMatrix collective =
      collapse_dms(problem.matrices, problem.influence_weights(),
                   Aggregator::WeightedAveraging);

  const std::size_t m = problem.alternative_count();
  std::vector<CoprasEntry> entries(m);
  std::vector<double> benefit_score(m, 0.0);
  std::vector<double> cost_score(m, 0.0);
  std::vector<Ivffn> row(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = collective.at(i, j);
    entries[i].alternative = i;
    entries[i].name = problem.alternatives[i];
    entries[i].benefit_index = masked_index(row, weights, benefit_mask);
    const ScoreTriple bt = score_triple(entries[i].benefit_index);
    benefit_score[i] = mode == CoprasScoreMode::Normalized ? bt.normalized : bt.score;
    if (has_costs) {
      entries[i].cost_index = masked_index(row, weights, cost_mask);
      const ScoreTriple ct = score_triple(entries[i].cost_index);
      cost_score[i] = mode == CoprasScoreMode::Normalized ? ct.normalized : ct.score;
      if (cost_score[i] <= (mode == CoprasScoreMode::Raw ? 0.0 : kEps)) {
        throw Error(ErrorKind::ZeroCostScore,
                    "cost index score for '" + entries[i].name +
                        "' is not positive; the relative degree is undefined");
      }
    }
  }

  double cost_sum = 0.0;
  double inv_sum = 0.0;
  if (has_costs) {
    for (std::size_t i = 0; i < m; ++i) {
      cost_sum += cost_score[i];
      inv_sum += 1.0 / cost_score[i];
    }
  }
  double xi_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double xi = benefit_score[i];
    if (has_costs) xi += cost_sum / (cost_score[i] * inv_sum);
    entries[i].relative_degree = xi;
    xi_max = std::max(xi_max, xi);
  }
  if (!(xi_max > 0.0)) {
    throw Error(ErrorKind::ZeroCostScore,
                "maximal relative degree is not positive; utilities undefined");
  }
  for (auto& e : entries) e.utility = 100.0 * e.relative_degree / xi_max;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].utility > entries[b].utility;
  });
  for (std::size_t i : order) {
    report.ranking.push_back(
        RankEntry{i, entries[i].name, entries[i].utility});
  }
  report.entries = std::move(entries);
  return report;
}

}  // namespace ivff
