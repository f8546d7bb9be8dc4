#include "ivff/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace ivff {

const char* to_string(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::Benefit: return "benefit";
    case CriterionKind::Cost: return "cost";
    case CriterionKind::Unspecified: return "unspecified";
  }
  return "unknown";
}

const char* to_string(DmWeightMode mode) {
  return mode == DmWeightMode::ClosedForm ? "eq13" : "lp";
}

std::vector<double> DecisionProblem::influence_weights() const {
  std::vector<double> out;
  out.reserve(dms.size());
  for (const auto& dm : dms) out.push_back(dm.influence);
  return out;
}

void DecisionProblem::validate() const {
  if (alternatives.empty() || criteria.empty() || dms.empty()) {
    throw Error(ErrorKind::EmptyProblem,
                "problem needs alternatives, criteria and decision makers");
  }
  if (alternatives.size() < 2) {
    throw Error(ErrorKind::ShapeMismatch, "need at least 2 alternatives");
  }
  if (matrices.size() != dms.size()) {
    throw Error(ErrorKind::ShapeMismatch,
                "expected one judgment matrix per decision maker");
  }
  for (const auto& m : matrices) {
    if (m.alternatives() != alternatives.size() || m.criteria() != criteria.size()) {
      throw Error(ErrorKind::ShapeMismatch,
                  "matrix '" + m.dm_id() + "' shape disagrees with the problem");
    }
  }
  double sum = 0.0;
  for (const auto& dm : dms) {
    if (!(dm.influence >= 0.0 && dm.influence <= 1.0)) {
      throw Error(ErrorKind::BadLambda,
                  "influence weight for '" + dm.name + "' outside [0, 1]");
    }
    sum += dm.influence;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw Error(ErrorKind::BadLambda,
                "influence weights sum to " + std::to_string(sum));
  }
}

DecisionProblem DecisionProblem::select_alternatives(
    const std::vector<std::size_t>& keep) const {
  DecisionProblem sub;
  sub.name = name;
  sub.criteria = criteria;
  sub.dms = dms;
  sub.warnings = warnings;
  for (std::size_t i : keep) sub.alternatives.push_back(alternatives.at(i));
  for (const auto& m : matrices) sub.matrices.push_back(m.select_alternatives(keep));
  return sub;
}

std::vector<std::size_t> rank_by_preference(
    const std::vector<PreferenceValue>& preferences) {
  std::vector<std::size_t> order(preferences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranks_before(preferences[a].value, preferences[b].value);
  });
  return order;
}

namespace {

WeightVector dm_weights_or_fallback(const DecisionMatrix& m, const RunOptions& opt,
                                    RankingReport& report) {
  try {
    return opt.dm_weight_mode == DmWeightMode::ClosedForm ? per_dm_weights(m)
                                                          : per_dm_weights_lp(m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AllColumnsConstant &&
        opt.on_degenerate == DegenerateWeights::Uniform) {
      report.degenerate_weights_fallback = true;
      report.warnings.push_back("matrix '" + m.dm_id() +
                                "' has constant columns only; uniform weights used");
      return WeightVector::uniform(m.criteria());
    }
    throw;
  }
}

}  // namespace

RankingReport run(const DecisionProblem& problem, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  problem.validate();

  RankingReport report;
  report.problem_name = problem.name;
  report.alternatives = problem.alternatives;
  report.options = options;
  report.warnings = problem.warnings;

  for (const auto& m : problem.matrices) {
    report.dm_weights.push_back(dm_weights_or_fallback(m, options, report));
  }

  const std::vector<double> influence = problem.influence_weights();
  GroupWeights group = group_weights(report.dm_weights, influence);
  report.group_weight_vector = std::move(group.weights);
  report.group_objective = group.objective;

  const DecisionMatrix collective =
      collapse_dms(problem.matrices, influence, options.collapse_op);
  report.preferences =
      preference_values(collective, report.group_weight_vector, options.prefer_op);

  for (std::size_t i : rank_by_preference(report.preferences)) {
    report.ranking.push_back(RankEntry{
        i, problem.alternatives[i], report.preferences[i].scores.normalized});
  }

  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace ivff
