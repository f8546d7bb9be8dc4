#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivff/aggregate.hpp"
#include "ivff/problem.hpp"
#include "ivff/weights.hpp"

namespace ivff {

enum class DmWeightMode {
  ClosedForm,  // deviation closed form, normalized to sum 1 ("eq13")
  Vertex,      // simplex-constrained LP vertex, ties split uniformly ("lp")
};

const char* to_string(DmWeightMode mode);

/// What to do when every criterion column is constant and deviation weights
/// are undefined.
enum class DegenerateWeights { Error, Uniform };

struct RunOptions {
  DmWeightMode dm_weight_mode = DmWeightMode::ClosedForm;
  Aggregator collapse_op = Aggregator::WeightedAveraging;
  Aggregator prefer_op = Aggregator::WeightedGeometric;
  DegenerateWeights on_degenerate = DegenerateWeights::Error;
};

/// One ranked alternative.
struct RankEntry {
  std::size_t alternative = 0;  // index into the problem's alternative list
  std::string name;
  double normalized_score = 0.0;
};

/// Everything the run produced, intermediates included.
struct RankingReport {
  std::string problem_name;
  std::vector<std::string> alternatives;
  std::vector<WeightVector> dm_weights;      // one per decision maker
  WeightVector group_weight_vector;
  double group_objective = 0.0;              // optimal LP disagreement
  std::vector<PreferenceValue> preferences;  // aligned with `alternatives`
  std::vector<RankEntry> ranking;            // best first
  // provenance
  RunOptions options;
  std::vector<std::string> warnings;
  bool degenerate_weights_fallback = false;
  std::int64_t elapsed_us = 0;  // human rendering only; never serialized
};

/// End-to-end deviation-based group decision procedure: per-DM weights,
/// group weights, collective matrix, preference values, ranking.
RankingReport run(const DecisionProblem& problem, const RunOptions& options = {});

/// Ordering helper shared by rankers: sorts indices by the comparison of
/// their preference values (ties fall back to the declared order).
std::vector<std::size_t> rank_by_preference(
    const std::vector<PreferenceValue>& preferences);

}  // namespace ivff
