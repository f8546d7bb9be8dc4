#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivff/copras.hpp"

namespace ivff {

enum class Ranker { DeviationPipeline, Copras };
const char* to_string(Ranker ranker);

/// Scenario removal policy. Cumulative drops the first k alternatives in
/// declared order (scenario k has survivors k..m-1); single drops exactly one.
enum class RemovalMode { Cumulative, Single };
const char* to_string(RemovalMode mode);

struct Scenario {
  std::string description;
  std::vector<std::size_t> removed;   // alternative indices
  std::vector<RankEntry> ranking;     // over the survivors
};

struct LeaveOneOutReport {
  std::vector<RankEntry> base_ranking;
  std::vector<Scenario> scenarios;
  /// true when some pair of survivors flips order versus the base ranking.
  bool rank_reversal_found = false;
};

struct PerturbationReport {
  double pct = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<RankEntry> base_ranking;
  double top_choice_preserved = 0.0;   // fraction of trials
  double full_order_preserved = 0.0;   // fraction of trials
};

struct RobustnessOptions {
  Ranker ranker = Ranker::DeviationPipeline;
  RemovalMode removal = RemovalMode::Cumulative;
  RunOptions pipeline;              // degenerate fallback forced to Uniform
  CoprasScoreMode copras_score = CoprasScoreMode::Normalized;
};

/// Removes alternatives scenario by scenario and re-runs the full ranking
/// chain (weights re-derived from the surviving judgments each time).
LeaveOneOutReport leave_one_out(const DecisionProblem& problem,
                                const RobustnessOptions& options = {});

/// Multiplies each group weight by an independent factor drawn uniformly
/// from [1-pct, 1+pct] (deterministic generator), renormalizes, re-ranks.
PerturbationReport perturb_weights(const DecisionProblem& problem, double pct,
                                   std::size_t trials, std::uint64_t seed,
                                   const RobustnessOptions& options = {});

}  // namespace ivff
