#pragma once

#include <vector>

#include "ivff/pipeline.hpp"

namespace ivff {

/// Which score feeds the relative-degree formula. Normalized scores keep the
/// harmonic cost term well-posed (raw scores can be zero or negative on cost
/// indices, which leaves the formula undefined).
enum class CoprasScoreMode { Normalized, Raw };

const char* to_string(CoprasScoreMode mode);

struct CoprasEntry {
  std::size_t alternative = 0;
  std::string name;
  Ivffn benefit_index;     // a_i
  Ivffn cost_index;        // b_i
  double relative_degree = 0.0;  // xi_i
  double utility = 0.0;          // U_i in [0, 100], max is exactly 100
};

struct CoprasReport {
  std::string problem_name;
  std::vector<std::size_t> benefit_criteria;  // indices into the criterion list
  std::vector<std::size_t> cost_criteria;
  CoprasScoreMode score_mode = CoprasScoreMode::Normalized;
  std::vector<CoprasEntry> entries;       // aligned with the alternatives
  std::vector<RankEntry> ranking;         // by utility, best first
  WeightVector weights_used;
};

/// Weighted-averaging index over the masked criteria of one alternative row.
/// Sub-weights are the given weights restricted to the mask, not
/// renormalized. Throws EmptyMask when the mask selects nothing.
Ivffn masked_index(const std::vector<Ivffn>& row, const WeightVector& weights,
                   const std::vector<bool>& mask);

/// Checks that the two masks are disjoint, exhaustive and each nonempty.
void validate_partition(const std::vector<bool>& benefit_mask,
                        const std::vector<bool>& cost_mask);

/// Proportional-assessment ranking: benefit indices reward strong benefit
/// columns, the harmonic cost term rewards weak cost columns; utilities are
/// rescaled so the best alternative scores 100.
///
/// An all-benefit problem skips the cost term (the formula's limit when all
/// cost indices agree is a constant shift, so dropping it preserves order).
CoprasReport copras_rank(const DecisionProblem& problem, const WeightVector& weights,
                         CoprasScoreMode mode = CoprasScoreMode::Normalized);

}  // namespace ivff
