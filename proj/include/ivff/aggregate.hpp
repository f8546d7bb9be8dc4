#pragma once

#include <span>
#include <vector>

#include "ivff/matrix.hpp"

namespace ivff {

enum class Aggregator { WeightedAveraging, WeightedGeometric };

const char* to_string(Aggregator op);

/// Weighted averaging operator: membership bounds
/// (1 - prod (1 - m^3)^w)^(1/3), non-membership bounds prod n^w.
/// 0^0 is taken as 1, so zero-weight entries never influence the result.
Ivffn ivffwa(std::span<const Ivffn> values, std::span<const double> weights);

/// Weighted geometric operator, the dual form of ivffwa.
Ivffn ivffwg(std::span<const Ivffn> values, std::span<const double> weights);

Ivffn aggregate(Aggregator op, std::span<const Ivffn> values,
                std::span<const double> weights);

/// Cellwise collapse of one matrix per decision maker into a collective
/// matrix, weighting decision makers by their influence.
DecisionMatrix collapse_dms(const std::vector<DecisionMatrix>& matrices,
                            const std::vector<double>& influence,
                            Aggregator op = Aggregator::WeightedAveraging);

/// Per-alternative aggregate of a criteria row plus its scores.
struct PreferenceValue {
  Ivffn value;
  ScoreTriple scores;
};

std::vector<PreferenceValue> preference_values(const DecisionMatrix& collective,
                                               const WeightVector& weights,
                                               Aggregator op);

}  // namespace ivff
