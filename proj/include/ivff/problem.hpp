#pragma once

#include <string>
#include <vector>

#include "ivff/matrix.hpp"

namespace ivff {

enum class CriterionKind { Benefit, Cost, Unspecified };

const char* to_string(CriterionKind kind);

struct Criterion {
  std::string name;
  CriterionKind kind = CriterionKind::Unspecified;
};

struct DecisionMaker {
  std::string name;
  double influence = 0.0;  // lambda_k, nonnegative, summing to 1 over DMs
};

/// A complete group decision problem with resolved judgment values.
struct DecisionProblem {
  std::string name;
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  std::vector<DecisionMaker> dms;
  std::vector<DecisionMatrix> matrices;  // one per decision maker, same order
  std::vector<std::string> warnings;     // parse-time notes (label repairs etc.)

  std::size_t alternative_count() const { return alternatives.size(); }
  std::size_t criterion_count() const { return criteria.size(); }
  std::size_t dm_count() const { return dms.size(); }

  std::vector<double> influence_weights() const;

  /// Shape and influence-weight invariants; throws on violation.
  void validate() const;

  /// Subproblem with only the listed alternatives (indices into
  /// `alternatives`, kept in the given order).
  DecisionProblem select_alternatives(const std::vector<std::size_t>& keep) const;
};

}  // namespace ivff
