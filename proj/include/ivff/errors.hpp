#pragma once

#include <stdexcept>
#include <string>

namespace ivff {

/// Every failure the library reports deliberately. Kinds map to the CLI's
/// exit codes: data errors exit 2, internal errors exit 3.
enum class ErrorKind {
  // value construction
  OutOfRange,
  IntervalOrder,
  CubicConstraint,
  NegativeScalar,
  // scale / parsing
  UnknownLabel,
  SyntaxError,
  ShapeMismatch,
  BadLambda,
  EmptyProblem,
  // weighting
  AllColumnsConstant,
  DimensionMismatch,
  // lp
  InfeasibleLp,
  // copras
  NoBenefitCriteria,
  ZeroCostScore,
  EmptyMask,
  OverlapError,
  IncompletePartition,
  // robustness
  TooFewAlternatives,
  BadPercentage,
  // catch-all for bugs
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }

  /// The message without the kind prefix, for rethrowing with context.
  const std::string& message() const { return message_; }

  /// Data errors stem from user input; internal errors indicate a bug.
  bool is_internal() const {
    return kind_ == ErrorKind::Internal || kind_ == ErrorKind::InfeasibleLp;
  }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace ivff
