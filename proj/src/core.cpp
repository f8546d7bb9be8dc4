#include "ivff/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace ivff {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IntervalOrder: return "IntervalOrder";
    case ErrorKind::CubicConstraint: return "CubicConstraint";
    case ErrorKind::NegativeScalar: return "NegativeScalar";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::EmptyProblem: return "EmptyProblem";
    case ErrorKind::AllColumnsConstant: return "AllColumnsConstant";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InfeasibleLp: return "InfeasibleLp";
    case ErrorKind::NoBenefitCriteria: return "NoBenefitCriteria";
    case ErrorKind::ZeroCostScore: return "ZeroCostScore";
    case ErrorKind::EmptyMask: return "EmptyMask";
    case ErrorKind::OverlapError: return "OverlapError";
    case ErrorKind::IncompletePartition: return "IncompletePartition";
    case ErrorKind::TooFewAlternatives: return "TooFewAlternatives";
    case ErrorKind::BadPercentage: return "BadPercentage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

double cbrt_clamped(double radicand) {
  if (radicand < 0.0) {
    if (radicand < -kEps) {
      throw Error(ErrorKind::Internal,
                  "cube-root radicand below tolerance: " + std::to_string(radicand));
    }
    return 0.0;
  }
  return std::cbrt(radicand);
}

namespace {

double clamp01(double x) {
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

}  // namespace

Ivffn Ivffn::make(double mem_lo, double mem_hi, double non_lo, double non_hi) {
  const double grades[4] = {mem_lo, mem_hi, non_lo, non_hi};
  for (double g : grades) {
    if (!std::isfinite(g) || g < -kEps || g > 1.0 + kEps) {
      std::ostringstream msg;
      msg << "grade " << g << " outside [0, 1]";
      throw Error(ErrorKind::OutOfRange, msg.str());
    }
  }
  if (mem_lo > mem_hi + kEps || non_lo > non_hi + kEps) {
    std::ostringstream msg;
    msg << "interval bounds out of order: membership [" << mem_lo << ", "
        << mem_hi << "], non-membership [" << non_lo << ", " << non_hi << "]";
    throw Error(ErrorKind::IntervalOrder, msg.str());
  }
  if (cube(mem_hi) + cube(non_hi) > 1.0 + kEps) {
    std::ostringstream msg;
    msg << "cubic bound violated: " << mem_hi << "^3 + " << non_hi
        << "^3 = " << cube(mem_hi) + cube(non_hi) << " > 1";
    throw Error(ErrorKind::CubicConstraint, msg.str());
  }
  return Ivffn({mem_lo, mem_hi}, {non_lo, non_hi});
}

Ivffn Ivffn::from_parts(UnitInterval membership, UnitInterval nonmembership) {
  UnitInterval m{clamp01(membership.lo), clamp01(membership.hi)};
  UnitInterval n{clamp01(nonmembership.lo), clamp01(nonmembership.hi)};
  if (m.lo > m.hi) m.lo = m.hi;
  if (n.lo > n.hi) n.lo = n.hi;
  return Ivffn(m, n);
}

UnitInterval hesitation(const Ivffn& f) {
  const double lo = cbrt_clamped(1.0 - cube(f.mem_hi()) - cube(f.non_hi()));
  const double hi = cbrt_clamped(1.0 - cube(f.mem_lo()) - cube(f.non_lo()));
  return {lo, hi};
}

ScoreTriple score_triple(const Ivffn& f) {
  const double mem = cube(f.mem_lo()) + cube(f.mem_hi());
  const double non = cube(f.non_lo()) + cube(f.non_hi());
  ScoreTriple t;
  t.score = 0.5 * (mem - non);
  t.accuracy = 0.5 * (mem + non);
  t.normalized = 0.5 * (t.score + 1.0);
  return t;
}

Ivffn complement(const Ivffn& f) {
  return Ivffn::from_parts(f.nonmembership(), f.membership());
}

Ivffn join(const Ivffn& a, const Ivffn& b) {
  return Ivffn::from_parts(
      {std::max(a.mem_lo(), b.mem_lo()), std::max(a.mem_hi(), b.mem_hi())},
      {std::min(a.non_lo(), b.non_lo()), std::min(a.non_hi(), b.non_hi())});
}

Ivffn meet(const Ivffn& a, const Ivffn& b) {
  return Ivffn::from_parts(
      {std::min(a.mem_lo(), b.mem_lo()), std::min(a.mem_hi(), b.mem_hi())},
      {std::max(a.non_lo(), b.non_lo()), std::max(a.non_hi(), b.non_hi())});
}

namespace {

// a^3 + b^3 - a^3 b^3, the cubic probabilistic sum, stays in [0, 1].
double prob_sum(double a, double b) {
  const double a3 = cube(a);
  const double b3 = cube(b);
  return cbrt_clamped(a3 + b3 - a3 * b3);
}

}  // namespace

Ivffn add(const Ivffn& a, const Ivffn& b) {
  return Ivffn::from_parts(
      {prob_sum(a.mem_lo(), b.mem_lo()), prob_sum(a.mem_hi(), b.mem_hi())},
      {a.non_lo() * b.non_lo(), a.non_hi() * b.non_hi()});
}

Ivffn mul(const Ivffn& a, const Ivffn& b) {
  return Ivffn::from_parts(
      {a.mem_lo() * b.mem_lo(), a.mem_hi() * b.mem_hi()},
      {prob_sum(a.non_lo(), b.non_lo()), prob_sum(a.non_hi(), b.non_hi())});
}

namespace {

// (1 - (1 - g^3)^t)^(1/3); the scalar side of scalar_mul / power.
double attenuate(double grade, double t) {
  return cbrt_clamped(1.0 - std::pow(1.0 - cube(grade), t));
}

}  // namespace

Ivffn scalar_mul(double t, const Ivffn& f) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::NegativeScalar,
                "scalar must be >= 0, got " + std::to_string(t));
  }
  return Ivffn::from_parts(
      {attenuate(f.mem_lo(), t), attenuate(f.mem_hi(), t)},
      {std::pow(f.non_lo(), t), std::pow(f.non_hi(), t)});
}

Ivffn power(const Ivffn& f, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::NegativeScalar,
                "exponent must be >= 0, got " + std::to_string(t));
  }
  return Ivffn::from_parts(
      {std::pow(f.mem_lo(), t), std::pow(f.mem_hi(), t)},
      {attenuate(f.non_lo(), t), attenuate(f.non_hi(), t)});
}

double distance(const Ivffn& a, const Ivffn& b) {
  // The hesitation cubes are 1 - mem_hi^3 - non_hi^3 and its lower twin;
  // using them directly avoids a cbrt/cube round trip.
  const double ha_lo = 1.0 - cube(a.mem_hi()) - cube(a.non_hi());
  const double ha_hi = 1.0 - cube(a.mem_lo()) - cube(a.non_lo());
  const double hb_lo = 1.0 - cube(b.mem_hi()) - cube(b.non_hi());
  const double hb_hi = 1.0 - cube(b.mem_lo()) - cube(b.non_lo());
  const double sum = std::abs(cube(a.mem_lo()) - cube(b.mem_lo())) +
                     std::abs(cube(a.mem_hi()) - cube(b.mem_hi())) +
                     std::abs(cube(a.non_lo()) - cube(b.non_lo())) +
                     std::abs(cube(a.non_hi()) - cube(b.non_hi())) +
                     std::abs(ha_lo - hb_lo) + std::abs(ha_hi - hb_hi);
  return 0.25 * sum;
}

std::strong_ordering compare(const Ivffn& a, const Ivffn& b) {
  const ScoreTriple sa = score_triple(a);
  const ScoreTriple sb = score_triple(b);
  if (sa.score != sb.score) {
    return sa.score > sb.score ? std::strong_ordering::greater
                               : std::strong_ordering::less;
  }
  if (sa.accuracy != sb.accuracy) {
    return sa.accuracy > sb.accuracy ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
  }
  const auto ta = std::make_tuple(a.mem_lo(), a.mem_hi(), a.non_lo(), a.non_hi());
  const auto tb = std::make_tuple(b.mem_lo(), b.mem_hi(), b.non_lo(), b.non_hi());
  if (ta == tb) return std::strong_ordering::equal;
  return ta > tb ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace ivff
