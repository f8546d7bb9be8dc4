#pragma once

#include <compare>
#include <cstddef>

#include "ivff/errors.hpp"

namespace ivff {

/// Tolerance used by all invariant checks. Scale literals with two or three
/// decimals pass exactly; genuine violations are orders of magnitude larger.
inline constexpr double kEps = 1e-9;

inline double cube(double x) { return x * x * x; }

/// Cube root that treats radicands in [-kEps, 0) as floating-point noise.
double cbrt_clamped(double radicand);

/// Closed subinterval of [0, 1].
struct UnitInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool valid(double eps = kEps) const {
    return lo >= -eps && hi <= 1.0 + eps && lo <= hi + eps;
  }

  bool operator==(const UnitInterval&) const = default;
};

/// Interval-valued Fermatean fuzzy number: a membership interval and a
/// non-membership interval whose upper grades obey mem^3 + non^3 <= 1.
class Ivffn {
 public:
  /// Default value carries no support: zero membership, full non-membership.
  /// It is the identity of add().
  Ivffn() : mem_{0.0, 0.0}, non_{1.0, 1.0} {}

  /// Validating constructor; rejects rather than clamps.
  static Ivffn make(double mem_lo, double mem_hi, double non_lo, double non_hi);

  /// Trusted constructor for arithmetic results that are valid by
  /// construction; only squashes sub-kEps floating-point overshoot.
  static Ivffn from_parts(UnitInterval membership, UnitInterval nonmembership);

  const UnitInterval& membership() const { return mem_; }
  const UnitInterval& nonmembership() const { return non_; }

  double mem_lo() const { return mem_.lo; }
  double mem_hi() const { return mem_.hi; }
  double non_lo() const { return non_.lo; }
  double non_hi() const { return non_.hi; }

  /// Both upper grades exactly zero. Such a value satisfies the weak cubic
  /// bound but not the strict "> 0" reading; parsers warn about it.
  bool degenerate() const { return mem_.hi == 0.0 && non_.hi == 0.0; }

  bool operator==(const Ivffn&) const = default;

 private:
  Ivffn(UnitInterval mem, UnitInterval non) : mem_(mem), non_(non) {}
  UnitInterval mem_;
  UnitInterval non_;
};

/// Scalarizations used for ordering.
struct ScoreTriple {
  double score = 0.0;       // in [-1, 1]
  double accuracy = 0.0;    // in [0, 1]
  double normalized = 0.0;  // (score + 1) / 2
};

/// Residual indeterminacy interval [(1-mem_hi^3-non_hi^3)^(1/3),
/// (1-mem_lo^3-non_lo^3)^(1/3)].
UnitInterval hesitation(const Ivffn& f);

ScoreTriple score_triple(const Ivffn& f);

/// Swaps membership and non-membership.
Ivffn complement(const Ivffn& f);

/// Componentwise max membership / min non-membership.
Ivffn join(const Ivffn& a, const Ivffn& b);
/// Componentwise min membership / max non-membership.
Ivffn meet(const Ivffn& a, const Ivffn& b);

/// Cubic probabilistic sum on membership, product on non-membership.
Ivffn add(const Ivffn& a, const Ivffn& b);
/// Dual of add.
Ivffn mul(const Ivffn& a, const Ivffn& b);

/// (1-(1-mem^3)^t)^(1/3) on membership, non^t on non-membership; t >= 0.
Ivffn scalar_mul(double t, const Ivffn& f);
/// Dual of scalar_mul.
Ivffn power(const Ivffn& f, double t);

/// Quarter of the sum of six absolute cube differences (membership bounds,
/// non-membership bounds, hesitation bounds). Pseudometric with range
/// [0, 1.5].
double distance(const Ivffn& a, const Ivffn& b);

/// Ranking order: score descending, then accuracy descending, then
/// lexicographic on the four grades so the order is total and deterministic.
/// greater means `a` ranks ahead of `b`.
std::strong_ordering compare(const Ivffn& a, const Ivffn& b);

/// true when `a` ranks strictly ahead of `b`; usable as a sort predicate.
inline bool ranks_before(const Ivffn& a, const Ivffn& b) {
  return compare(a, b) == std::strong_ordering::greater;
}

}  // namespace ivff
