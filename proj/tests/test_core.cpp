#include <doctest.h>

#include <cmath>

#include "ivff/core.hpp"
#include "oracles.hpp"

using namespace ivff;

namespace {
const Ivffn kCH = Ivffn::make(0.95, 1.0, 0.0, 0.0);
const Ivffn kVH = Ivffn::make(0.8, 0.9, 0.1, 0.2);
const Ivffn kH = Ivffn::make(0.7, 0.8, 0.2, 0.3);
const Ivffn kE = Ivffn::make(0.5, 0.5, 0.5, 0.5);
const Ivffn kCL = Ivffn::make(0.0, 0.0, 0.95, 1.0);
}  // namespace

TEST_CASE("construction validates instead of clamping") {
  CHECK_NOTHROW(Ivffn::make(0.8, 0.9, 0.1, 0.2));
  CHECK_NOTHROW(Ivffn::make(0.5, 0.5, 0.5, 0.5));

  CHECK_THROWS_WITH_AS(Ivffn::make(0.9, 1.0, 0.9, 1.0),
                       doctest::Contains("CubicConstraint"), Error);
  CHECK_THROWS_WITH_AS(Ivffn::make(-0.2, 0.5, 0.1, 0.2),
                       doctest::Contains("OutOfRange"), Error);
  CHECK_THROWS_WITH_AS(Ivffn::make(0.1, 1.2, 0.1, 0.2),
                       doctest::Contains("OutOfRange"), Error);
  CHECK_THROWS_WITH_AS(Ivffn::make(0.6, 0.5, 0.1, 0.2),
                       doctest::Contains("IntervalOrder"), Error);
  CHECK_THROWS_WITH_AS(Ivffn::make(0.1, 0.2, 0.4, 0.3),
                       doctest::Contains("IntervalOrder"), Error);

  // boundary of the cubic constraint is legal
  CHECK_NOTHROW(Ivffn::make(0.0, 1.0, 0.0, 0.0));

  CHECK(Ivffn::make(0.0, 0.0, 0.0, 0.0).degenerate());
  CHECK_FALSE(kE.degenerate());
}

TEST_CASE("hesitation interval") {
  const UnitInterval he = hesitation(kE);
  CHECK(he.lo == doctest::Approx(std::cbrt(0.75)).epsilon(1e-12));
  CHECK(he.hi == doctest::Approx(std::cbrt(0.75)).epsilon(1e-12));
  CHECK(he.lo == doctest::Approx(0.9086).epsilon(1e-4));

  const UnitInterval hch = hesitation(kCH);
  CHECK(hch.lo == doctest::Approx(0.0));
  CHECK(hch.hi == doctest::Approx(std::cbrt(0.142625)).epsilon(1e-12));
  CHECK(hch.hi == doctest::Approx(0.5224).epsilon(1e-4));

  // upper grades on the constraint boundary force the lower bound to 0
  const Ivffn boundary = Ivffn::make(0.3, 0.9, 0.1, std::cbrt(1.0 - 0.729));
  CHECK(hesitation(boundary).lo == doctest::Approx(0.0));
  CHECK(hesitation(boundary).valid());
}

TEST_CASE("score, accuracy, normalized score") {
  const ScoreTriple e = score_triple(kE);
  CHECK(e.score == doctest::Approx(0.0));
  CHECK(e.accuracy == doctest::Approx(0.25));
  CHECK(e.normalized == doctest::Approx(0.5));

  const ScoreTriple vh = score_triple(kVH);
  CHECK(vh.score == doctest::Approx(0.616).epsilon(1e-3));
  CHECK(vh.accuracy == doctest::Approx(0.625).epsilon(1e-3));
  CHECK(vh.normalized == doctest::Approx(0.808).epsilon(1e-3));

  const ScoreTriple cl = score_triple(kCL);
  CHECK(cl.score == doctest::Approx(-0.9287).epsilon(1e-4));
  CHECK(cl.normalized == doctest::Approx(0.0356).epsilon(1e-2));

  std::mt19937_64 gen(7);
  for (int i = 0; i < 2000; ++i) {
    const Ivffn f = oracles::random_ivffn(gen);
    const ScoreTriple t = score_triple(f);
    CHECK(t.score >= -1.0 - 1e-12);
    CHECK(t.score <= 1.0 + 1e-12);
    CHECK(t.accuracy >= -1e-12);
    CHECK(t.accuracy <= 1.0 + 1e-12);
    CHECK(t.normalized == doctest::Approx((t.score + 1.0) / 2.0).epsilon(1e-12));
    CHECK(score_triple(complement(f)).score == doctest::Approx(-t.score));
  }
}

TEST_CASE("complement swaps and is an involution") {
  const Ivffn c = complement(kVH);
  CHECK(c.mem_lo() == doctest::Approx(0.1));
  CHECK(c.mem_hi() == doctest::Approx(0.2));
  CHECK(c.non_lo() == doctest::Approx(0.8));
  CHECK(c.non_hi() == doctest::Approx(0.9));
  CHECK(complement(kE) == kE);

  std::mt19937_64 gen(11);
  for (int i = 0; i < 5000; ++i) {
    const Ivffn f = oracles::random_ivffn(gen);
    CHECK(complement(complement(f)) == f);
  }
}

TEST_CASE("join and meet") {
  CHECK(join(kCH, kCL) == kCH);
  CHECK(meet(kCH, kCL) == kCL);
  CHECK(join(kE, kE) == kE);
  CHECK(meet(kE, kE) == kE);

  std::mt19937_64 gen(13);
  for (int i = 0; i < 5000; ++i) {
    const Ivffn a = oracles::random_ivffn(gen);
    const Ivffn b = oracles::random_ivffn(gen);
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, b) == meet(b, a));
    CHECK(oracles::ivffn_invariants_hold(join(a, b)));
    CHECK(oracles::ivffn_invariants_hold(meet(a, b)));
  }
}

TEST_CASE("add and mul with their identities") {
  const Ivffn s = add(kE, kE);
  CHECK(s.mem_lo() == doctest::Approx(std::cbrt(0.234375)).epsilon(1e-12));
  CHECK(s.mem_lo() == doctest::Approx(0.61656).epsilon(1e-4));
  CHECK(s.non_lo() == doctest::Approx(0.25));
  CHECK(s.non_hi() == doctest::Approx(0.25));

  const Ivffn add_identity = Ivffn::make(0.0, 0.0, 1.0, 1.0);
  const Ivffn mul_identity = Ivffn::make(1.0, 1.0, 0.0, 0.0);
  std::mt19937_64 gen(17);
  for (int i = 0; i < 2000; ++i) {
    const Ivffn f = oracles::random_ivffn(gen);
    const Ivffn a = add(f, add_identity);
    CHECK(a.mem_lo() == doctest::Approx(f.mem_lo()).epsilon(1e-12));
    CHECK(a.mem_hi() == doctest::Approx(f.mem_hi()).epsilon(1e-12));
    CHECK(a.non_lo() == doctest::Approx(f.non_lo()).epsilon(1e-12));
    CHECK(a.non_hi() == doctest::Approx(f.non_hi()).epsilon(1e-12));
    const Ivffn m = mul(f, mul_identity);
    CHECK(m.mem_lo() == doctest::Approx(f.mem_lo()).epsilon(1e-12));
    CHECK(m.non_hi() == doctest::Approx(f.non_hi()).epsilon(1e-12));
  }
}

namespace {
bool close(const Ivffn& x, const Ivffn& y, double tol) {
  return std::abs(x.mem_lo() - y.mem_lo()) <= tol &&
         std::abs(x.mem_hi() - y.mem_hi()) <= tol &&
         std::abs(x.non_lo() - y.non_lo()) <= tol &&
         std::abs(x.non_hi() - y.non_hi()) <= tol;
}
}  // namespace

TEST_CASE("add/mul commute and associate to 1e-12") {
  std::mt19937_64 gen(19);
  for (int i = 0; i < 2000; ++i) {
    const Ivffn a = oracles::random_ivffn(gen);
    const Ivffn b = oracles::random_ivffn(gen);
    const Ivffn c = oracles::random_ivffn(gen);
    CHECK(close(add(a, b), add(b, a), 1e-12));
    CHECK(close(mul(a, b), mul(b, a), 1e-12));
    CHECK(close(add(add(a, b), c), add(a, add(b, c)), 1e-12));
    CHECK(close(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-12));
  }
}

TEST_CASE("scalar_mul and power") {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 1000; ++i) {
    const Ivffn f = oracles::random_ivffn_q(gen);
    CHECK(close(scalar_mul(1.0, f), f, 1e-9));
    CHECK(close(power(f, 1.0), f, 1e-9));
    CHECK(close(scalar_mul(2.0, f), add(f, f), 1e-9));
    CHECK(close(power(f, 2.0), mul(f, f), 1e-9));
    Ivffn acc_add = f;
    Ivffn acc_mul = f;
    for (int k = 2; k <= 4; ++k) {
      acc_add = add(acc_add, f);
      acc_mul = mul(acc_mul, f);
    }
    CHECK(close(scalar_mul(4.0, f), acc_add, 1e-9));
    CHECK(close(power(f, 4.0), acc_mul, 1e-9));
  }
  CHECK(close(scalar_mul(2.0, kE), add(kE, kE), 1e-12));  // clean grades stay tight
  CHECK_THROWS_WITH_AS(scalar_mul(-0.5, kE), doctest::Contains("NegativeScalar"),
                       Error);
  CHECK_THROWS_WITH_AS(power(kE, -1.0), doctest::Contains("NegativeScalar"), Error);
}

TEST_CASE("closure of the algebra") {
  std::mt19937_64 gen(29);
  for (int i = 0; i < 20000; ++i) {
    const Ivffn a = oracles::random_ivffn(gen);
    const Ivffn b = oracles::random_ivffn(gen);
    const double t = 4.0 * oracles::next_unit(gen);
    CHECK(oracles::ivffn_invariants_hold(add(a, b)));
    CHECK(oracles::ivffn_invariants_hold(mul(a, b)));
    CHECK(oracles::ivffn_invariants_hold(scalar_mul(t, a)));
    CHECK(oracles::ivffn_invariants_hold(power(a, t)));
  }
}

TEST_CASE("distance: frozen examples") {
  CHECK(distance(kE, kE) == doctest::Approx(0.0));
  // six cube differences: 0.857375 + 1 + 0.857375 + 1 + 0 + 0, quartered
  CHECK(distance(kCH, kCL) == doctest::Approx(0.9286875).epsilon(1e-12));
  CHECK(distance(kVH, kH) == doctest::Approx(0.193).epsilon(1e-12));
}

TEST_CASE("distance is a pseudometric with range [0, 1.5]") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 20000; ++i) {
    const Ivffn a = oracles::random_ivffn(gen);
    const Ivffn b = oracles::random_ivffn(gen);
    const Ivffn c = oracles::random_ivffn(gen);
    const double dab = distance(a, b);
    CHECK(dab >= 0.0);
    CHECK(dab <= 1.5 + 1e-12);
    CHECK(distance(a, a) == 0.0);
    CHECK(dab == distance(b, a));
    CHECK(distance(a, c) <= dab + distance(b, c) + 1e-12);
  }
  // extreme pairs sit at the sharp maximum of 1 (the quartered six-term sum
  // is bounded by 1.5 but the cube constraints cap it at 1)
  const Ivffn full = Ivffn::make(1.0, 1.0, 0.0, 0.0);
  const Ivffn blank = Ivffn::make(0.0, 0.0, 0.0, 0.0);
  const Ivffn anti = Ivffn::make(0.0, 0.0, 1.0, 1.0);
  CHECK(distance(full, blank) == doctest::Approx(1.0));
  CHECK(distance(full, anti) == doctest::Approx(1.0));
}

TEST_CASE("compare orders by score, accuracy, then grades") {
  CHECK(compare(kVH, kH) == std::strong_ordering::greater);
  CHECK(score_triple(kH).score == doctest::Approx(0.41).epsilon(1e-12));
  CHECK(compare(kE, kE) == std::strong_ordering::equal);

  // equal score (both 0), different accuracy: higher accuracy first
  const Ivffn low_acc = Ivffn::make(0.3, 0.3, 0.3, 0.3);
  CHECK(score_triple(low_acc).score == doctest::Approx(0.0));
  CHECK(score_triple(low_acc).accuracy < score_triple(kE).accuracy);
  CHECK(compare(kE, low_acc) == std::strong_ordering::greater);

  // equal score and accuracy, different grades: the lexicographic tie-break
  // decides. 1^3 + 12^3 = 9^3 + 10^3 over sixteenths gives bit-identical
  // membership cube sums (all cubes exactly representable), so the first two
  // orderings tie exactly.
  const Ivffn lex_a = Ivffn::make(1.0 / 16, 12.0 / 16, 0.0625, 0.125);
  const Ivffn lex_b = Ivffn::make(9.0 / 16, 10.0 / 16, 0.0625, 0.125);
  CHECK(score_triple(lex_a).score == score_triple(lex_b).score);
  CHECK(score_triple(lex_a).accuracy == score_triple(lex_b).accuracy);
  CHECK(compare(lex_b, lex_a) == std::strong_ordering::greater);
  CHECK(compare(lex_a, lex_b) == std::strong_ordering::less);

  // totality and antisymmetry on random pairs
  std::mt19937_64 gen(37);
  for (int i = 0; i < 5000; ++i) {
    const Ivffn x = oracles::random_ivffn(gen);
    const Ivffn y = oracles::random_ivffn(gen);
    const auto xy = compare(x, y);
    const auto yx = compare(y, x);
    if (xy == std::strong_ordering::greater) CHECK(yx == std::strong_ordering::less);
    if (xy == std::strong_ordering::less) CHECK(yx == std::strong_ordering::greater);
    if (xy == std::strong_ordering::equal) {
      CHECK(yx == std::strong_ordering::equal);
      CHECK(x == y);
    }
  }
}
