#include <doctest.h>

#include <cmath>

#include "ivff/aggregate.hpp"
#include "ivff/scale.hpp"
#include "oracles.hpp"

using namespace ivff;

namespace {
const Ivffn kVH = Ivffn::make(0.8, 0.9, 0.1, 0.2);
const Ivffn kH = Ivffn::make(0.7, 0.8, 0.2, 0.3);

bool close(const Ivffn& x, const Ivffn& y, double tol = 1e-12) {
  return std::abs(x.mem_lo() - y.mem_lo()) <= tol &&
         std::abs(x.mem_hi() - y.mem_hi()) <= tol &&
         std::abs(x.non_lo() - y.non_lo()) <= tol &&
         std::abs(x.non_hi() - y.non_hi()) <= tol;
}
}  // namespace

TEST_CASE("ivffwa frozen two-value example") {
  const std::vector<Ivffn> values = {kVH, kH};
  const std::vector<double> w = {0.5, 0.5};
  const Ivffn r = ivffwa(values, w);
  CHECK(r.mem_lo() == doctest::Approx(0.756984).epsilon(1e-5));
  CHECK(r.mem_hi() == doctest::Approx(0.860128).epsilon(1e-5));
  CHECK(r.non_lo() == doctest::Approx(std::sqrt(0.02)).epsilon(1e-12));
  CHECK(r.non_hi() == doctest::Approx(std::sqrt(0.06)).epsilon(1e-12));
}

TEST_CASE("single value with weight 1 is returned unchanged") {
  std::mt19937_64 gen(71);
  for (int i = 0; i < 500; ++i) {
    const Ivffn f = oracles::random_ivffn_q(gen);
    const std::vector<Ivffn> values = {f};
    const std::vector<double> w = {1.0};
    CHECK(close(ivffwa(values, w), f, 1e-9));
    CHECK(close(ivffwg(values, w), f, 1e-9));
  }
}

TEST_CASE("idempotence: aggregating copies of one value returns it") {
  std::mt19937_64 gen(73);
  for (int i = 0; i < 500; ++i) {
    const Ivffn f = oracles::random_ivffn_q(gen);
    const std::vector<Ivffn> values = {f, f, f};
    const std::vector<double> w = oracles::random_simplex(gen, 3);
    CHECK(close(ivffwa(values, w), f, 1e-9));
    CHECK(close(ivffwg(values, w), f, 1e-9));
  }
}

TEST_CASE("wa/wg duality through the complement") {
  std::mt19937_64 gen(79);
  for (int i = 0; i < 500; ++i) {
    const std::vector<Ivffn> values = {oracles::random_ivffn(gen),
                                       oracles::random_ivffn(gen)};
    const std::vector<double> w = oracles::random_simplex(gen, 2);
    const std::vector<Ivffn> complements = {complement(values[0]),
                                            complement(values[1])};
    CHECK(close(ivffwg(values, w), complement(ivffwa(complements, w)), 1e-12));
  }
  // the frozen instance
  const std::vector<Ivffn> vh_h = {kVH, kH};
  const std::vector<Ivffn> cvh_ch = {complement(kVH), complement(kH)};
  const std::vector<double> half = {0.5, 0.5};
  CHECK(close(ivffwg(vh_h, half), complement(ivffwa(cvh_ch, half)), 1e-12));
}

TEST_CASE("closure and boundedness of both operators") {
  std::mt19937_64 gen(83);
  for (int i = 0; i < 20000; ++i) {
    const std::vector<Ivffn> values = {oracles::random_ivffn(gen),
                                       oracles::random_ivffn(gen),
                                       oracles::random_ivffn(gen)};
    const std::vector<double> w = oracles::random_simplex(gen, 3);
    const Ivffn a = ivffwa(values, w);
    const Ivffn g = ivffwg(values, w);
    CHECK(oracles::ivffn_invariants_hold(a));
    CHECK(oracles::ivffn_invariants_hold(g));

    Ivffn lo = values[0];
    Ivffn hi = values[0];
    for (const Ivffn& v : values) {
      lo = meet(lo, v);
      hi = join(hi, v);
    }
    CHECK(compare(a, lo) >= 0);
    CHECK(compare(hi, a) >= 0);
    CHECK(compare(g, lo) >= 0);
    CHECK(compare(hi, g) >= 0);
  }
}

TEST_CASE("zero-weight entries never influence the result") {
  std::mt19937_64 gen(89);
  const Ivffn extreme_hi = Ivffn::make(0.95, 1.0, 0.0, 0.0);
  const Ivffn extreme_lo = Ivffn::make(0.0, 0.0, 0.95, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Ivffn f = oracles::random_ivffn_q(gen);
    const std::vector<Ivffn> with_hi = {f, extreme_hi};
    const std::vector<Ivffn> with_lo = {f, extreme_lo};
    const std::vector<double> w = {1.0, 0.0};
    CHECK(close(ivffwa(with_hi, w), f, 1e-9));
    CHECK(close(ivffwa(with_lo, w), f, 1e-9));
    CHECK(close(ivffwg(with_hi, w), f, 1e-9));
    CHECK(close(ivffwg(with_lo, w), f, 1e-9));
  }
}

TEST_CASE("weight permutation equivariance") {
  std::mt19937_64 gen(97);
  for (int i = 0; i < 500; ++i) {
    const Ivffn a = oracles::random_ivffn(gen);
    const Ivffn b = oracles::random_ivffn(gen);
    const Ivffn c = oracles::random_ivffn(gen);
    const std::vector<double> w = oracles::random_simplex(gen, 3);
    const std::vector<Ivffn> abc = {a, b, c};
    const std::vector<Ivffn> cab = {c, a, b};
    const std::vector<double> w_cab = {w[2], w[0], w[1]};
    CHECK(close(ivffwa(abc, w), ivffwa(cab, w_cab), 1e-12));
    CHECK(close(ivffwg(abc, w), ivffwg(cab, w_cab), 1e-12));
  }
}

TEST_CASE("dimension mismatches throw") {
  const std::vector<Ivffn> values = {kVH, kH};
  const std::vector<double> w = {1.0};
  CHECK_THROWS_WITH_AS(ivffwa(values, w), doctest::Contains("DimensionMismatch"),
                       Error);
  CHECK_THROWS_WITH_AS(ivffwg(values, w), doctest::Contains("DimensionMismatch"),
                       Error);
  const std::vector<Ivffn> empty;
  const std::vector<double> none;
  CHECK_THROWS_AS(ivffwa(empty, none), Error);
}

namespace {
DecisionMatrix label_matrix(const char* id,
                            const std::vector<std::vector<const char*>>& rows) {
  std::vector<Ivffn> cells;
  for (const auto& row : rows) {
    for (const char* label : row) cells.push_back(builtin_scale().lookup(label));
  }
  return DecisionMatrix::make(id, rows.size(), rows[0].size(), std::move(cells));
}
}  // namespace

TEST_CASE("collapse_dms") {
  const DecisionMatrix m1 = label_matrix("U1", {{"CH", "H"}, {"E", "SL"}});
  const DecisionMatrix m2 = label_matrix("U2", {{"CH", "VH"}, {"L", "SL"}});

  // single decision maker passes through
  const DecisionMatrix only = collapse_dms({m1}, {1.0});
  CHECK(close(only.at(0, 0), m1.at(0, 0)));
  CHECK(close(only.at(1, 1), m1.at(1, 1)));

  // unanimous cells survive any influence split
  const DecisionMatrix both = collapse_dms({m1, m2}, {0.6, 0.4});
  CHECK(close(both.at(0, 0), builtin_scale().lookup("CH"), 1e-9));
  CHECK(close(both.at(1, 1), builtin_scale().lookup("SL"), 1e-9));

  // a collapsed mixed cell lies between its sources
  const Ivffn mixed = both.at(0, 1);
  CHECK(compare(mixed, builtin_scale().lookup("H")) == std::strong_ordering::greater);
  CHECK(compare(builtin_scale().lookup("VH"), mixed) == std::strong_ordering::greater);

  const DecisionMatrix wrong = label_matrix("U3", {{"CH", "H", "E"}, {"E", "SL", "L"}});
  CHECK_THROWS_WITH_AS(collapse_dms({m1, wrong}, {0.5, 0.5}),
                       doctest::Contains("ShapeMismatch"), Error);
}

TEST_CASE("preference_values") {
  const DecisionMatrix single = label_matrix("c", {{"VH"}, {"SL"}, {"E"}});
  const WeightVector one = WeightVector::make({1.0});
  for (Aggregator op :
       {Aggregator::WeightedAveraging, Aggregator::WeightedGeometric}) {
    const auto prefs = preference_values(single, one, op);
    REQUIRE(prefs.size() == 3);
    CHECK(close(prefs[0].value, builtin_scale().lookup("VH")));
    CHECK(close(prefs[1].value, builtin_scale().lookup("SL")));
    CHECK(close(prefs[2].value, builtin_scale().lookup("E")));
    CHECK(prefs[2].scores.normalized == doctest::Approx(0.5));
  }

  // averaging dominates geometric aggregation scorewise
  std::mt19937_64 gen(101);
  for (int trial = 0; trial < 300; ++trial) {
    const DecisionMatrix mat = oracles::random_matrix(gen, "r", 3, 4);
    const WeightVector w = WeightVector::make(oracles::random_simplex(gen, 4));
    const auto wa = preference_values(mat, w, Aggregator::WeightedAveraging);
    const auto wg = preference_values(mat, w, Aggregator::WeightedGeometric);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(wa[i].scores.score >= wg[i].scores.score - 1e-12);
    }
  }

  const WeightVector two = WeightVector::make({0.5, 0.5});
  CHECK_THROWS_WITH_AS(preference_values(single, two, Aggregator::WeightedAveraging),
                       doctest::Contains("ShapeMismatch"), Error);
}
