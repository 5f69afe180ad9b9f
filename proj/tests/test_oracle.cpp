#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alt/classify.hpp"
#include "alt/oracle.hpp"
#include "support.hpp"

using namespace alt;
using testsup::Rng;
using testsup::uniform;
using testsup::unit_frame_curve;

TEST_CASE("settings validation") {
  OracleSettings s;
  s.samples = 128;
  CHECK_THROWS_AS(oracle_inflection_count(unit_frame_curve(4, 4), s),
                  std::invalid_argument);
}

TEST_CASE("inflection counting on known instances") {
  SUBCASE("(4,4): two sign changes at the mapped phi roots") {
    const OracleInflections r = oracle_inflection_count(unit_frame_curve(4, 4));
    REQUIRE(r.count == 2);
    const double s3 = std::sqrt(3.0);
    CHECK(r.locations[0] ==
          doctest::Approx(1.0 / (3.0 + s3)).epsilon(1e-9));
    CHECK(r.locations[1] ==
          doctest::Approx(1.0 / (3.0 - s3)).epsilon(1e-9));
  }
  SUBCASE("(1,1): none") {
    CHECK(oracle_inflection_count(unit_frame_curve(1, 1)).count == 0);
  }
  SUBCASE("(-1,1): one") {
    CHECK(oracle_inflection_count(unit_frame_curve(-1, 1)).count == 1);
  }
  SUBCASE("straight polygon: zero curvature note") {
    const CurveInstance flat{ControlPolygon::h_form({0, 0}, {1, 0}, {3, 0}),
                             ShapeParams(2, 1)};
    const OracleInflections r = oracle_inflection_count(flat);
    CHECK(r.count == 0);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes[0].find("zero curvature") != std::string::npos);
  }
}

TEST_CASE("refined locations match the analytic root mapping") {
  Rng rng(87);
  int checked = 0;
  while (checked < 40) {
    const ShapeParams p = testsup::random_params_with_margin(rng);
    const InflectionCount ic = count_inflections(p);
    const ClassificationReport rep = classify(p);
    if (rep.shape.kind != ShapeKind::SingleInflection &&
        rep.shape.kind != ShapeKind::DoubleInflection)
      continue;
    const OracleInflections oi = oracle_inflection_count(
        CurveInstance{testsup::random_h_polygon(rng), p});
    REQUIRE(oi.count == ic.count);
    for (int k = 0; k < oi.count; ++k)
      CHECK(std::fabs(oi.locations[k] - ic.t[k]) <= 1e-8);
    ++checked;
  }
}

TEST_CASE("cusp detection") {
  SUBCASE("(6,6): minimizer at t = 1/2") {
    const auto t = oracle_cusp(unit_frame_curve(6, 6));
    REQUIRE(t.has_value());
    CHECK(std::fabs(*t - 0.5) <= 1e-6);
  }
  SUBCASE("on-locus instance with beta = -2") {
    const auto t =
        oracle_cusp(unit_frame_curve(cusp_alpha_for_beta(-2), -2));
    REQUIRE(t.has_value());
    CHECK(std::fabs(*t - 5.0 / 6.0) <= 1e-6);
  }
  SUBCASE("regular curves have none") {
    CHECK_FALSE(oracle_cusp(unit_frame_curve(1, 1)).has_value());
    CHECK_FALSE(oracle_cusp(unit_frame_curve(2, 2)).has_value());
    CHECK_FALSE(oracle_cusp(unit_frame_curve(4, 4)).has_value());
  }
}

TEST_CASE("self-intersection detection") {
  SUBCASE("(7,7): the loop pair") {
    const auto pq = oracle_self_intersection(unit_frame_curve(7, 7));
    REQUIRE(pq.has_value());
    const double s5 = std::sqrt(5.0);
    const double tp = 1.0 / (1.0 + (3.0 + s5) / 2.0);
    const double tq = 1.0 / (1.0 + (3.0 - s5) / 2.0);
    CHECK(std::fabs(pq->first - tp) <= 1e-6);
    CHECK(std::fabs(pq->second - tq) <= 1e-6);
    // The refined pair coincides in the plane.
    const CurveInstance c = unit_frame_curve(7, 7);
    CHECK(distance(evaluate(c, pq->first), evaluate(c, pq->second)) <=
          1e-9 * c.diameter());
  }
  SUBCASE("simple arcs have none") {
    CHECK_FALSE(oracle_self_intersection(unit_frame_curve(1, 1)).has_value());
    CHECK_FALSE(oracle_self_intersection(unit_frame_curve(4, 4)).has_value());
  }
  SUBCASE("a cusp is not reported as a loop") {
    CHECK_FALSE(oracle_self_intersection(unit_frame_curve(6, 6)).has_value());
  }
  SUBCASE("loop found on arbitrary geometry") {
    Rng rng(91);
    for (int k = 0; k < 10; ++k) {
      const CurveInstance c{testsup::random_h_polygon(rng), ShapeParams(7, 7)};
      const auto pq = oracle_self_intersection(c);
      REQUIRE(pq.has_value());
      CHECK(distance(evaluate(c, pq->first), evaluate(c, pq->second)) <=
            1e-9 * c.diameter());
    }
  }
}

TEST_CASE("combined verdict") {
  CHECK(oracle_classify(unit_frame_curve(2, 2)) == ShapeKind::Quadratic);
  CHECK(oracle_classify(unit_frame_curve(6, 6)) == ShapeKind::Cusp);
  CHECK(oracle_classify(unit_frame_curve(7, 7)) == ShapeKind::Loop);
  CHECK(oracle_classify(unit_frame_curve(4, 4)) == ShapeKind::DoubleInflection);
  CHECK(oracle_classify(unit_frame_curve(-1, 1)) == ShapeKind::SingleInflection);
  CHECK(oracle_classify(unit_frame_curve(1.5, 1.5)) == ShapeKind::Convex);
}

TEST_CASE("verdict is independent of the realizing geometry") {
  Rng rng(93);
  for (const ShapeParams p :
       {ShapeParams{7, 7}, ShapeParams{-1, 1}, ShapeParams{4, 4}}) {
    const ShapeKind want = oracle_classify(unit_frame_curve(p.alpha, p.beta));
    for (int k = 0; k < 20; ++k) {
      CHECK(oracle_classify(CurveInstance{testsup::random_h_polygon(rng), p}) ==
            want);
    }
  }
}

TEST_CASE("resolution stability: doubling samples keeps the class") {
  Rng rng(97);
  OracleSettings coarse, fine;
  fine.samples = 2 * coarse.samples;
  for (int k = 0; k < 30; ++k) {
    const ShapeParams p = testsup::random_params_with_margin(rng);
    const CurveInstance c = unit_frame_curve(p.alpha, p.beta);
    CHECK(oracle_classify(c, coarse) == oracle_classify(c, fine));
  }
}

TEST_CASE("mini sweep: analytic class equals the oracle class") {
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const ShapeParams p = testsup::random_params_with_margin(rng);
    const CurveInstance c = unit_frame_curve(p.alpha, p.beta);
    const ShapeKind analytic = classify(p).shape.kind;
    const ShapeKind numeric = oracle_classify(c);
    CHECK(analytic == numeric);
  }
}
