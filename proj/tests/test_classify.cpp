#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "alt/classify.hpp"
#include "alt/numeric.hpp"
#include "support.hpp"

using namespace alt;
using testsup::Rng;
using testsup::uniform;

TEST_CASE("stable quadratic solver") {
  const QuadRoots q = solve_quadratic(1, -3, 2);
  CHECK(q.count == 2);
  CHECK(q.r0 == doctest::Approx(1.0));
  CHECK(q.r1 == doctest::Approx(2.0));

  // Cancellation-prone: large |b|.
  const QuadRoots big = solve_quadratic(1, -1e8, 1);
  CHECK(big.count == 2);
  CHECK(big.r0 == doctest::Approx(1e-8).epsilon(1e-12));
  CHECK(big.r1 == doctest::Approx(1e8).epsilon(1e-12));

  CHECK(solve_quadratic(1, 0, 1).count == 0);
  const QuadRoots lin = solve_quadratic(0, 2, -4);
  CHECK(lin.count == 1);
  CHECK(lin.from_linear);
  CHECK(lin.r0 == doctest::Approx(2.0));
  const QuadRoots dbl = solve_quadratic(1, -2, 1);
  CHECK(dbl.count == 1);
  CHECK(dbl.double_root);
  CHECK(dbl.r0 == doctest::Approx(1.0));
  CHECK(solve_quadratic(0, 0, 0).identically_zero);
}

TEST_CASE("discriminant I values and symmetry") {
  CHECK(discriminant_I({2, 2}) == 0.0);
  CHECK(discriminant_I({1, 1}) == 5.0);
  CHECK(discriminant_I({4, 4}) == -4.0);
  CHECK(discriminant_I({7, 7}) == 5.0);
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const double a = uniform(rng, -9, 9), b = uniform(rng, -9, 9);
    CHECK(discriminant_I({a, b}) == discriminant_I({b, a}));
  }
}

TEST_CASE("phi coefficients and the discriminant link identity") {
  const PhiCoefficients c44 = phi_coefficients({4, 4});
  CHECK(c44.c2 == 4.0);
  CHECK(c44.c1 == -16.0);
  CHECK(c44.c0 == 4.0);

  Rng rng(5);
  for (int k = 0; k < 10000; ++k) {
    const ShapeParams p(uniform(rng, -8, 8), uniform(rng, -8, 8));
    const PhiCoefficients c = phi_coefficients(p);
    const double lhs = c.c1 * c.c1 - 4.0 * c.c2 * c.c0;
    const double rhs = -3.0 * p.alpha * p.beta * discriminant_I(p);
    CHECK(testsup::rel_err(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("inflection roots: frozen instances") {
  SUBCASE("(4,4): u = 2 -+ sqrt(3), both positive") {
    const RealRoots r = inflection_roots({4, 4});
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r.roots[1] == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("(-1,1): one positive root (-1+sqrt(33))/4") {
    const RealRoots r = inflection_roots({-1, 1});
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] ==
          doctest::Approx((-1.0 - std::sqrt(33.0)) / 4.0).epsilon(1e-12));
    CHECK(r.roots[1] ==
          doctest::Approx((-1.0 + std::sqrt(33.0)) / 4.0).epsilon(1e-12));
    CHECK(r.roots[1] == doctest::Approx(1.1861406616345072).epsilon(1e-12));
  }
  SUBCASE("(1,1): complex pair, empty with note") {
    const RealRoots r = inflection_roots({1, 1});
    CHECK(r.roots.empty());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0] == "complex roots");
  }
}

TEST_CASE("inflection counting") {
  CHECK(count_inflections({4, 4}).count == 2);
  CHECK(count_inflections({-1, 1}).count == 1);
  CHECK(count_inflections({1, 1}).count == 0);

  SUBCASE("root at u = 0 is a note, not a count") {
    const InflectionCount ic = count_inflections({3, 5});  // c0 = 0
    CHECK(ic.count == 1);
    CHECK(ic.u[0] == doctest::Approx(2.5).epsilon(1e-13));
    REQUIRE(ic.notes.size() == 1);
    CHECK(ic.notes[0].find("u=0") != std::string::npos);
  }
  SUBCASE("linear phi at beta = 3") {
    const InflectionCount ic = count_inflections({5, 3});  // c2 = 0
    CHECK(ic.count == 1);
    CHECK(ic.u[0] == doctest::Approx(0.4).epsilon(1e-13));
  }
  SUBCASE("double root is not an inflection") {
    const InflectionCount ic = count_inflections({6, 6});
    CHECK(ic.count == 0);
    REQUIRE_FALSE(ic.notes.empty());
    CHECK(ic.notes[0].find("double phi root") != std::string::npos);
  }
  SUBCASE("t locations map through t = 1/(1+u)") {
    const InflectionCount ic = count_inflections({4, 4});
    REQUIRE(ic.t.size() == 2);
    CHECK(ic.t[0] ==
          doctest::Approx(1.0 / (3.0 + std::sqrt(3.0))).epsilon(1e-12));
    CHECK(ic.t[1] ==
          doctest::Approx(1.0 / (3.0 - std::sqrt(3.0))).epsilon(1e-12));
  }
}

TEST_CASE("cusp locus alpha(beta)") {
  CHECK(cusp_alpha_for_beta(6) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(cusp_alpha_for_beta(-2) ==
        doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(cusp_alpha_for_beta(2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(cusp_alpha_for_beta(4), std::domain_error);
  for (double beta : {-5.0, -2.0, 0.5, 2.5, 5.0, 6.0, 9.0}) {
    CHECK(std::fabs(discriminant_I({cusp_alpha_for_beta(beta), beta})) <=
          1e-12);
  }
}

TEST_CASE("cusp parameter") {
  CHECK(*cusp_parameter({6, 6}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*cusp_parameter({10.0 / 3.0, -2}) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-13));
  // Both parameters inside (0,3): the locus carries no cusp there.
  CHECK_FALSE(cusp_parameter({4.0 / 3.0, 2.5}).has_value());
  CHECK_THROWS_AS(cusp_parameter({2, 2}), std::domain_error);
  CHECK_THROWS_AS(cusp_parameter({5, 5}), std::domain_error);  // |I| large
}

TEST_CASE("resultant of the velocity components") {
  SUBCASE("unit frame at (1,1) gives -15") {
    CHECK(resultant_check({1, 1}, {1, 0}, {0, 1}) ==
          doctest::Approx(-15.0).epsilon(1e-12));
  }
  SUBCASE("factor alpha*beta: vanishes at alpha = 0") {
    CHECK(std::fabs(resultant_check({0, 2.5}, {1, 0}, {0, 1})) <= 1e-12);
  }
  SUBCASE("vanishes on the I = 0 locus") {
    for (double beta : {-2.0, 5.0, 6.0, 8.0}) {
      const double alpha = cusp_alpha_for_beta(beta);
      CHECK(std::fabs(resultant_check({alpha, beta}, {1, 0}, {0, 1})) <=
            1e-9 * (1.0 + alpha * alpha * beta * beta));
    }
  }
  SUBCASE("matches -3 Gamma^2 alpha beta I on random draws") {
    Rng rng(9);
    for (int k = 0; k < 300; ++k) {
      const ShapeParams p = testsup::random_params_with_margin(rng);
      const Vec2 t0(uniform(rng, -2, 2), uniform(rng, -2, 2));
      const Vec2 t1(uniform(rng, -2, 2), uniform(rng, -2, 2));
      if (std::fabs(cross2(t0, t1)) < 0.1) continue;
      const double det = resultant_check(p, t0, t1);
      const double gamma = cross2(t0, t1);
      const double want =
          -3.0 * gamma * gamma * p.alpha * p.beta * discriminant_I(p);
      CHECK(testsup::rel_err(det, want) <= 1e-9);
    }
  }
}

TEST_CASE("loop roots") {
  SUBCASE("(7,7): the golden pair") {
    const LoopRoots lr = loop_roots({7, 7});
    REQUIRE(lr.roots.has_value());
    const double s5 = std::sqrt(5.0);
    CHECK(lr.roots->first ==
          doctest::Approx((735.0 - 245.0 * s5) / 490.0).epsilon(1e-12));
    CHECK(lr.roots->second ==
          doctest::Approx((735.0 + 245.0 * s5) / 490.0).epsilon(1e-12));
  }
  SUBCASE("(1,1): both roots negative, no loop on the segment") {
    const LoopRoots lr = loop_roots({1, 1});
    REQUIRE(lr.roots.has_value());
    const double s5 = std::sqrt(5.0);
    CHECK(lr.roots->first ==
          doctest::Approx((3.0 + s5) / -2.0).epsilon(1e-12));
    CHECK(lr.roots->second ==
          doctest::Approx((3.0 - s5) / -2.0).epsilon(1e-12));
    CHECK(lr.roots->second < 0.0);
  }
  SUBCASE("(4,4): radicand negative, no roots") {
    const LoopRoots lr = loop_roots({4, 4});
    CHECK_FALSE(lr.roots.has_value());
    REQUIRE_FALSE(lr.notes.empty());
    CHECK(lr.notes[0].find("complex") != std::string::npos);
  }
}

TEST_CASE("loop boundary parabolas") {
  CHECK(loop_boundary_values({0, 3}).first == 0.0);
  CHECK(loop_boundary_values({3, 0}).second == 0.0);
  CHECK(loop_boundary_values({7, 7}).first == 35.0);
}

TEST_CASE("classify: canonical instances") {
  CHECK(classify({2, 2}).shape.kind == ShapeKind::Quadratic);
  CHECK(classify({1.5, 1.5}).shape.kind == ShapeKind::Convex);
  CHECK(classify({1, 1}).shape.kind == ShapeKind::Convex);
  CHECK(classify({-1, 1}).shape.kind == ShapeKind::SingleInflection);
  CHECK(classify({4, 4}).shape.kind == ShapeKind::DoubleInflection);
  CHECK(classify({7, 7}).shape.kind == ShapeKind::Loop);

  const ClassificationReport cusp = classify({6, 6});
  CHECK(cusp.shape.kind == ShapeKind::Cusp);
  REQUIRE(cusp.shape.roots_t.size() == 1);
  CHECK(cusp.shape.roots_t[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cusp.I == 0.0);

  const ClassificationReport ep = classify({0.0, 5.0});
  CHECK(ep.shape.kind == ShapeKind::EndpointDegenerate);
  CHECK(ep.shape.endpoint == EndpointTag::Start);
  CHECK(classify({5.0, 1e-12}).shape.endpoint == EndpointTag::End);
}

TEST_CASE("classify: I = 0 inside the unit square stays convex") {
  const ClassificationReport rep = classify({1.0, 8.0 / 3.0});
  CHECK(std::fabs(rep.I) <= 1e-12);
  CHECK(rep.shape.kind == ShapeKind::Convex);
  bool noted = false;
  for (const auto& n : rep.notes)
    noted = noted || n.find("outside segment") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("classify: symmetry under parameter swap") {
  Rng rng(15);
  for (int k = 0; k < 2000; ++k) {
    const ShapeParams p = testsup::random_params_with_margin(rng);
    const ClassificationReport a = classify(p);
    const ClassificationReport b = classify({p.beta, p.alpha});
    CHECK(a.shape.kind == b.shape.kind);
    // Roots map through u <-> 1/u under the swap.
    if (a.shape.roots_u.size() == 2 && a.shape.kind != ShapeKind::Cusp) {
      REQUIRE(b.shape.roots_u.size() == 2);
      CHECK(a.shape.roots_u[0] ==
            doctest::Approx(1.0 / b.shape.roots_u[1]).epsilon(1e-8));
      CHECK(a.shape.roots_u[1] ==
            doctest::Approx(1.0 / b.shape.roots_u[0]).epsilon(1e-8));
    }
  }
}

TEST_CASE("classify_curve: geometry independence and collinearity") {
  Rng rng(21);
  for (const ShapeParams p :
       {ShapeParams{7, 7}, ShapeParams{4, 4}, ShapeParams{-1, 1},
        ShapeParams{1.5, 1.5}}) {
    const ShapeKind want = classify(p).shape.kind;
    for (int k = 0; k < 100; ++k) {
      const CurveInstance c{testsup::random_h_polygon(rng), p};
      CHECK(classify_curve(c).shape.kind == want);
    }
  }
  const CurveInstance flat{ControlPolygon::h_form({0, 0}, {1, 0}, {3, 0}),
                           ShapeParams(4, 4)};
  CHECK(classify_curve(flat).shape.kind == ShapeKind::Collinear);
  const CurveInstance general{ControlPolygon({0, 0}, {1, 0}, {2, 1}, {3, 0}),
                              ShapeParams(4, 4)};
  CHECK_THROWS_AS(classify_curve(general), std::invalid_argument);
}

TEST_CASE("loop payload: the mapped t-pair coincides in the plane") {
  Rng rng(25);
  const ClassificationReport rep = classify({7, 7});
  REQUIRE(rep.shape.roots_t.size() == 2);
  for (int k = 0; k < 30; ++k) {
    const CurveInstance c{testsup::random_h_polygon(rng), ShapeParams(7, 7)};
    const Point2 zp = evaluate(c, rep.shape.roots_t[0]);
    const Point2 zq = evaluate(c, rep.shape.roots_t[1]);
    CHECK(distance(zp, zq) <= 1e-9 * c.diameter());
  }
}

TEST_CASE("cusp payload: velocity vanishes at the reported parameter") {
  for (double beta : {6.0, -2.0, 5.0}) {
    const double alpha = cusp_alpha_for_beta(beta);
    const ClassificationReport rep = classify({alpha, beta});
    REQUIRE(rep.shape.kind == ShapeKind::Cusp);
    const double t = rep.shape.roots_t[0];
    Rng rng(27);
    for (int k = 0; k < 10; ++k) {
      const CurveInstance c{testsup::random_h_polygon(rng),
                            ShapeParams(alpha, beta)};
      CHECK(first_derivative(c, t).norm() <= 1e-8 * c.diameter());
    }
  }
}

TEST_CASE("region labels") {
  CHECK(region_label({1.5, 1.5}) == "C");
  CHECK(region_label({1, 1}) == "C");
  CHECK(region_label({2, 2}) == "C");
  CHECK(region_label({4, 4}) == "D");
  CHECK(region_label({7, 7}) == "E");
  CHECK(region_label({6, 6}) == "I-curve");
  CHECK(region_label({1.5, 5}) == "F");
  CHECK(region_label({-2, 6}) == "V");
  CHECK(region_label({-4, 3.75}) == "U");
  CHECK(region_label({-2, 1.5}) == "S");
  CHECK(region_label({-3, -3}) == "R");
  CHECK(region_label({6, -2}) == "H");
  // Mirror components the figure does not letter stay unlabeled.
  CHECK(region_label({5, 1.5}) == "unlabeled");   // F-mirror strip
  CHECK(region_label({1.5, -2}) == "unlabeled");  // S-mirror strip
  CHECK(region_label({3.75, -4}) == "unlabeled"); // U-mirror sliver
}
