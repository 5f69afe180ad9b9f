#pragma once

// Shared helpers for the test suites: deterministic random generators for
// parameters and H-form polygons, and the margin predicate that keeps random
// sweeps away from the class boundaries.

#include <cmath>
#include <random>

#include "alt/classify.hpp"
#include "alt/curve.hpp"

namespace testsup {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline alt::CurveInstance unit_frame_curve(double alpha, double beta) {
  return {alt::ControlPolygon::h_form({0, 0}, {1, 0}, {1, 1}),
          alt::ShapeParams(alpha, beta)};
}

// H-form polygon with well-separated tangent directions (|T0 x T1| >= 0.2).
inline alt::ControlPolygon random_h_polygon(Rng& rng) {
  for (;;) {
    const alt::Point2 p0(uniform(rng, -2, 2), uniform(rng, -2, 2));
    const double a0 = uniform(rng, 0, 6.283185307179586);
    const double a1 = uniform(rng, 0, 6.283185307179586);
    const double l0 = uniform(rng, 0.5, 2.0);
    const double l1 = uniform(rng, 0.5, 2.0);
    const alt::Vec2 t0(l0 * std::cos(a0), l0 * std::sin(a0));
    const alt::Vec2 t1(l1 * std::cos(a1), l1 * std::sin(a1));
    if (std::fabs(alt::cross2(t0, t1)) < 0.2) continue;
    const alt::Point2 h = p0 + t0;
    return alt::ControlPolygon::h_form(p0, h, h + t1);
  }
}

// Distance-like margin from every class boundary: the lines alpha, beta in
// {0, 3}, the I = 0 curve, and the L1/L2 parabolas (first-order distance
// estimate |f| / max(1, |grad f|)).
inline bool margin_ok(double alpha, double beta, double margin) {
  const auto line = [&](double v) { return std::fabs(v) > margin; };
  if (!line(alpha) || !line(alpha - 3.0) || !line(beta) || !line(beta - 3.0))
    return false;
  const double i = 12.0 - 4.0 * (alpha + beta) + alpha * beta;
  const double gi = std::hypot(beta - 4.0, alpha - 4.0);
  if (std::fabs(i) / std::max(1.0, gi) <= margin) return false;
  const double l1 = alpha - 3.0 * beta + beta * beta;
  const double g1 = std::hypot(1.0, 2.0 * beta - 3.0);
  if (std::fabs(l1) / std::max(1.0, g1) <= margin) return false;
  const double l2 = beta - 3.0 * alpha + alpha * alpha;
  const double g2 = std::hypot(2.0 * alpha - 3.0, 1.0);
  if (std::fabs(l2) / std::max(1.0, g2) <= margin) return false;
  return true;
}

inline alt::ShapeParams random_params_with_margin(Rng& rng, double lo = -8.0,
                                                  double hi = 8.0,
                                                  double margin = 0.05) {
  for (;;) {
    const double a = uniform(rng, lo, hi);
    const double b = uniform(rng, lo, hi);
    if (margin_ok(a, b, margin)) return {a, b};
  }
}

// Relative error with a unit floor, for identities whose honest relative
// error is undefined near the identity's zero set.
inline double rel_err(double got, double want) {
  return std::fabs(got - want) /
         std::max({1.0, std::fabs(got), std::fabs(want)});
}

}  // namespace testsup
