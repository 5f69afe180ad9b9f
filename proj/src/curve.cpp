#include "alt/curve.hpp"

#include <algorithm>
#include <cmath>

namespace alt {

namespace {

void check_unit_interval(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error(std::string(who) + ": t outside [0,1]");
}

// Tangent-frame coefficient functions of Z(t) = P0 + w0(t) T0 + w1(t) T1
// and their derivatives (H-form only).
double w0(double a, double t) {
  return t * (a + t * ((3.0 - 2.0 * a) + t * (a - 2.0)));
}
double w1(double b, double t) {
  return t * t * ((3.0 - b) + t * (b - 2.0));
}
double w0_d1(double a, double t) {
  return a + t * (2.0 * (3.0 - 2.0 * a) + t * 3.0 * (a - 2.0));
}
double w1_d1(double b, double t) {
  return t * (2.0 * (3.0 - b) + t * 3.0 * (b - 2.0));
}
double w0_d2(double a, double t) {
  return 2.0 * (3.0 - 2.0 * a) + 6.0 * (a - 2.0) * t;
}
double w1_d2(double b, double t) {
  return 2.0 * (3.0 - b) + 6.0 * (b - 2.0) * t;
}

// Curvature sign quadratic in t:
// Phi(t) = 3(ab - a - b) t^2 - 3 a (b-2) t + a (b-3).
double phi_t(double a, double b, double t) {
  return t * (3.0 * (a * b - a - b) * t - 3.0 * a * (b - 2.0)) + a * (b - 3.0);
}

}  // namespace

double ControlPolygon::diameter() const {
  const Point2 pts[4] = {p0, p1, p2, p3};
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

bool ControlPolygon::is_h_form(double rel_tol) const {
  return distance(p1, p2) <= rel_tol * diameter();
}

BasisValues basis(const ShapeParams& p, double t) {
  check_unit_interval(t, "basis");
  const double s = 1.0 - t;
  return {s * s * (1.0 + (2.0 - p.alpha) * t),
          p.alpha * s * s * t,
          p.beta * t * t * s,
          t * t * (1.0 + (2.0 - p.beta) * s)};
}

BasisValues basis_derivative(const ShapeParams& p, double t) {
  check_unit_interval(t, "basis_derivative");
  const double a = p.alpha, b = p.beta;
  return {-a + t * (2.0 * (2.0 * a - 3.0) + t * 3.0 * (2.0 - a)),
          a * (1.0 + t * (-4.0 + 3.0 * t)),
          b * t * (2.0 - 3.0 * t),
          t * (2.0 * (3.0 - b) + t * 3.0 * (b - 2.0))};
}

BasisValues basis_second_derivative(const ShapeParams& p, double t) {
  check_unit_interval(t, "basis_second_derivative");
  const double a = p.alpha, b = p.beta;
  return {2.0 * (2.0 * a - 3.0) + 6.0 * (2.0 - a) * t,
          a * (-4.0 + 6.0 * t),
          b * (2.0 - 6.0 * t),
          2.0 * (3.0 - b) + 6.0 * (b - 2.0) * t};
}

Point2 evaluate(const CurveInstance& c, double t) {
  const BasisValues f = basis(c.params, t);
  const ControlPolygon& P = c.polygon;
  return {P.p0.x * f.f0 + P.p1.x * f.f1 + P.p2.x * f.f2 + P.p3.x * f.f3,
          P.p0.y * f.f0 + P.p1.y * f.f1 + P.p2.y * f.f2 + P.p3.y * f.f3};
}

Point2 evaluate_tangent_form(const CurveInstance& c, double t) {
  check_unit_interval(t, "evaluate_tangent_form");
  if (!c.polygon.is_h_form())
    throw std::invalid_argument(
        "evaluate_tangent_form: polygon is not H-form (p1 != p2)");
  return c.polygon.p0 + c.tangent0() * w0(c.params.alpha, t) +
         c.tangent1() * w1(c.params.beta, t);
}

namespace {

bool pick_tangent_frame(const CurveInstance& c, DerivativePath path,
                        const char* who) {
  switch (path) {
    case DerivativePath::TangentFrame:
      if (!c.polygon.is_h_form())
        throw std::invalid_argument(std::string(who) +
                                    ": tangent-frame path requires an H-form "
                                    "polygon (p1 == p2)");
      return true;
    case DerivativePath::Basis:
      return false;
    default:
      return c.polygon.is_h_form();
  }
}

}  // namespace

Vec2 first_derivative(const CurveInstance& c, double t, DerivativePath path) {
  check_unit_interval(t, "first_derivative");
  if (pick_tangent_frame(c, path, "first_derivative"))
    return c.tangent0() * w0_d1(c.params.alpha, t) +
           c.tangent1() * w1_d1(c.params.beta, t);
  const BasisValues d = basis_derivative(c.params, t);
  const ControlPolygon& P = c.polygon;
  return {P.p0.x * d.f0 + P.p1.x * d.f1 + P.p2.x * d.f2 + P.p3.x * d.f3,
          P.p0.y * d.f0 + P.p1.y * d.f1 + P.p2.y * d.f2 + P.p3.y * d.f3};
}

Vec2 second_derivative(const CurveInstance& c, double t, DerivativePath path) {
  check_unit_interval(t, "second_derivative");
  if (pick_tangent_frame(c, path, "second_derivative"))
    return c.tangent0() * w0_d2(c.params.alpha, t) +
           c.tangent1() * w1_d2(c.params.beta, t);
  const BasisValues d = basis_second_derivative(c.params, t);
  const ControlPolygon& P = c.polygon;
  return {P.p0.x * d.f0 + P.p1.x * d.f1 + P.p2.x * d.f2 + P.p3.x * d.f3,
          P.p0.y * d.f0 + P.p1.y * d.f1 + P.p2.y * d.f2 + P.p3.y * d.f3};
}

double hodograph_cross(const CurveInstance& c, double t) {
  check_unit_interval(t, "hodograph_cross");
  if (!c.polygon.is_h_form())
    throw std::invalid_argument(
        "hodograph_cross: closed form requires an H-form polygon");
  return -2.0 * c.gamma() * phi_t(c.params.alpha, c.params.beta, t);
}

double signed_curvature(const CurveInstance& c, double t,
                        double velocity_tol) {
  const Vec2 v = first_derivative(c, t);
  const Vec2 w = second_derivative(c, t);
  const double speed = v.norm();
  if (speed <= velocity_tol * c.diameter())
    throw SingularVelocityError("signed_curvature: |Z'(t)| vanishes near t=" +
                                std::to_string(t));
  return cross2(v, w) / (speed * speed * speed);
}

double reparam_u_to_t(double u) {
  if (!(u >= 0.0) || !std::isfinite(u))
    throw std::domain_error("reparam_u_to_t: u must be finite and >= 0");
  return 1.0 / (1.0 + u);
}

double reparam_t_to_u(double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::domain_error("reparam_t_to_u: t must lie in (0,1]");
  return (1.0 - t) / t;
}

Vec2 cubic_coefficient(const CurveInstance& c) {
  const double a = c.params.alpha, b = c.params.beta;
  if (c.polygon.is_h_form())
    return c.tangent0() * (a - 2.0) + c.tangent1() * (b - 2.0);
  const ControlPolygon& P = c.polygon;
  return P.p0 * (2.0 - a) + P.p1 * a - P.p2 * b + P.p3 * (b - 2.0);
}

}  // namespace alt
