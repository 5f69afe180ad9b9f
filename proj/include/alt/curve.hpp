#pragma once

// The planar cubic curve with two shape parameters (alpha, beta):
// basis functions, evaluation, derivatives, signed curvature and the
// t <-> u reparametrization used for root bookkeeping.
//
// The curve is
//   Z(t) = F0(t) P0 + F1(t) P1 + F2(t) P2 + F3(t) P3,   t in [0, 1]
// with
//   F0 = (1-t)^2 (1 + (2-alpha) t)     F2 = beta t^2 (1-t)
//   F1 = alpha (1-t)^2 t               F3 = t^2 (1 + (2-beta)(1-t))
// which reduces to the cubic Bernstein basis at alpha = beta = 3.

#include <stdexcept>
#include <string>

#include "alt/geometry.hpp"

namespace alt {

/// Thrown by signed_curvature when the velocity vanishes (cusp vicinity).
class SingularVelocityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The pair (alpha, beta) scaling the endpoint tangents. Untrimmed: any
/// finite real values are accepted, no range restriction.
struct ShapeParams {
  double alpha = 3.0;
  double beta = 3.0;

  ShapeParams() = default;
  ShapeParams(double a, double b) : alpha(a), beta(b) {
    if (!std::isfinite(alpha) || !std::isfinite(beta))
      throw std::invalid_argument("ShapeParams: nonfinite parameter");
  }
};

/// Control polygon P0..P3. The classification theory assumes the H-form,
/// where the two middle points coincide (P1 = P2 = H).
struct ControlPolygon {
  Point2 p0, p1, p2, p3;

  ControlPolygon() = default;
  ControlPolygon(Point2 a, Point2 b, Point2 c, Point2 d)
      : p0(a), p1(b), p2(c), p3(d) {}

  static ControlPolygon h_form(Point2 p0, Point2 h, Point2 p3) {
    return {p0, h, h, p3};
  }

  /// Largest pairwise distance between control points.
  double diameter() const;

  /// True when |p1 - p2| <= rel_tol * diameter().
  bool is_h_form(double rel_tol = kIdentityTol) const;
};

/// A concrete evaluable curve: polygon plus shape parameters.
struct CurveInstance {
  ControlPolygon polygon;
  ShapeParams params;

  Vec2 tangent0() const { return polygon.p1 - polygon.p0; }  // T0 = P1 - P0
  Vec2 tangent1() const { return polygon.p3 - polygon.p2; }  // T1 = P3 - P2
  /// Gamma = T0 x T1; the analytic classification requires Gamma != 0.
  double gamma() const { return cross2(tangent0(), tangent1()); }
  double diameter() const { return polygon.diameter(); }
};

struct BasisValues {
  double f0 = 0, f1 = 0, f2 = 0, f3 = 0;
  double sum() const { return f0 + f1 + f2 + f3; }
};

/// The four basis values at t in [0, 1]. Sums to 1 up to rounding.
BasisValues basis(const ShapeParams& params, double t);
/// First derivatives dFi/dt of the basis.
BasisValues basis_derivative(const ShapeParams& params, double t);
/// Second derivatives d2Fi/dt2.
BasisValues basis_second_derivative(const ShapeParams& params, double t);

/// Z(t) as the basis combination of the control points.
Point2 evaluate(const CurveInstance& curve, double t);

/// Tangent-frame evaluation Z(t) = P0 + w0(t) T0 + w1(t) T1.
/// Requires an H-form polygon (throws std::invalid_argument otherwise).
Point2 evaluate_tangent_form(const CurveInstance& curve, double t);

/// Derivative evaluation route. Auto picks the tangent-frame closed forms
/// for H-form polygons and differentiates the basis otherwise.
enum class DerivativePath { Auto, TangentFrame, Basis };

Vec2 first_derivative(const CurveInstance& curve, double t,
                      DerivativePath path = DerivativePath::Auto);
Vec2 second_derivative(const CurveInstance& curve, double t,
                       DerivativePath path = DerivativePath::Auto);

/// Z'(t) x Z''(t) in closed form, -2 Gamma Phi(t) with Phi the curvature
/// sign quadratic. Requires an H-form polygon.
double hodograph_cross(const CurveInstance& curve, double t);

/// Signed curvature cross(Z', Z'') / |Z'|^3; positive when the curve bends
/// left. Throws SingularVelocityError when |Z'(t)| <= velocity_tol * diameter.
double signed_curvature(const CurveInstance& curve, double t,
                        double velocity_tol = kCoincidenceTol);

/// t = 1/(1+u), mapping u in [0, inf) onto t in (0, 1].
double reparam_u_to_t(double u);
/// u = (1-t)/t, the inverse map; defined for t in (0, 1].
double reparam_t_to_u(double t);

/// Vector coefficient of t^3 in Z(t): (alpha-2) T0 + (beta-2) T1 in H-form.
/// The zero vector (for independent tangents) iff (alpha, beta) = (2, 2).
Vec2 cubic_coefficient(const CurveInstance& curve);

}  // namespace alt
