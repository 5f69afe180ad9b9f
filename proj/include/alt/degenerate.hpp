#pragma once

// Degenerate curves with parallel end tangents: P1 - P0 = mu z0 and
// P3 - P2 = -nu z0 with a lateral offset P2 - P1 = m zs. With a = mu alpha
// and b = nu beta the whole analysis reduces to (a, b, m, Upsilon):
// at most one inflection (iff a b < 0), never a cusp, never a loop.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alt/curve.hpp"

namespace alt {

/// Configuration of a parallel-tangent curve. mu, nu > 0 with signs folded
/// into alpha, beta so (a, b) spans all sign patterns. The data must be
/// consistent: endpoint interpolation forces mu (1 - alpha) = nu (1 - beta),
/// which make() validates.
struct DegenerateConfig {
  Point2 p0;
  Vec2 z0, zs;  // unit vectors; z0 = end tangent direction, zs along P2 - P1
  double mu = 1, nu = 1, m = 1;
  double alpha = 1, beta = 1;

  double a() const { return mu * alpha; }
  double b() const { return nu * beta; }
  double upsilon() const { return cross2(z0, zs); }

  /// Validating constructor: unit directions, Upsilon != 0 (collinear
  /// configurations degenerate to a line segment and are rejected),
  /// mu, nu > 0, m != 0, and the consistency constraint above.
  static DegenerateConfig make(Point2 p0, Vec2 z0, Vec2 zs, double mu,
                               double nu, double m, double alpha, double beta);

  /// Canonical config realizing given tangent magnitudes a, b and offset m:
  /// mu = 1 + max(0, a-b), nu = 1 + max(0, b-a), alpha = a/mu, beta = b/nu.
  static DegenerateConfig from_tangent_magnitudes(double a, double b, double m,
                                                  Point2 p0 = Point2(0, 0),
                                                  Vec2 z0 = Vec2(1, 0),
                                                  Vec2 zs = Vec2(0, 1));
};

/// Derived scalars the whole section runs on.
struct DegenerateDerived {
  double a = 0, b = 0, upsilon = 0;
};

DegenerateDerived degenerate_derived(const DegenerateConfig& config);

/// Control polygon P1 = P0 + mu z0, P2 = P1 + m zs, P3 = P2 - nu z0,
/// together with the shape parameters; evaluating it through the basis
/// matches evaluate_degenerate pointwise.
std::pair<ControlPolygon, ShapeParams> build_degenerate_polygon(
    const DegenerateConfig& config);

/// Closed-form evaluation
/// Z(t) = P0 + m (3-2t) t^2 zs + t (a (1+t-t^2) + b (t-2) t) z0.
Point2 evaluate_degenerate(const DegenerateConfig& config, double t);

/// Cross product Z' x Z'' expressed in u: 6 m (b + a u^2) Upsilon / (1+u)^2.
/// Matches the t-domain cross product at t = 1/(1+u) in value and sign.
double degenerate_cross(const DegenerateConfig& config, double u);

struct DegenerateInflections {
  int count = 0;  // 0 or 1
  std::optional<double> u, t;
  std::vector<std::string> notes;
};

/// One inflection at u = sqrt(-b/a) iff a b < 0, none otherwise.
/// a = 0 is handled as a linear special case with a note.
DegenerateInflections degenerate_inflections(const DegenerateConfig& config);

struct DegenerateReport {
  double a = 0, b = 0, m = 0, upsilon = 0;
  int inflections = 0;
  std::optional<double> inflection_u, inflection_t;
  bool cusp = false;  // resultant -36 a b m^2 Upsilon^2 never vanishes
  bool loop = false;  // the candidate roots are never both positive
  /// Loop-candidate u-roots (defined for a b > 0), reported with their
  /// positivity analysis; at most one can be nonnegative.
  std::optional<std::pair<double, double>> candidate_roots;
  std::vector<std::string> notes;
};

/// Classification under the section's hypotheses; inputs with
/// a b m Upsilon = 0 are rejected with std::domain_error.
DegenerateReport degenerate_classify(const DegenerateConfig& config);

/// Numeric Sylvester determinant of the coordinate quadratics of Z'(t);
/// agrees with -36 a b m^2 Upsilon^2.
double degenerate_resultant(const DegenerateConfig& config);

}  // namespace alt
