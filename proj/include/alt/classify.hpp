#pragma once

// Analytic shape classification of the nondegenerate curve from (alpha, beta)
// alone: inflection count and locations, cusp, loop and the quadratic
// degeneracy, plus the shape-diagram region letters.
//
// The machinery: the curvature sign is governed by the quadratic
//   Phi(u) = alpha(beta-3) u^2 - alpha beta u + (alpha-3) beta
// on u in [0, inf) (u = (1-t)/t), whose discriminant is -3 alpha beta I with
//   I = 12 - 4(alpha + beta) + alpha beta.
// Inflections are the positive simple roots of Phi; I = 0 marks the cusp
// locus; self-intersections come from a second quadratic whose roots must
// both be nonnegative for the loop to lie on the segment.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alt/curve.hpp"
#include "alt/shape_class.hpp"

namespace alt {

/// Coefficients of Phi(u) = c2 u^2 + c1 u + c0.
/// Identity: c1^2 - 4 c2 c0 = -3 alpha beta I.
struct PhiCoefficients {
  double c2 = 0, c1 = 0, c0 = 0;
};

PhiCoefficients phi_coefficients(const ShapeParams& params);

/// I = 12 - 4(alpha + beta) + alpha * beta. Symmetric in alpha <-> beta.
double discriminant_I(const ShapeParams& params);

struct ClassifyTolerances {
  /// Snapping distance to the alpha = 0 / beta = 0 boundaries and to (2,2).
  double param_tol = 1e-9;
  /// |I| <= i_tol_base * (1 + |alpha| + |beta|)^2 is treated as I = 0;
  /// scale-aware because I is quadratic in the parameters.
  double i_tol_base = 1e-9;

  double i_tol(const ShapeParams& params) const;
};

struct RealRoots {
  std::vector<double> roots;  // ascending
  std::vector<std::string> notes;
};

/// Real u-roots of Phi. A complex pair yields an empty list with a
/// "complex roots" note; degenerate coefficient patterns are noted, not errors.
RealRoots inflection_roots(const ShapeParams& params);

struct InflectionCount {
  int count = 0;
  std::vector<double> u;  // strictly positive roots, ascending
  std::vector<double> t;  // mapped locations, ascending
  std::vector<std::string> notes;
};

/// Number of inflection parameters interior to the segment: the strictly
/// positive simple roots of Phi(u). Roots at u = 0 become notes.
InflectionCount count_inflections(const ShapeParams& params);

/// The alpha solving I(alpha, beta) = 0 for a given beta != 4
/// (throws std::domain_error at beta = 4).
double cusp_alpha_for_beta(double beta);

/// Singular parameter t = 2(beta-3) / (3(beta-2)) for parameters within
/// tolerance of I = 0; empty when it falls outside the open segment
/// (u = beta / (2(beta-3)) not positive). The quadratic point (2,2) is
/// rejected with std::domain_error: it has no cusp.
std::optional<double> cusp_parameter(const ShapeParams& params,
                                     const ClassifyTolerances& tol = {});

/// Numeric Sylvester determinant of the two coordinate quadratics of Z'(t)
/// on the geometry (t0, t1); agrees with -3 Gamma^2 alpha beta I.
double resultant_check(const ShapeParams& params, Vec2 t0, Vec2 t1);

struct LoopRoots {
  std::optional<std::pair<double, double>> roots;  // ascending
  std::vector<std::string> notes;
};

/// The two self-intersection parameters in the u-domain, when real and
/// distinct; solves alpha L1 u^2 - alpha beta (8 + alpha beta - 3 alpha
/// - 3 beta) u + beta L2 = 0. Undefined radicand or a degenerate leading
/// coefficient yields no roots plus a note.
LoopRoots loop_roots(const ShapeParams& params);

/// Values of the loop boundary parabolas L1 = alpha - 3 beta + beta^2 and
/// L2 = beta - 3 alpha + alpha^2 (roots of the loop quadratic cross u = 0
/// exactly on these curves).
std::pair<double, double> loop_boundary_values(const ShapeParams& params);

struct ClassificationReport {
  ShapeParams params;
  double I = 0.0;
  PhiCoefficients phi;
  ShapeClass shape;
  std::string region_label;
  std::vector<std::string> notes;
};

/// Full analytic classification. Decision order: quadratic point, vanishing
/// endpoint tangent, cusp (|I| <= tol with interior parameter), loop (both
/// u-roots nonnegative and distinct), then inflection count.
ClassificationReport classify(const ShapeParams& params,
                              const ClassifyTolerances& tol = {});

/// Classification of a concrete instance. Collinear end tangents
/// (Gamma ~ 0) are reported as their own class; non-H-form polygons are
/// rejected (the theory covers only P1 = P2).
ClassificationReport classify_curve(const CurveInstance& curve,
                                    const ClassifyTolerances& tol = {});

/// Shape-diagram letter in {C, D, E, F, H, I-curve, R, S, U, V} where the
/// figure determines one, otherwise "unlabeled".
std::string region_label(const ShapeParams& params,
                         const ClassifyTolerances& tol = {});

}  // namespace alt
