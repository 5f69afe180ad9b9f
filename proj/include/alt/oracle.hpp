#pragma once

// Classification by brute force, independent of the analytic formulas.
// Consumes only evaluation and derivative queries: curvature sign changes
// for inflections, velocity minimization for cusps, and a sampled-polyline
// sweep with Newton refinement for self-intersections.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alt/curve.hpp"
#include "alt/shape_class.hpp"

namespace alt {

struct OracleSettings {
  int samples = 4096;             // >= 256
  double curvature_eps = 1e-10;   // relative dead band for cross-product signs
  double cusp_velocity_tol = 1e-7;   // x diameter
  double coincidence_tol = 1e-9;     // x diameter
  double interior_margin = 1e-4;     // excluded band near t = 0 and t = 1
};

struct OracleInflections {
  int count = 0;
  std::vector<double> locations;  // bisected t values, ascending
  std::vector<std::string> notes;
};

/// Counts sign changes of Z' x Z'' over (margin, 1-margin); each change is
/// bracketed and bisected to ~1e-12 in t.
OracleInflections oracle_inflection_count(const CurveInstance& curve,
                                          const OracleSettings& settings = {});

/// Dense sampling of |Z'|^2 plus local refinement; reports the minimizer
/// when the refined speed falls below cusp_velocity_tol x diameter.
std::optional<double> oracle_cusp(const CurveInstance& curve,
                                  const OracleSettings& settings = {});

/// All-pairs test on the sampled polyline (adjacent segments excluded),
/// then two-variable Newton refinement of Z(s) = Z(t); falls back to
/// bisection on the segment pair if Newton stalls. Returns (t_p, t_q)
/// with t_p < t_q.
std::optional<std::pair<double, double>> oracle_self_intersection(
    const CurveInstance& curve, const OracleSettings& settings = {});

/// Combined verdict with precedence quadratic > cusp > loop > inflections.
ShapeKind oracle_classify(const CurveInstance& curve,
                          const OracleSettings& settings = {});

}  // namespace alt
