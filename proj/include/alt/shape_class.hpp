#pragma once

// Shape classification vocabulary shared by the analytic classifier and
// the numeric oracle.

#include <vector>

namespace alt {

enum class ShapeKind {
  Convex,
  SingleInflection,
  DoubleInflection,
  Cusp,
  Loop,
  Quadratic,
  EndpointDegenerate,
  Collinear,
};

/// Which endpoint tangent vanishes for EndpointDegenerate.
enum class EndpointTag { Start, End, Both };

/// Classification outcome with feature locations, when any. Roots are
/// stored ascending, in u on [0, inf) and as the mapped t = 1/(1+u).
struct ShapeClass {
  ShapeKind kind = ShapeKind::Convex;
  std::vector<double> roots_u;
  std::vector<double> roots_t;
  EndpointTag endpoint = EndpointTag::Start;  // only for EndpointDegenerate
};

/// Stable class name ("Convex", "Loop", ...).
const char* class_name(ShapeKind kind);

/// Stable small-integer code used by grids and CSV exports:
/// 0 Convex, 1 SingleInflection, 2 DoubleInflection, 3 Cusp, 4 Loop,
/// 5 Quadratic, 6 EndpointDegenerate, 7 Collinear.
int class_code(ShapeKind kind);

}  // namespace alt
