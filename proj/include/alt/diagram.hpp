#pragma once

// Shape-diagram rasterization over the (alpha, beta) plane and SVG output:
// the class grid, the full diagram with the I = 0 curve and the L1/L2
// parabolas, individual curve plots with feature markers, and CSV export.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alt/classify.hpp"
#include "alt/curve.hpp"

namespace alt {

struct DiagramSpec {
  double alpha_lo = -6.0, alpha_hi = 10.0;
  double beta_lo = -6.0, beta_hi = 10.0;
  int resolution = 400;  // cells per axis, >= 16
  bool overlay_axes = true;
  bool overlay_param_lines = true;  // alpha = 3 and beta = 3
  bool overlay_i_curve = true;
  bool overlay_parabolas = true;

  double alpha_center(int i) const {
    return alpha_lo + (i + 0.5) * (alpha_hi - alpha_lo) / resolution;
  }
  double beta_center(int j) const {
    return beta_lo + (j + 0.5) * (beta_hi - beta_lo) / resolution;
  }
};

/// Row-major class codes (see class_code); cells[j * resolution + i] holds
/// the class at (alpha_center(i), beta_center(j)).
struct ClassGrid {
  DiagramSpec spec;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(int i, int j) const { return cells[static_cast<size_t>(j) * spec.resolution + i]; }
};

/// Classifies every cell center. Throws std::invalid_argument on a
/// degenerate range or resolution < 16.
ClassGrid classify_grid(const DiagramSpec& spec);

/// SVG 1.1 document: run-length cell rectangles, overlay curves, a legend
/// box, and region letters at the nine representative points. Byte-identical
/// for identical input.
std::string render_shape_diagram(const ClassGrid& grid);

struct CurveRenderOptions {
  int samples = 512;       // >= 256 enforced
  std::string label;       // letter tag stored in the metadata block
  bool show_polygon = true;
};

/// SVG plot of one curve: sampled polyline, dashed control polygon, and
/// markers (circle = inflection, cross = cusp, diamond = self-intersection).
/// A <metadata> element carries {label, alpha, beta, class, region} as JSON.
std::string render_curve_svg(const CurveInstance& curve,
                             const ClassificationReport& report,
                             const CurveRenderOptions& options = {});

/// CSV with header alpha,beta,class_code,class_name,I and one row per cell.
/// UTF-8, LF line endings, '.' decimal separator.
std::string export_grid_csv(const ClassGrid& grid);

/// Fill color of a class code in the rendered diagram.
const char* class_color(int code);

/// One representative parameter pair per labeled diagram region.
struct RepresentativePoint {
  char letter;             // 'a'..'i'
  const char* region;      // diagram letter
  double alpha, beta;
  ShapeKind category;
};

/// The gallery set: (a) C convex, (b) D double inflection, (c) I-curve cusp,
/// (d) E loop, (e) F one inflection, (f) V convex, (g) U loop,
/// (h) S one inflection, (i) R convex.
const std::array<RepresentativePoint, 9>& representative_points();

}  // namespace alt
