#include "alt/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace alt {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate(const DiagramSpec& spec) {
  if (spec.resolution < 16)
    throw std::invalid_argument("DiagramSpec: resolution must be >= 16");
  if (!(spec.alpha_hi > spec.alpha_lo) || !(spec.beta_hi > spec.beta_lo))
    throw std::invalid_argument("DiagramSpec: degenerate parameter range");
}

}  // namespace

const char* class_color(int code) {
  switch (code) {
    case 0: return "#74c476";  // convex
    case 1: return "#6baed6";  // single inflection
    case 2: return "#9e9ac8";  // double inflection
    case 3: return "#e41a1c";  // cusp
    case 4: return "#fd8d3c";  // loop
    case 5: return "#ffff99";  // quadratic
    case 6: return "#8c6d31";  // endpoint degenerate
    default: return "#969696"; // collinear / unknown
  }
}

const std::array<RepresentativePoint, 9>& representative_points() {
  static const std::array<RepresentativePoint, 9> pts = {{
      {'a', "C", 1.5, 1.5, ShapeKind::Convex},
      {'b', "D", 4.0, 4.0, ShapeKind::DoubleInflection},
      {'c', "I-curve", 6.0, 6.0, ShapeKind::Cusp},
      {'d', "E", 7.0, 7.0, ShapeKind::Loop},
      {'e', "F", 1.5, 5.0, ShapeKind::SingleInflection},
      {'f', "V", -2.0, 6.0, ShapeKind::Convex},
      {'g', "U", -4.0, 3.75, ShapeKind::Loop},
      {'h', "S", -2.0, 1.5, ShapeKind::SingleInflection},
      {'i', "R", -3.0, -3.0, ShapeKind::Convex},
  }};
  return pts;
}

ClassGrid classify_grid(const DiagramSpec& spec) {
  validate(spec);
  ClassGrid grid;
  grid.spec = spec;
  const int res = spec.resolution;
  grid.cells.resize(static_cast<size_t>(res) * res);
  for (int j = 0; j < res; ++j) {
    const double beta = spec.beta_center(j);
    for (int i = 0; i < res; ++i) {
      const ShapeParams p(spec.alpha_center(i), beta);
      grid.cells[static_cast<size_t>(j) * res + i] =
          static_cast<std::uint8_t>(class_code(classify(p).shape.kind));
    }
  }
  return grid;
}

namespace {

// Diagram coordinates: x = alpha - alpha_lo, y = beta_hi - beta (SVG y grows
// downward, the beta axis points up).
struct Mapper {
  const DiagramSpec& spec;
  double sx(double alpha) const { return alpha - spec.alpha_lo; }
  double sy(double beta) const { return spec.beta_hi - beta; }
  bool contains(double alpha, double beta) const {
    return alpha >= spec.alpha_lo && alpha <= spec.alpha_hi &&
           beta >= spec.beta_lo && beta <= spec.beta_hi;
  }
};

// Emits sampled plane curves as one or more polylines, breaking the path
// whenever a sample leaves the parameter window.
class PolylineEmitter {
 public:
  PolylineEmitter(std::string* out, const Mapper& map, const char* id,
                  const char* stroke)
      : out_(out), map_(map), id_(id), stroke_(stroke) {}
  ~PolylineEmitter() { flush(); }

  void add(double alpha, double beta) {
    if (!map_.contains(alpha, beta) || !std::isfinite(alpha) ||
        !std::isfinite(beta)) {
      flush();
      return;
    }
    if (points_.empty()) {
      points_ += "<polyline id=\"";
      points_ += id_;
      points_ += '-';
      points_ += std::to_string(part_);
      points_ += "\" fill=\"none\" stroke=\"";
      points_ += stroke_;
      points_ += "\" stroke-width=\"0.05\" points=\"";
      open_ = true;
    } else {
      points_ += ' ';
    }
    points_ += fmt(map_.sx(alpha));
    points_ += ',';
    points_ += fmt(map_.sy(beta));
    ++count_;
  }

  void flush() {
    if (open_ && count_ >= 2) {
      *out_ += points_;
      *out_ += "\"/>\n";
      ++part_;
    }
    points_.clear();
    open_ = false;
    count_ = 0;
  }

 private:
  std::string* out_;
  const Mapper& map_;
  const char* id_;
  const char* stroke_;
  std::string points_;
  int part_ = 0;
  int count_ = 0;
  bool open_ = false;
};

void emit_line(std::string* out, const Mapper& m, double x0, double y0,
               double x1, double y1, const char* stroke, bool dashed) {
  *out += "<line x1=\"" + fmt(m.sx(x0)) + "\" y1=\"" + fmt(m.sy(y0)) +
          "\" x2=\"" + fmt(m.sx(x1)) + "\" y2=\"" + fmt(m.sy(y1)) +
          "\" stroke=\"" + stroke + "\" stroke-width=\"0.04\"";
  if (dashed) *out += " stroke-dasharray=\"0.2,0.15\"";
  *out += "/>\n";
}

}  // namespace

std::string render_shape_diagram(const ClassGrid& grid) {
  const DiagramSpec& spec = grid.spec;
  validate(spec);
  const int res = spec.resolution;
  const double w = spec.alpha_hi - spec.alpha_lo;
  const double h = spec.beta_hi - spec.beta_lo;
  const double cw = w / res, ch = h / res;
  const Mapper map{spec};

  std::string svg;
  svg.reserve(1 << 20);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         fmt(w) + " " + fmt(h) + "\" width=\"640\" height=\"" +
         fmt(640.0 * h / w) + "\">\n";

  // Raster cells, run-length merged per row.
  svg += "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < res; ++j) {
    const double y = (res - 1 - j) * ch;
    int i = 0;
    while (i < res) {
      const std::uint8_t code = grid.at(i, j);
      int run = 1;
      while (i + run < res && grid.at(i + run, j) == code) ++run;
      svg += "<rect x=\"" + fmt(i * cw) + "\" y=\"" + fmt(y) + "\" width=\"" +
             fmt(run * cw) + "\" height=\"" + fmt(ch) + "\" fill=\"" +
             class_color(code) + "\"/>\n";
      i += run;
    }
  }
  svg += "</g>\n";

  svg += "<g id=\"overlays\">\n";
  if (spec.overlay_axes) {
    if (spec.alpha_lo <= 0.0 && spec.alpha_hi >= 0.0)
      emit_line(&svg, map, 0.0, spec.beta_lo, 0.0, spec.beta_hi, "#333333",
                false);
    if (spec.beta_lo <= 0.0 && spec.beta_hi >= 0.0)
      emit_line(&svg, map, spec.alpha_lo, 0.0, spec.alpha_hi, 0.0, "#333333",
                false);
  }
  if (spec.overlay_param_lines) {
    if (spec.alpha_lo <= 3.0 && spec.alpha_hi >= 3.0)
      emit_line(&svg, map, 3.0, spec.beta_lo, 3.0, spec.beta_hi, "#555555",
                true);
    if (spec.beta_lo <= 3.0 && spec.beta_hi >= 3.0)
      emit_line(&svg, map, spec.alpha_lo, 3.0, spec.alpha_hi, 3.0, "#555555",
                true);
  }
  if (spec.overlay_i_curve) {
    // I = 0 sampled as alpha = 4(beta-3)/(beta-4), split at the beta = 4 pole.
    PolylineEmitter path(&svg, map, "i-curve", "#b30000");
    const int nsamp = 8 * res;
    const double step = (spec.beta_hi - spec.beta_lo) / nsamp;
    for (int k = 0; k <= nsamp; ++k) {
      const double beta = spec.beta_lo + k * step;
      if (std::fabs(beta - 4.0) < 1e-6) {
        path.flush();
        continue;
      }
      path.add(cusp_alpha_for_beta(beta), beta);
    }
  }
  if (spec.overlay_parabolas) {
    {
      PolylineEmitter path(&svg, map, "l1", "#084594");
      const int nsamp = 8 * res;
      const double step = (spec.beta_hi - spec.beta_lo) / nsamp;
      for (int k = 0; k <= nsamp; ++k) {
        const double beta = spec.beta_lo + k * step;
        path.add(3.0 * beta - beta * beta, beta);  // L1 = 0
      }
    }
    {
      PolylineEmitter path(&svg, map, "l2", "#084594");
      const int nsamp = 8 * res;
      const double step = (spec.alpha_hi - spec.alpha_lo) / nsamp;
      for (int k = 0; k <= nsamp; ++k) {
        const double alpha = spec.alpha_lo + k * step;
        path.add(alpha, 3.0 * alpha - alpha * alpha);  // L2 = 0
      }
    }
  }
  svg += "</g>\n";

  // Legend: fixed class palette.
  svg += "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"0.45\">\n";
  static const char* const names[8] = {
      "convex",        "1 inflection", "2 inflections", "cusp (I=0)",
      "loop",          "quadratic",    "endpoint degenerate", "collinear"};
  for (int code = 0; code < 8; ++code) {
    const double y = 0.35 + 0.6 * code;
    svg += "<rect x=\"0.3\" y=\"" + fmt(y) +
           "\" width=\"0.45\" height=\"0.45\" stroke=\"#000\" stroke-width=\"0.02\" fill=\"" +
           class_color(code) + "\"/>\n";
    svg += "<text x=\"0.9\" y=\"" + fmt(y + 0.38) + "\">" + names[code] +
           "</text>\n";
  }
  svg += "</g>\n";

  // Region letters at the representative points.
  svg += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"0.6\" "
         "text-anchor=\"middle\">\n";
  for (const RepresentativePoint& rp : representative_points()) {
    if (!map.contains(rp.alpha, rp.beta)) continue;
    svg += "<text x=\"" + fmt(map.sx(rp.alpha)) + "\" y=\"" +
           fmt(map.sy(rp.beta)) + "\">" + rp.region + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string export_grid_csv(const ClassGrid& grid) {
  const DiagramSpec& spec = grid.spec;
  validate(spec);
  std::string csv = "alpha,beta,class_code,class_name,I\n";
  csv.reserve(grid.cells.size() * 48);
  for (int j = 0; j < spec.resolution; ++j) {
    const double beta = spec.beta_center(j);
    for (int i = 0; i < spec.resolution; ++i) {
      const double alpha = spec.alpha_center(i);
      const int code = grid.at(i, j);
      csv += fmt17(alpha);
      csv += ',';
      csv += fmt17(beta);
      csv += ',';
      csv += std::to_string(code);
      csv += ',';
      csv += class_name(static_cast<ShapeKind>(code));
      csv += ',';
      csv += fmt17(discriminant_I(ShapeParams(alpha, beta)));
      csv += '\n';
    }
  }
  return csv;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_curve_svg(const CurveInstance& curve,
                             const ClassificationReport& report,
                             const CurveRenderOptions& options) {
  const int n = std::max(256, options.samples);
  std::vector<Point2> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = evaluate(curve, static_cast<double>(i) / (n - 1));

  double xlo = pts[0].x, xhi = pts[0].x, ylo = pts[0].y, yhi = pts[0].y;
  const Point2 poly[4] = {curve.polygon.p0, curve.polygon.p1, curve.polygon.p2,
                          curve.polygon.p3};
  auto grow = [&](Point2 p) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  };
  for (const Point2& p : pts) grow(p);
  for (const Point2& p : poly) grow(p);
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  const double pad = 0.08 * span;
  xlo -= pad;
  xhi += pad;
  ylo -= pad;
  yhi += pad;

  auto sx = [&](double x) { return x - xlo; };
  auto sy = [&](double y) { return yhi - y; };
  const double lw = 0.006 * span;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         fmt(xhi - xlo) + " " + fmt(yhi - ylo) + "\" width=\"480\" height=\"" +
         fmt(480.0 * (yhi - ylo) / (xhi - xlo)) + "\">\n";
  svg += "<metadata>{\"label\":\"" + json_escape(options.label) +
         "\",\"alpha\":" + fmt17(curve.params.alpha) +
         ",\"beta\":" + fmt17(curve.params.beta) + ",\"class\":\"" +
         class_name(report.shape.kind) + "\",\"region\":\"" +
         json_escape(report.region_label) + "\"}</metadata>\n";
  svg += "<title>" + std::string(class_name(report.shape.kind)) + " (alpha=" +
         fmt(curve.params.alpha) + ", beta=" + fmt(curve.params.beta) +
         ")</title>\n";

  if (options.show_polygon) {
    svg += "<polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"" +
           fmt(0.6 * lw) + "\" stroke-dasharray=\"" + fmt(3 * lw) + "," +
           fmt(2 * lw) + "\" points=\"";
    for (int k = 0; k < 4; ++k) {
      if (k) svg += ' ';
      svg += fmt(sx(poly[k].x)) + "," + fmt(sy(poly[k].y));
    }
    svg += "\"/>\n";
    for (int k = 0; k < 4; ++k)
      svg += "<circle cx=\"" + fmt(sx(poly[k].x)) + "\" cy=\"" +
             fmt(sy(poly[k].y)) + "\" r=\"" + fmt(1.2 * lw) +
             "\" fill=\"#999999\"/>\n";
  }

  svg += "<polyline fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"" +
         fmt(lw) + "\" points=\"";
  for (int i = 0; i < n; ++i) {
    if (i) svg += ' ';
    svg += fmt(sx(pts[i].x)) + "," + fmt(sy(pts[i].y));
  }
  svg += "\"/>\n";

  const ShapeClass& sc = report.shape;
  const double ms = 2.5 * lw;  // marker size
  if (sc.kind == ShapeKind::SingleInflection ||
      sc.kind == ShapeKind::DoubleInflection) {
    for (double t : sc.roots_t) {
      const Point2 z = evaluate(curve, t);
      svg += "<circle class=\"marker-inflection\" cx=\"" + fmt(sx(z.x)) +
             "\" cy=\"" + fmt(sy(z.y)) + "\" r=\"" + fmt(ms) +
             "\" fill=\"none\" stroke=\"#0571b0\" stroke-width=\"" +
             fmt(0.7 * lw) + "\"/>\n";
    }
  } else if (sc.kind == ShapeKind::Cusp && !sc.roots_t.empty()) {
    const Point2 z = evaluate(curve, sc.roots_t.front());
    svg += "<g class=\"marker-cusp\" stroke=\"#ca0020\" stroke-width=\"" +
           fmt(0.7 * lw) + "\">";
    svg += "<line x1=\"" + fmt(sx(z.x) - ms) + "\" y1=\"" + fmt(sy(z.y) - ms) +
           "\" x2=\"" + fmt(sx(z.x) + ms) + "\" y2=\"" + fmt(sy(z.y) + ms) +
           "\"/>";
    svg += "<line x1=\"" + fmt(sx(z.x) - ms) + "\" y1=\"" + fmt(sy(z.y) + ms) +
           "\" x2=\"" + fmt(sx(z.x) + ms) + "\" y2=\"" + fmt(sy(z.y) - ms) +
           "\"/>";
    svg += "</g>\n";
  } else if (sc.kind == ShapeKind::Loop && !sc.roots_t.empty()) {
    const Point2 z = evaluate(curve, sc.roots_t.front());
    svg += "<path class=\"marker-loop\" d=\"M " + fmt(sx(z.x)) + " " +
           fmt(sy(z.y) - ms) + " L " + fmt(sx(z.x) + ms) + " " + fmt(sy(z.y)) +
           " L " + fmt(sx(z.x)) + " " + fmt(sy(z.y) + ms) + " L " +
           fmt(sx(z.x) - ms) + " " + fmt(sy(z.y)) +
           " Z\" fill=\"none\" stroke=\"#e66101\" stroke-width=\"" +
           fmt(0.7 * lw) + "\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace alt
