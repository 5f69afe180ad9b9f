// altcurve command-line tool: evaluation, analytic classification with an
// optional oracle cross-check, shape-diagram export, the nine-curve gallery,
// and the parallel-tangent degenerate case.
//
// Exit codes: 0 success, 2 invalid flags or inputs, 3 oracle disagreement,
// 4 unwritable output.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alt/classify.hpp"
#include "alt/degenerate.hpp"
#include "alt/diagram.hpp"
#include "alt/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitOutput = 4;

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string json_number_list(const std::vector<double>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += num17(xs[i]);
  }
  return out + "]";
}

std::string json_string_list(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += '"' + json_escape(xs[i]) + '"';
  }
  return out + "]";
}

// "x0,y0;x1,y1;x2,y2" -> points. Throws std::invalid_argument on bad input.
std::vector<alt::Point2> parse_points(const std::string& text) {
  std::vector<alt::Point2> pts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    double x, y;
    char sep = 0;
    std::stringstream ps(part);
    if (!(ps >> x >> sep >> y) || sep != ',' || (ps >> part, !ps.eof()))
      throw std::invalid_argument("malformed point '" + part + "'");
    pts.emplace_back(x, y);
  }
  if (pts.empty()) throw std::invalid_argument("no points given");
  return pts;
}

alt::CurveInstance curve_from_points(const std::vector<alt::Point2>& pts,
                                     const alt::ShapeParams& params) {
  if (pts.size() == 3)
    return {alt::ControlPolygon::h_form(pts[0], pts[1], pts[2]), params};
  if (pts.size() == 4)
    return {alt::ControlPolygon{pts[0], pts[1], pts[2], pts[3]}, params};
  throw std::invalid_argument("expected 3 (H-form) or 4 control points");
}

alt::CurveInstance default_curve(const alt::ShapeParams& params) {
  // Unit tangent frame: P0 = (0,0), T0 = (1,0), T1 = (0,1).
  return {alt::ControlPolygon::h_form({0, 0}, {1, 0}, {1, 1}), params};
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

std::string classify_json(const alt::ClassificationReport& rep,
                          const std::optional<alt::ShapeKind>& oracle_kind) {
  std::string j = "{";
  j += "\"alpha\":" + num17(rep.params.alpha);
  j += ",\"beta\":" + num17(rep.params.beta);
  j += ",\"I\":" + num17(rep.I);
  j += ",\"phi\":[" + num17(rep.phi.c2) + ',' + num17(rep.phi.c1) + ',' +
       num17(rep.phi.c0) + ']';
  j += ",\"class\":\"" + std::string(alt::class_name(rep.shape.kind)) + '"';
  j += ",\"roots_u\":" + json_number_list(rep.shape.roots_u);
  j += ",\"roots_t\":" + json_number_list(rep.shape.roots_t);
  j += ",\"region\":\"" + json_escape(rep.region_label) + '"';
  j += ",\"notes\":" + json_string_list(rep.notes);
  if (oracle_kind)
    j += ",\"oracle_class\":\"" +
         std::string(alt::class_name(*oracle_kind)) + '"';
  j += "}";
  return j;
}

void print_classify_text(const alt::ClassificationReport& rep,
                         const std::optional<alt::ShapeKind>& oracle_kind) {
  std::cout << "alpha:   " << num17(rep.params.alpha) << "\n"
            << "beta:    " << num17(rep.params.beta) << "\n"
            << "I:       " << num17(rep.I) << "\n"
            << "phi:     c2=" << num17(rep.phi.c2)
            << " c1=" << num17(rep.phi.c1) << " c0=" << num17(rep.phi.c0)
            << "\n"
            << "class:   " << alt::class_name(rep.shape.kind) << "\n"
            << "region:  " << rep.region_label << "\n";
  if (!rep.shape.roots_u.empty()) {
    std::cout << "roots_u:";
    for (double u : rep.shape.roots_u) std::cout << ' ' << num17(u);
    std::cout << "\nroots_t:";
    for (double t : rep.shape.roots_t) std::cout << ' ' << num17(t);
    std::cout << "\n";
  }
  for (const std::string& n : rep.notes) std::cout << "note:    " << n << "\n";
  if (oracle_kind)
    std::cout << "oracle:  " << alt::class_name(*oracle_kind) << "\n";
}

int run_classify(double alpha, double beta, bool as_json, bool with_oracle,
                 const std::string& geometry) {
  alt::CurveInstance curve = default_curve(alt::ShapeParams(alpha, beta));
  if (!geometry.empty()) {
    const auto pts = parse_points(geometry);
    if (pts.size() != 3)
      throw std::invalid_argument("--geometry expects 3 points (P0;H;P3)");
    curve = curve_from_points(pts, alt::ShapeParams(alpha, beta));
  }
  const alt::ClassificationReport rep = alt::classify_curve(curve);
  std::optional<alt::ShapeKind> oracle_kind;
  if (with_oracle && rep.shape.kind != alt::ShapeKind::Collinear)
    oracle_kind = alt::oracle_classify(curve);

  if (as_json)
    std::cout << classify_json(rep, oracle_kind) << "\n";
  else
    print_classify_text(rep, oracle_kind);

  if (oracle_kind && *oracle_kind != rep.shape.kind) return kExitOracleMismatch;
  return kExitOk;
}

int run_eval(double alpha, double beta, const std::string& points, int samples,
             const std::string& csv_path) {
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  const alt::ShapeParams params(alpha, beta);
  const alt::CurveInstance curve =
      points.empty() ? default_curve(params)
                     : curve_from_points(parse_points(points), params);
  std::string csv = "t,x,y,kappa\n";
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const alt::Point2 z = alt::evaluate(curve, t);
    double kappa;
    try {
      kappa = alt::signed_curvature(curve, t);
    } catch (const alt::SingularVelocityError&) {
      kappa = std::numeric_limits<double>::quiet_NaN();
    }
    csv += num17(t) + "," + num17(z.x) + "," + num17(z.y) + "," + num17(kappa) +
           "\n";
  }
  if (csv_path.empty()) {
    std::cout << csv;
    return kExitOk;
  }
  if (!write_file(csv_path, csv)) {
    std::cerr << "error: cannot write " << csv_path << "\n";
    return kExitOutput;
  }
  return kExitOk;
}

int run_diagram(const std::string& range, int resolution,
                const std::string& out_path, const std::string& csv_path) {
  alt::DiagramSpec spec;
  spec.resolution = resolution;
  if (!range.empty()) {
    double lo, hi;
    char sep = 0;
    std::stringstream ss(range);
    if (!(ss >> lo >> sep >> hi) || sep != ',' || !(hi > lo))
      throw std::invalid_argument("--range expects 'lo,hi' with lo < hi");
    spec.alpha_lo = spec.beta_lo = lo;
    spec.alpha_hi = spec.beta_hi = hi;
  }
  const alt::ClassGrid grid = alt::classify_grid(spec);
  if (!write_file(out_path, alt::render_shape_diagram(grid))) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitOutput;
  }
  if (!csv_path.empty() && !write_file(csv_path, alt::export_grid_csv(grid))) {
    std::cerr << "error: cannot write " << csv_path << "\n";
    return kExitOutput;
  }
  return kExitOk;
}

int run_examples(const std::string& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  for (const alt::RepresentativePoint& rp : alt::representative_points()) {
    const alt::ShapeParams params(rp.alpha, rp.beta);
    const alt::CurveInstance curve = default_curve(params);
    const alt::ClassificationReport rep = alt::classify(params);
    alt::CurveRenderOptions opts;
    opts.label = std::string(1, rp.letter);
    const std::string svg = alt::render_curve_svg(curve, rep, opts);
    const std::string path =
        (std::filesystem::path(outdir) / (opts.label + ".svg")).string();
    if (!write_file(path, svg)) {
      std::cerr << "error: cannot write " << path << "\n";
      return kExitOutput;
    }
  }
  return kExitOk;
}

int run_degenerate(double a, double b, double m, bool as_json) {
  const auto cfg = alt::DegenerateConfig::from_tangent_magnitudes(a, b, m);
  const alt::DegenerateReport rep = alt::degenerate_classify(cfg);
  if (as_json) {
    std::string j = "{";
    j += "\"a\":" + num17(rep.a);
    j += ",\"b\":" + num17(rep.b);
    j += ",\"m\":" + num17(rep.m);
    j += ",\"inflections\":" + std::to_string(rep.inflections);
    j += ",\"inflection_t\":";
    j += rep.inflection_t ? num17(*rep.inflection_t) : "null";
    j += ",\"cusp\":false,\"loop\":false}";
    std::cout << j << "\n";
  } else {
    std::cout << "a:           " << num17(rep.a) << "\n"
              << "b:           " << num17(rep.b) << "\n"
              << "m:           " << num17(rep.m) << "\n"
              << "inflections: " << rep.inflections << "\n";
    if (rep.inflection_t)
      std::cout << "inflection_t: " << num17(*rep.inflection_t) << "\n";
    std::cout << "cusp:        false\nloop:        false\n";
    for (const std::string& n : rep.notes) std::cout << "note:        " << n << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar cubic curve shape analysis"};
  app.require_subcommand(1);

  // classify
  double alpha = 0, beta = 0;
  bool as_json = false, with_oracle = false;
  std::string geometry;
  CLI::App* classify = app.add_subcommand(
      "classify", "Analytic shape classification from (alpha, beta)");
  classify->add_option("--alpha", alpha, "Shape parameter alpha")->required();
  classify->add_option("--beta", beta, "Shape parameter beta")->required();
  classify->add_flag("--json", as_json, "Machine-readable JSON output");
  classify->add_flag("--oracle", with_oracle,
                     "Cross-check against the numeric oracle");
  classify->add_option("--geometry", geometry,
                       "H-form control points \"x0,y0;x1,y1;x2,y2\"");

  // eval
  double e_alpha = 0, e_beta = 0;
  int e_samples = 64;
  std::string e_points, e_csv;
  CLI::App* eval = app.add_subcommand(
      "eval", "Sample curve points and signed curvature as CSV");
  eval->add_option("--alpha", e_alpha, "Shape parameter alpha")->required();
  eval->add_option("--beta", e_beta, "Shape parameter beta")->required();
  eval->add_option("--points", e_points,
                   "3 (H-form) or 4 control points \"x,y;x,y;...\"");
  eval->add_option("--samples", e_samples, "Number of samples (default 64)");
  eval->add_option("--csv", e_csv, "Write CSV to this file instead of stdout");

  // diagram
  std::string d_range, d_out, d_csv;
  int d_resolution = 400;
  CLI::App* diagram =
      app.add_subcommand("diagram", "Render the shape diagram as SVG");
  diagram->add_option("--range", d_range, "Axis range \"lo,hi\" (default -6,10)");
  diagram->add_option("--resolution", d_resolution,
                      "Grid cells per axis (default 400)");
  diagram->add_option("--out", d_out, "Output SVG path")->required();
  diagram->add_option("--csv", d_csv, "Also export the class grid as CSV");

  // examples
  std::string x_outdir;
  CLI::App* examples = app.add_subcommand(
      "examples", "Write the nine labeled example curves (a..i) as SVG");
  examples->add_option("--outdir", x_outdir, "Output directory")->required();

  // degenerate
  double g_a = 0, g_b = 0, g_m = 0;
  bool g_json = false;
  CLI::App* degenerate = app.add_subcommand(
      "degenerate", "Classify a parallel-end-tangent curve from (a, b, m)");
  degenerate->add_option("--a", g_a, "Tangent magnitude a = mu*alpha")->required();
  degenerate->add_option("--b", g_b, "Tangent magnitude b = nu*beta")->required();
  degenerate->add_option("--m", g_m, "Lateral offset m (nonzero)")->required();
  degenerate->add_flag("--json", g_json, "Machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify)
      return run_classify(alpha, beta, as_json, with_oracle, geometry);
    if (*eval) return run_eval(e_alpha, e_beta, e_points, e_samples, e_csv);
    if (*diagram) return run_diagram(d_range, d_resolution, d_out, d_csv);
    if (*examples) return run_examples(x_outdir);
    if (*degenerate) return run_degenerate(g_a, g_b, g_m, g_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
