#include "alt/classify.hpp"

#include <algorithm>
#include <cmath>

#include "alt/numeric.hpp"

namespace alt {

const char* class_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Convex: return "Convex";
    case ShapeKind::SingleInflection: return "SingleInflection";
    case ShapeKind::DoubleInflection: return "DoubleInflection";
    case ShapeKind::Cusp: return "Cusp";
    case ShapeKind::Loop: return "Loop";
    case ShapeKind::Quadratic: return "Quadratic";
    case ShapeKind::EndpointDegenerate: return "EndpointDegenerate";
    case ShapeKind::Collinear: return "Collinear";
  }
  return "Unknown";
}

int class_code(ShapeKind kind) { return static_cast<int>(kind); }

double discriminant_I(const ShapeParams& p) {
  return 12.0 - 4.0 * (p.alpha + p.beta) + p.alpha * p.beta;
}

PhiCoefficients phi_coefficients(const ShapeParams& p) {
  return {p.alpha * (p.beta - 3.0), -(p.alpha * p.beta),
          (p.alpha - 3.0) * p.beta};
}

double ClassifyTolerances::i_tol(const ShapeParams& p) const {
  const double s = 1.0 + std::fabs(p.alpha) + std::fabs(p.beta);
  return i_tol_base * s * s;
}

RealRoots inflection_roots(const ShapeParams& p) {
  const PhiCoefficients c = phi_coefficients(p);
  const QuadRoots q = solve_quadratic(c.c2, c.c1, c.c0);
  RealRoots out;
  if (q.identically_zero) {
    out.notes.push_back("phi vanishes identically");
    return out;
  }
  if (q.from_linear) {
    if (q.count == 1) {
      out.roots.push_back(q.r0);
      out.notes.push_back("linear phi (zero leading coefficient)");
    } else {
      out.notes.push_back("phi constant and nonzero: no roots");
    }
    return out;
  }
  if (q.count == 0) {
    out.notes.push_back("complex roots");
    return out;
  }
  if (q.double_root) {
    out.roots.push_back(q.r0);
    out.notes.push_back("double root");
    return out;
  }
  out.roots = {q.r0, q.r1};
  return out;
}

InflectionCount count_inflections(const ShapeParams& p) {
  InflectionCount out;
  const PhiCoefficients c = phi_coefficients(p);
  const QuadRoots q = solve_quadratic(c.c2, c.c1, c.c0);
  if (q.identically_zero) {
    out.notes.push_back("phi vanishes identically");
    return out;
  }
  if (q.count == 0) {
    out.notes.push_back(q.from_linear ? "phi constant and nonzero: no roots"
                                      : "complex roots");
    return out;
  }
  if (q.double_root) {
    // Curvature touches zero without a sign change: not an inflection.
    out.notes.push_back(q.r0 > 0.0
                            ? "double phi root inside segment (singular "
                              "parameter, not an inflection)"
                            : "double phi root outside segment");
    return out;
  }
  const double roots[2] = {q.r0, q.r1};
  for (int k = 0; k < q.count; ++k) {
    const double u = roots[k];
    if (u > 0.0) {
      out.u.push_back(u);
      out.t.push_back(reparam_u_to_t(u));
    } else if (u == 0.0) {
      out.notes.push_back("root at u=0 (curvature zero at endpoint t=1)");
    }
  }
  std::sort(out.t.begin(), out.t.end());
  out.count = static_cast<int>(out.u.size());
  return out;
}

double cusp_alpha_for_beta(double beta) {
  if (beta == 4.0)
    throw std::domain_error("cusp_alpha_for_beta: undefined at beta = 4");
  return 4.0 * (beta - 3.0) / (beta - 4.0);
}

std::optional<double> cusp_parameter(const ShapeParams& p,
                                     const ClassifyTolerances& tol) {
  if (std::fabs(p.alpha - 2.0) <= tol.param_tol &&
      std::fabs(p.beta - 2.0) <= tol.param_tol)
    throw std::domain_error(
        "cusp_parameter: (2,2) is the quadratic point, not a cusp");
  if (std::fabs(discriminant_I(p)) > tol.i_tol(p))
    throw std::domain_error("cusp_parameter: requires |I| within tolerance");
  const double u = p.beta / (2.0 * (p.beta - 3.0));
  const double t = 2.0 * (p.beta - 3.0) / (3.0 * (p.beta - 2.0));
  if (std::isfinite(u) && u > 0.0 && t > 0.0 && t < 1.0) return t;
  return std::nullopt;
}

double resultant_check(const ShapeParams& p, Vec2 t0, Vec2 t1) {
  const double a = p.alpha, b = p.beta;
  // Coefficients (ascending) of the coordinate quadratics of Z'(t).
  const Quadratic px = {a * t0.x,
                        2.0 * (3.0 - 2.0 * a) * t0.x + 2.0 * (3.0 - b) * t1.x,
                        3.0 * (a - 2.0) * t0.x + 3.0 * (b - 2.0) * t1.x};
  const Quadratic py = {a * t0.y,
                        2.0 * (3.0 - 2.0 * a) * t0.y + 2.0 * (3.0 - b) * t1.y,
                        3.0 * (a - 2.0) * t0.y + 3.0 * (b - 2.0) * t1.y};
  return sylvester_resultant(px, py);
}

std::pair<double, double> loop_boundary_values(const ShapeParams& p) {
  const double l1 = p.alpha - 3.0 * p.beta + p.beta * p.beta;
  const double l2 = p.beta - 3.0 * p.alpha + p.alpha * p.alpha;
  return {l1, l2};
}

LoopRoots loop_roots(const ShapeParams& p) {
  LoopRoots out;
  const auto [l1, l2] = loop_boundary_values(p);
  const double s = 8.0 + p.alpha * p.beta - 3.0 * (p.alpha + p.beta);
  const QuadRoots q = solve_quadratic(p.alpha * l1, -(p.alpha * p.beta) * s,
                                      p.beta * l2);
  if (q.identically_zero || q.from_linear) {
    out.notes.push_back("loop quadratic degenerate (zero leading coefficient)");
    return out;
  }
  if (q.count == 0) {
    out.notes.push_back("loop roots complex (alpha*beta*I < 0)");
    return out;
  }
  if (q.double_root) {
    out.notes.push_back("coincident loop roots (p = q)");
    return out;
  }
  out.roots = std::make_pair(q.r0, q.r1);
  return out;
}

namespace {

std::string region_label_for(ShapeKind kind, const ShapeParams& p) {
  const double a = p.alpha, b = p.beta;
  const bool a_in = a > 0.0 && a < 3.0;
  const bool b_in = b > 0.0 && b < 3.0;
  switch (kind) {
    case ShapeKind::Quadratic:
      return "C";
    case ShapeKind::Cusp:
      return "I-curve";
    case ShapeKind::Convex:
      if (a_in && b_in) return "C";
      if (a < 0.0 && b < 0.0) return "R";
      if (a < 0.0 && b > 3.0) return "V";
      if (a > 3.0 && b < 0.0) return "H";
      return "unlabeled";
    case ShapeKind::SingleInflection:
      if (a_in && b > 3.0) return "F";
      if (a < 0.0 && b_in) return "S";
      return "unlabeled";
    case ShapeKind::DoubleInflection:
      return (a > 3.0 && b > 3.0) ? "D" : "unlabeled";
    case ShapeKind::Loop:
      if (a > 3.0 && b > 3.0) return "E";
      if (a < 0.0 && b > 3.0) return "U";
      return "unlabeled";
    default:
      return "unlabeled";
  }
}

}  // namespace

ClassificationReport classify(const ShapeParams& p,
                              const ClassifyTolerances& tol) {
  ClassificationReport rep;
  rep.params = p;
  rep.I = discriminant_I(p);
  rep.phi = phi_coefficients(p);

  const double a = p.alpha, b = p.beta;
  ShapeClass& sc = rep.shape;

  if (std::fabs(a - 2.0) <= tol.param_tol &&
      std::fabs(b - 2.0) <= tol.param_tol) {
    sc.kind = ShapeKind::Quadratic;
    rep.notes.push_back("cubic coefficient vanishes: really a quadratic arc");
  } else if (std::fabs(a) <= tol.param_tol || std::fabs(b) <= tol.param_tol) {
    sc.kind = ShapeKind::EndpointDegenerate;
    const bool start = std::fabs(a) <= tol.param_tol;
    const bool end = std::fabs(b) <= tol.param_tol;
    sc.endpoint = (start && end) ? EndpointTag::Both
                                 : (start ? EndpointTag::Start : EndpointTag::End);
    rep.notes.push_back(start && end
                            ? "both endpoint tangents vanish"
                            : (start ? "alpha = 0: endpoint tangent vanishes at t=0"
                                     : "beta = 0: endpoint tangent vanishes at t=1"));
  } else {
    bool handled = false;
    if (std::fabs(rep.I) <= tol.i_tol(p)) {
      if (const auto t = cusp_parameter(p, tol)) {
        sc.kind = ShapeKind::Cusp;
        sc.roots_t = {*t};
        sc.roots_u = {reparam_t_to_u(*t)};
        handled = true;
      } else {
        rep.notes.push_back("I = 0 but singular parameter outside segment");
      }
    }
    if (!handled) {
      const LoopRoots lr = loop_roots(p);
      if (lr.roots && lr.roots->first >= 0.0) {
        sc.kind = ShapeKind::Loop;
        sc.roots_u = {lr.roots->first, lr.roots->second};
        sc.roots_t = {reparam_u_to_t(lr.roots->second),
                      reparam_u_to_t(lr.roots->first)};
        rep.notes.push_back("loop roots interpreted in u-domain (t = 1/(1+u))");
        handled = true;
      } else if (lr.roots) {
        rep.notes.push_back("real loop roots outside segment");
      }
    }
    if (!handled) {
      const InflectionCount ic = count_inflections(p);
      rep.notes.insert(rep.notes.end(), ic.notes.begin(), ic.notes.end());
      sc.kind = ic.count == 0 ? ShapeKind::Convex
                              : (ic.count == 1 ? ShapeKind::SingleInflection
                                               : ShapeKind::DoubleInflection);
      sc.roots_u = ic.u;
      sc.roots_t = ic.t;
      if (sc.kind == ShapeKind::Convex && a > 0.0 && a < 3.0 && b > 0.0 &&
          b < 3.0 && rep.I < 0.0 && ic.notes.empty()) {
        rep.notes.push_back(
            "I < 0 with 0 < alpha, beta < 3: real phi roots outside segment");
      }
    }
  }

  rep.region_label = region_label_for(sc.kind, p);
  return rep;
}

ClassificationReport classify_curve(const CurveInstance& curve,
                                    const ClassifyTolerances& tol) {
  if (!curve.polygon.is_h_form())
    throw std::invalid_argument(
        "classify_curve: polygon must be H-form (p1 == p2)");
  const double d = curve.diameter();
  if (std::fabs(curve.gamma()) <= kCoincidenceTol * d * d) {
    ClassificationReport rep;
    rep.params = curve.params;
    rep.I = discriminant_I(curve.params);
    rep.phi = phi_coefficients(curve.params);
    rep.shape.kind = ShapeKind::Collinear;
    rep.region_label = "unlabeled";
    rep.notes.push_back("end tangents linearly dependent (Gamma = 0)");
    return rep;
  }
  return classify(curve.params, tol);
}

std::string region_label(const ShapeParams& p, const ClassifyTolerances& tol) {
  return classify(p, tol).region_label;
}

}  // namespace alt
