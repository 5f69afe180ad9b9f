#include "alt/degenerate.hpp"

#include <cmath>

#include "alt/numeric.hpp"

namespace alt {

namespace {

void check_unit(const Vec2& v, const char* name) {
  if (std::fabs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument(std::string("DegenerateConfig: ") + name +
                                " must be a unit vector");
}

}  // namespace

DegenerateConfig DegenerateConfig::make(Point2 p0, Vec2 z0, Vec2 zs, double mu,
                                        double nu, double m, double alpha,
                                        double beta) {
  check_unit(z0, "z0");
  check_unit(zs, "zs");
  if (std::fabs(cross2(z0, zs)) <= 1e-12)
    throw std::invalid_argument(
        "DegenerateConfig: z0 and zs collinear (the curve degenerates to a "
        "line segment)");
  if (!(mu > 0.0) || !(nu > 0.0))
    throw std::invalid_argument("DegenerateConfig: mu and nu must be > 0");
  if (m == 0.0 || !std::isfinite(m))
    throw std::invalid_argument("DegenerateConfig: m must be nonzero");
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("DegenerateConfig: nonfinite shape parameter");
  // Endpoint interpolation of the closed form forces this relation between
  // the polygon legs and the tangent magnitudes.
  const double lhs = mu * (1.0 - alpha);
  const double rhs = nu * (1.0 - beta);
  const double scale =
      1.0 + mu + nu + std::fabs(mu * alpha) + std::fabs(nu * beta);
  if (std::fabs(lhs - rhs) > 1e-9 * scale)
    throw std::invalid_argument(
        "DegenerateConfig: inconsistent data, mu(1-alpha) != nu(1-beta)");
  DegenerateConfig cfg;
  cfg.p0 = p0;
  cfg.z0 = z0;
  cfg.zs = zs;
  cfg.mu = mu;
  cfg.nu = nu;
  cfg.m = m;
  cfg.alpha = alpha;
  cfg.beta = beta;
  return cfg;
}

DegenerateConfig DegenerateConfig::from_tangent_magnitudes(double a, double b,
                                                           double m, Point2 p0,
                                                           Vec2 z0, Vec2 zs) {
  const double mu = 1.0 + std::max(0.0, a - b);
  const double nu = 1.0 + std::max(0.0, b - a);
  return make(p0, z0, zs, mu, nu, m, a / mu, b / nu);
}

DegenerateDerived degenerate_derived(const DegenerateConfig& cfg) {
  return {cfg.a(), cfg.b(), cfg.upsilon()};
}

std::pair<ControlPolygon, ShapeParams> build_degenerate_polygon(
    const DegenerateConfig& cfg) {
  const Point2 p1 = cfg.p0 + cfg.z0 * cfg.mu;
  const Point2 p2 = p1 + cfg.zs * cfg.m;
  const Point2 p3 = p2 - cfg.z0 * cfg.nu;
  return {ControlPolygon{cfg.p0, p1, p2, p3},
          ShapeParams{cfg.alpha, cfg.beta}};
}

Point2 evaluate_degenerate(const DegenerateConfig& cfg, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("evaluate_degenerate: t outside [0,1]");
  const double a = cfg.a(), b = cfg.b();
  const double fs = cfg.m * (3.0 - 2.0 * t) * t * t;
  const double f0 = t * (a * (1.0 + t - t * t) + b * (t - 2.0) * t);
  return cfg.p0 + cfg.zs * fs + cfg.z0 * f0;
}

double degenerate_cross(const DegenerateConfig& cfg, double u) {
  if (!(u >= 0.0))
    throw std::domain_error("degenerate_cross: u must be >= 0");
  const double w = 1.0 + u;
  return 6.0 * cfg.m * (cfg.b() + cfg.a() * u * u) * cfg.upsilon() / (w * w);
}

DegenerateInflections degenerate_inflections(const DegenerateConfig& cfg) {
  DegenerateInflections out;
  const double a = cfg.a(), b = cfg.b();
  if (a == 0.0) {
    out.notes.push_back(b == 0.0
                            ? "a = b = 0: curvature cross identically zero"
                            : "a = 0: linear special case, no interior zero");
    return out;
  }
  if (a * b < 0.0) {
    out.count = 1;
    out.u = std::sqrt(-b / a);
    out.t = reparam_u_to_t(*out.u);
  } else if (b == 0.0) {
    out.notes.push_back("b = 0: curvature zero only at the endpoint u = 0");
  }
  return out;
}

DegenerateReport degenerate_classify(const DegenerateConfig& cfg) {
  const double a = cfg.a(), b = cfg.b(), ups = cfg.upsilon();
  if (a == 0.0 || b == 0.0 || cfg.m == 0.0 || ups == 0.0)
    throw std::domain_error(
        "degenerate_classify: requires a*b*m*Upsilon != 0");
  DegenerateReport rep;
  rep.a = a;
  rep.b = b;
  rep.m = cfg.m;
  rep.upsilon = ups;
  rep.cusp = false;  // resultant -36 a b m^2 Upsilon^2 cannot vanish here
  rep.loop = false;

  const DegenerateInflections infl = degenerate_inflections(cfg);
  rep.inflections = infl.count;
  rep.inflection_u = infl.u;
  rep.inflection_t = infl.t;
  rep.notes.insert(rep.notes.end(), infl.notes.begin(), infl.notes.end());

  if (a * b > 0.0) {
    // Loop-candidate roots; their quadratic never has two positive roots.
    const QuadRoots q = solve_quadratic(a * (a - 3.0 * b), -8.0 * a * b,
                                        b * (b - 3.0 * a));
    if (q.count == 2) {
      rep.candidate_roots = std::make_pair(q.r0, q.r1);
      const int positives = (q.r0 > 0.0 ? 1 : 0) + (q.r1 > 0.0 ? 1 : 0);
      rep.notes.push_back(positives <= 1
                              ? "loop-candidate roots: at most one positive, "
                                "no loop"
                              : "unexpected: two positive loop-candidate roots");
    } else {
      rep.notes.push_back("loop-candidate quadratic degenerate");
    }
  } else {
    rep.notes.push_back("loop-candidate roots undefined (a*b < 0)");
  }
  return rep;
}

double degenerate_resultant(const DegenerateConfig& cfg) {
  const double a = cfg.a(), b = cfg.b(), m = cfg.m;
  // Z(t) = P0 + f(t) zs + g(t) z0 with f = m(3-2t)t^2 and
  // g = t(a(1+t-t^2) + b(t-2)t); coordinate quadratics of Z'(t):
  const double fp0 = 0.0, fp1 = 6.0 * m, fp2 = -6.0 * m;
  const double gp0 = a, gp1 = 2.0 * (a - 2.0 * b), gp2 = 3.0 * (b - a);
  const Quadratic px = {fp0 * cfg.zs.x + gp0 * cfg.z0.x,
                        fp1 * cfg.zs.x + gp1 * cfg.z0.x,
                        fp2 * cfg.zs.x + gp2 * cfg.z0.x};
  const Quadratic py = {fp0 * cfg.zs.y + gp0 * cfg.z0.y,
                        fp1 * cfg.zs.y + gp1 * cfg.z0.y,
                        fp2 * cfg.zs.y + gp2 * cfg.z0.y};
  return sylvester_resultant(px, py);
}

}  // namespace alt
