#include "alt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alt {

namespace {

void validate(const OracleSettings& s) {
  if (s.samples < 256)
    throw std::invalid_argument("OracleSettings: samples must be >= 256");
  if (!(s.curvature_eps > 0.0) || !(s.cusp_velocity_tol > 0.0) ||
      !(s.coincidence_tol > 0.0) || !(s.interior_margin > 0.0))
    throw std::invalid_argument("OracleSettings: tolerances must be positive");
}

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

struct Box {
  double xlo, xhi, ylo, yhi;
  void grow(Point2 p) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  bool overlaps(const Box& o, double pad) const {
    return xlo <= o.xhi + pad && o.xlo <= xhi + pad && ylo <= o.yhi + pad &&
           o.ylo <= yhi + pad;
  }
};

// Proper or touching intersection of segments [a0,a1] and [b0,b1]; on hit the
// chord fractions are written to fa, fb.
bool segments_intersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1, double* fa,
                        double* fb) {
  const Vec2 r = a1 - a0;
  const Vec2 s = b1 - b0;
  const double denom = cross2(r, s);
  const Vec2 d = b0 - a0;
  if (denom == 0.0) return false;  // parallel chords; neighbors handle it
  const double t = cross2(d, s) / denom;
  const double u = cross2(d, r) / denom;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return false;
  *fa = t;
  *fb = u;
  return true;
}

}  // namespace

OracleInflections oracle_inflection_count(const CurveInstance& curve,
                                          const OracleSettings& settings) {
  validate(settings);
  OracleInflections out;
  const int n = settings.samples;
  const double lo = settings.interior_margin;
  const double hi = 1.0 - settings.interior_margin;
  const auto g = [&](double t) {
    return cross2(first_derivative(curve, t), second_derivative(curve, t));
  };

  std::vector<double> ts(n), gs(n);
  double gmax = 0.0;
  for (int k = 0; k < n; ++k) {
    ts[k] = lo + (hi - lo) * k / (n - 1);
    gs[k] = g(ts[k]);
    gmax = std::max(gmax, std::fabs(gs[k]));
  }
  const double d = curve.diameter();
  if (gmax <= 1e-13 * d * d) {
    out.notes.push_back("zero curvature everywhere");
    return out;
  }
  const double eps = settings.curvature_eps * gmax;

  int last = -1;
  for (int k = 0; k < n; ++k) {
    if (std::fabs(gs[k]) <= eps) continue;
    if (last >= 0 && sgn(gs[k]) != sgn(gs[last])) {
      double ta = ts[last], tb = ts[k], ga = gs[last];
      for (int it = 0; it < 80 && tb - ta > 1e-13; ++it) {
        const double tm = 0.5 * (ta + tb);
        const double gm = g(tm);
        if (gm == 0.0) {
          ta = tb = tm;
          break;
        }
        if (sgn(gm) == sgn(ga)) {
          ta = tm;
          ga = gm;
        } else {
          tb = tm;
        }
      }
      out.locations.push_back(0.5 * (ta + tb));
    }
    last = k;
  }
  out.count = static_cast<int>(out.locations.size());
  return out;
}

std::optional<double> oracle_cusp(const CurveInstance& curve,
                                  const OracleSettings& settings) {
  validate(settings);
  const int n = settings.samples;
  const double lo = settings.interior_margin;
  const double hi = 1.0 - settings.interior_margin;
  const auto speed2 = [&](double t) {
    return first_derivative(curve, t).norm_squared();
  };

  int best = 0;
  double vbest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double t = lo + (hi - lo) * k / (n - 1);
    const double v = speed2(t);
    if (v < vbest) {
      vbest = v;
      best = k;
    }
  }
  // Golden-section refinement inside the bracketing samples.
  const double step = (hi - lo) / (n - 1);
  double a = std::max(lo, lo + (best - 1) * step);
  double b = std::min(hi, lo + (best + 1) * step);
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = speed2(x1), f2 = speed2(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = speed2(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = speed2(x2);
    }
  }
  const double tstar = 0.5 * (a + b);
  if (std::sqrt(speed2(tstar)) <=
      settings.cusp_velocity_tol * curve.diameter())
    return tstar;
  return std::nullopt;
}

namespace {

// Two-variable Newton on Z(s) - Z(t) = 0 from a chord-crossing seed.
bool refine_pair(const CurveInstance& curve, double s, double t,
                 double coincidence_dist, double min_separation,
                 std::pair<double, double>* out) {
  for (int it = 0; it < 50; ++it) {
    s = std::clamp(s, 0.0, 1.0);
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 f = evaluate(curve, s) - evaluate(curve, t);
    if (f.norm() <= coincidence_dist) {
      if (std::fabs(s - t) < min_separation) return false;  // trivial s == t
      *out = std::minmax(s, t);
      return true;
    }
    const Vec2 zs = first_derivative(curve, s);
    const Vec2 zt = first_derivative(curve, t);
    // Solve [zs, -zt] [ds, dt]^T = -f by Cramer's rule.
    const double det = zs.x * (-zt.y) - zs.y * (-zt.x);
    if (std::fabs(det) < 1e-300) return false;
    const double ds = (-f.x * (-zt.y) - (-f.y) * (-zt.x)) / det;
    const double dt = (zs.x * (-f.y) - zs.y * (-f.x)) / det;
    if (!std::isfinite(ds) || !std::isfinite(dt)) return false;
    s += ds;
    t += dt;
  }
  return false;
}

// Fallback: shrink the two chords toward the closest sub-chord pair.
bool bisect_pair(const CurveInstance& curve, double sa, double sb, double ta,
                 double tb, double coincidence_dist, double min_separation,
                 std::pair<double, double>* out) {
  for (int it = 0; it < 80; ++it) {
    const double sm = 0.5 * (sa + sb), tm = 0.5 * (ta + tb);
    double bestd = std::numeric_limits<double>::infinity();
    double nsa = sa, nsb = sm, nta = ta, ntb = tm;
    const double scand[2][2] = {{sa, sm}, {sm, sb}};
    const double tcand[2][2] = {{ta, tm}, {tm, tb}};
    for (const auto& sc : scand)
      for (const auto& tc : tcand) {
        const double d = distance(evaluate(curve, 0.5 * (sc[0] + sc[1])),
                                  evaluate(curve, 0.5 * (tc[0] + tc[1])));
        if (d < bestd) {
          bestd = d;
          nsa = sc[0];
          nsb = sc[1];
          nta = tc[0];
          ntb = tc[1];
        }
      }
    sa = nsa;
    sb = nsb;
    ta = nta;
    tb = ntb;
  }
  const double s = 0.5 * (sa + sb), t = 0.5 * (ta + tb);
  if (distance(evaluate(curve, s), evaluate(curve, t)) > coincidence_dist)
    return false;
  if (std::fabs(s - t) < min_separation) return false;
  *out = std::minmax(s, t);
  return true;
}

}  // namespace

std::optional<std::pair<double, double>> oracle_self_intersection(
    const CurveInstance& curve, const OracleSettings& settings) {
  validate(settings);
  const int n = settings.samples;
  std::vector<double> ts(n);
  std::vector<Point2> pts(n);
  for (int i = 0; i < n; ++i) {
    ts[i] = static_cast<double>(i) / (n - 1);
    pts[i] = evaluate(curve, ts[i]);
  }
  const int nseg = n - 1;
  const double diam = curve.diameter();
  const double ctol = settings.coincidence_tol * diam;
  const double min_sep = std::max(4.0 / (n - 1), 1e-5);

  // Blocked sweep: axis-aligned boxes prune nearly all segment pairs.
  constexpr int kBlock = 64;
  const int nb = (nseg + kBlock - 1) / kBlock;
  std::vector<Box> boxes(nb);
  for (int bi = 0; bi < nb; ++bi) {
    const int s0 = bi * kBlock;
    const int s1 = std::min(nseg, s0 + kBlock);
    Box box{pts[s0].x, pts[s0].x, pts[s0].y, pts[s0].y};
    for (int i = s0; i <= s1; ++i) box.grow(pts[i]);
    boxes[bi] = box;
  }

  for (int bi = 0; bi < nb; ++bi) {
    for (int bj = bi; bj < nb; ++bj) {
      if (!boxes[bi].overlaps(boxes[bj], ctol)) continue;
      const int i0 = bi * kBlock, i1 = std::min(nseg, i0 + kBlock);
      const int j0 = bj * kBlock, j1 = std::min(nseg, j0 + kBlock);
      for (int si = i0; si < i1; ++si) {
        for (int sj = std::max(j0, si + 2); sj < j1; ++sj) {
          double fa, fb;
          if (!segments_intersect(pts[si], pts[si + 1], pts[sj], pts[sj + 1],
                                  &fa, &fb))
            continue;
          const double s_seed = ts[si] + fa * (ts[si + 1] - ts[si]);
          const double t_seed = ts[sj] + fb * (ts[sj + 1] - ts[sj]);
          std::pair<double, double> hit;
          if (refine_pair(curve, s_seed, t_seed, ctol, min_sep, &hit))
            return hit;
          if (bisect_pair(curve, ts[si], ts[si + 1], ts[sj], ts[sj + 1], ctol,
                          min_sep, &hit))
            return hit;
        }
      }
    }
  }
  return std::nullopt;
}

ShapeKind oracle_classify(const CurveInstance& curve,
                          const OracleSettings& settings) {
  validate(settings);
  // Cubic term from a third difference of pure evaluations: exact for
  // polynomials, so the quadratic case is detected without any formula.
  const double h = 0.2, t0 = 0.2;
  const Vec2 d3 = (evaluate(curve, t0 + 3 * h) - evaluate(curve, t0)) -
                  (evaluate(curve, t0 + 2 * h) - evaluate(curve, t0 + h)) * 3.0;
  const Vec2 cubic = d3 / (6.0 * h * h * h);
  if (cubic.norm() <= 1e-8 * curve.diameter()) return ShapeKind::Quadratic;

  if (oracle_cusp(curve, settings)) return ShapeKind::Cusp;
  if (oracle_self_intersection(curve, settings)) return ShapeKind::Loop;
  const int count = oracle_inflection_count(curve, settings).count;
  return count == 0 ? ShapeKind::Convex
                    : (count == 1 ? ShapeKind::SingleInflection
                                  : ShapeKind::DoubleInflection);
}

}  // namespace alt
