#include "alt/numeric.hpp"

#include <cmath>
#include <utility>

namespace alt {

QuadRoots solve_quadratic(double a, double b, double c) {
  QuadRoots out;
  if (a == 0.0) {
    out.from_linear = true;
    if (b == 0.0) {
      out.identically_zero = (c == 0.0);
      return out;
    }
    out.count = 1;
    out.r0 = out.r1 = -c / b;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  if (disc == 0.0) {
    out.count = 1;
    out.double_root = true;
    out.r0 = out.r1 = -b / (2.0 * a);
    return out;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r0 = q / a;
  double r1 = c / q;  // q != 0 because disc > 0
  if (r0 > r1) std::swap(r0, r1);
  out.count = 2;
  out.r0 = r0;
  out.r1 = r1;
  return out;
}

namespace {

double det3(double a, double b, double c, double d, double e, double f,
            double g, double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

double det4(const std::array<double, 16>& m) {
  double det = 0.0;
  for (int col = 0; col < 4; ++col) {
    double minor[9];
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[k++] = m[static_cast<size_t>(r) * 4 + c];
    const double cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4],
                            minor[5], minor[6], minor[7], minor[8]);
    det += ((col % 2 == 0) ? 1.0 : -1.0) * m[static_cast<size_t>(col)] * cof;
  }
  return det;
}

double sylvester_resultant(const Quadratic& p, const Quadratic& q) {
  const double p0 = p[0], p1 = p[1], p2 = p[2];
  const double q0 = q[0], q1 = q[1], q2 = q[2];
  const std::array<double, 16> m = {
      p2, p1, p0, 0.0,   //
      0.0, p2, p1, p0,   //
      q2, q1, q0, 0.0,   //
      0.0, q2, q1, q0};
  return det4(m);
}

}  // namespace alt
