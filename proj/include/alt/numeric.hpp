#pragma once

// Small numeric kernels: a numerically stable quadratic solver and the
// Sylvester resultant of two quadratic polynomials.

#include <array>

namespace alt {

struct QuadRoots {
  int count = 0;     // real roots reported (0, 1 or 2)
  double r0 = 0.0;   // ascending when count == 2
  double r1 = 0.0;
  bool from_linear = false;     // leading coefficient was exactly zero
  bool double_root = false;     // vanishing discriminant
  bool identically_zero = false;
};

/// Real roots of a x^2 + b x + c = 0. Uses the sign-matched numerator
/// q = -(b + sign(b) sqrt(disc)) / 2 and the co-root c/q so large |b|
/// does not cancel.
QuadRoots solve_quadratic(double a, double b, double c);

/// Quadratic polynomial coefficients by ascending degree: c[0] + c[1] t + c[2] t^2.
using Quadratic = std::array<double, 3>;

/// Determinant of a row-major 4x4 matrix by cofactor expansion.
double det4(const std::array<double, 16>& m);

/// Determinant of the 4x4 Sylvester matrix of two quadratics; zero iff
/// p and q share a root.
double sylvester_resultant(const Quadratic& p, const Quadratic& q);

}  // namespace alt
