#pragma once

// Planar points, direction vectors and the 2D outer (cross) product.

#include <cmath>
#include <stdexcept>

namespace alt {

/// Default tolerance for geometric coincidence, relative to figure size.
inline constexpr double kCoincidenceTol = 1e-9;
/// Default tolerance for algebraic identities.
inline constexpr double kIdentityTol = 1e-12;

/// Two-dimensional vector with finite IEEE-double components. Construction
/// rejects NaN and infinities, so any value held by curve types is usable.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double px, double py) : x(px), y(py) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("Vec2: nonfinite component");
  }

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { return *this = *this + o; }
  Vec2& operator-=(Vec2 o) { return *this = *this - o; }

  double norm_squared() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }

  /// Unit vector with this direction; throws on the zero vector.
  Vec2 normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("Vec2: cannot normalize zero vector");
    return {x / n, y / n};
  }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Points and vectors share one representation.
using Point2 = Vec2;

/// Outer product of two plane vectors: v.x * w.y - v.y * w.x.
inline double cross2(Vec2 v, Vec2 w) { return v.x * w.y - v.y * w.x; }

inline double dot(Vec2 v, Vec2 w) { return v.x * w.x + v.y * w.y; }

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

}  // namespace alt
