#pragma once

#include <cmath>

namespace cgflow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;

  // Counterclockwise quarter turn, (a,c) -> (-c,a).
  constexpr Vec2 perp() const { return {-y, x}; }

  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Symmetric 2x2 matrix.
struct Mat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr Vec2 operator*(Vec2 v) const {
    return {xx * v.x + xy * v.y, xy * v.x + yy * v.y};
  }
  constexpr double quad(Vec2 v) const { return dot(v, (*this) * v); }
  constexpr double trace() const { return xx + yy; }

  // Largest absolute eigenvalue.
  double spectral_norm() const {
    const double m = 0.5 * (xx + yy);
    const double r = std::hypot(0.5 * (xx - yy), xy);
    return std::max(std::abs(m + r), std::abs(m - r));
  }
};

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

// Reduce a coordinate into [0, 2*pi).
inline double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

inline Vec2 wrap_2pi(Vec2 v) { return {wrap_2pi(v.x), wrap_2pi(v.y)}; }

// Signed difference a-b reduced to [-pi, pi) per axis; the torus metric
// displacement.
inline double wrap_pm_pi(double d) {
  double r = std::remainder(d, kTwoPi);
  return r;
}

inline Vec2 torus_delta(Vec2 a, Vec2 b) {
  return {wrap_pm_pi(a.x - b.x), wrap_pm_pi(a.y - b.y)};
}

inline double torus_distance(Vec2 a, Vec2 b) { return torus_delta(a, b).norm(); }

}  // namespace cgflow
