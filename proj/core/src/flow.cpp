#include "cgflow/flow.hpp"

#include <algorithm>
#include <cmath>

namespace cgflow {

double stream(Vec2 x) {
  const Vec2 r = wrap_2pi(x);
  return std::sin(r.x) * std::sin(r.y);
}

Vec2 stream_gradient(Vec2 x) {
  const Vec2 r = wrap_2pi(x);
  return {std::cos(r.x) * std::sin(r.y), std::sin(r.x) * std::cos(r.y)};
}

Mat2 stream_hessian(Vec2 x) {
  const Vec2 r = wrap_2pi(x);
  const double ss = std::sin(r.x) * std::sin(r.y);
  const double cc = std::cos(r.x) * std::cos(r.y);
  return {-ss, cc, -ss};
}

Vec2 CellularFlow::velocity(Vec2 x) const {
  const Vec2 r = wrap_2pi(x);
  return {-amplitude * std::cos(r.y) * std::sin(r.x),
          amplitude * std::cos(r.x) * std::sin(r.y)};
}

double separatrix_distance(Vec2 x) {
  auto axis = [](double u) {
    double m = std::fmod(u, kPi);
    if (m < 0.0) m += kPi;
    return std::min(m, kPi - m);
  };
  return std::min(axis(x.x), axis(x.y));
}

}  // namespace cgflow
