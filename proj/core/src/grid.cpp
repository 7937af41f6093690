#include "cgflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cgflow {

Grid2::Grid2(int n1, int n2, double fill)
    : n1_(n1), n2_(n2), h1_(kTwoPi / n1), h2_(kTwoPi / n2),
      values_(static_cast<std::size_t>(n1) * n2, fill) {
  if (n1 < 16 || n2 < 16)
    throw std::invalid_argument("grid needs at least 16 nodes per axis");
}

Grid2 Grid2::sample(int n1, int n2, const std::function<double(Vec2)>& f) {
  Grid2 g(n1, n2);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) g.raw(i, j) = f(g.node(i, j));
  return g;
}

double Grid2::interpolate(Vec2 x) const {
  const double u = wrap_2pi(x.x) / h1_;
  const double v = wrap_2pi(x.y) / h2_;
  int i0 = static_cast<int>(std::floor(u));
  int j0 = static_cast<int>(std::floor(v));
  const double fu = u - i0;
  const double fv = v - j0;
  i0 = wrap1(i0);
  j0 = wrap2(j0);
  const int i1 = i0 + 1 == n1_ ? 0 : i0 + 1;
  const int j1 = j0 + 1 == n2_ ? 0 : j0 + 1;
  return (1 - fu) * (1 - fv) * raw(i0, j0) + fu * (1 - fv) * raw(i1, j0) +
         (1 - fu) * fv * raw(i0, j1) + fu * fv * raw(i1, j1);
}

double Grid2::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / values_.size();
}

double Grid2::min() const { return *std::min_element(values_.begin(), values_.end()); }
double Grid2::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool Grid2::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return std::isfinite(v); });
}

Grid2& Grid2::operator+=(double c) {
  for (double& v : values_) v += c;
  return *this;
}

}  // namespace cgflow
