#pragma once

#include <functional>
#include <vector>

#include "cgflow/geometry.hpp"

namespace cgflow {

// Periodic scalar field on the torus [0,2pi)^2. Node (i,j) sits at
// (i*h1, j*h2); storage is row-major with j as the row index. All indexing
// wraps, so neighbor access never needs bounds handling.
class Grid2 {
 public:
  Grid2() = default;
  Grid2(int n1, int n2, double fill = 0.0);

  static Grid2 sample(int n1, int n2, const std::function<double(Vec2)>& f);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  double h1() const { return h1_; }
  double h2() const { return h2_; }
  double min_h() const { return h1_ < h2_ ? h1_ : h2_; }
  std::size_t size() const { return values_.size(); }

  double x1(int i) const { return i * h1_; }
  double x2(int j) const { return j * h2_; }
  Vec2 node(int i, int j) const { return {x1(i), x2(j)}; }

  int wrap1(int i) const { i %= n1_; return i < 0 ? i + n1_ : i; }
  int wrap2(int j) const { j %= n2_; return j < 0 ? j + n2_ : j; }

  double& at(int i, int j) { return values_[static_cast<std::size_t>(wrap2(j)) * n1_ + wrap1(i)]; }
  double at(int i, int j) const { return values_[static_cast<std::size_t>(wrap2(j)) * n1_ + wrap1(i)]; }

  // Unchecked access for hot loops; caller guarantees 0<=i<n1, 0<=j<n2.
  double& raw(int i, int j) { return values_[static_cast<std::size_t>(j) * n1_ + i]; }
  double raw(int i, int j) const { return values_[static_cast<std::size_t>(j) * n1_ + i]; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  // Periodic bilinear interpolation; monotone in the nodal values.
  double interpolate(Vec2 x) const;

  double mean() const;
  double min() const;
  double max() const;
  double oscillation() const { return max() - min(); }
  bool all_finite() const;

  Grid2& operator+=(double c);

 private:
  int n1_ = 0, n2_ = 0;
  double h1_ = 0.0, h2_ = 0.0;
  std::vector<double> values_;
};

}  // namespace cgflow
