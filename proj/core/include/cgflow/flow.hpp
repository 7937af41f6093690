#pragma once

#include <stdexcept>

#include "cgflow/geometry.hpp"

namespace cgflow {

// Stream function H(x) = sin(x1) sin(x2) and its exact derivatives.
// Coordinates are reduced into [0, 2*pi) before trigonometric evaluation so
// periodicity survives large trajectory coordinates.
double stream(Vec2 x);
Vec2 stream_gradient(Vec2 x);
Mat2 stream_hessian(Vec2 x);

// Steady cellular flow V = A (DH)^perp with flow intensity A > 0.
// V is divergence-free and tangent to level sets of H.
struct CellularFlow {
  double amplitude = 1.0;

  explicit CellularFlow(double a) : amplitude(a) {
    if (!(a >= 0.0))
      throw std::invalid_argument("flow amplitude must be non-negative");
  }
  CellularFlow() = default;

  Vec2 velocity(Vec2 x) const;
  double max_speed() const { return amplitude; }  // max |DH| = 1
};

// Distance from x to the separatrix lattice {x : x1 or x2 in pi*Z}, i.e. the
// smallest coordinate distance to a cell edge.
double separatrix_distance(Vec2 x);

}  // namespace cgflow
