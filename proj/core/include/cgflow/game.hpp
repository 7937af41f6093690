#pragma once

#include <vector>

#include "cgflow/errors.hpp"
#include "cgflow/flow.hpp"
#include "cgflow/grid.hpp"

namespace cgflow {

// Two-player step: player I picks a direction eta in the closed unit ball,
// player II then picks the sign b. Time runs backward relative to the front
// equation, which is why the drift enters with -V.
struct GameParams {
  double tau = 0.01;        // step size; one step advances game time by tau^2
  double d = 0.1;           // Markstein number
  int n_steps = 100;        // N; total game time N tau^2
  int n_angles = 64;        // uniform angles on [0, 2pi)
  int n_radii = 3;          // radii on [0,1] including both endpoints
  CellularFlow flow{1.0};

  double sqrt_2d() const { return std::sqrt(2.0 * d); }
};

// x_{n+1} = x_n + tau sqrt(2d) b eta + tau^2 |eta| eta_perp - tau^2 V(x_n),
// with eta_perp = (-eta2, eta1). Rejects |eta| > 1 beyond 1e-12.
Vec2 step_position(Vec2 x, Vec2 eta, int b, const GameParams& params);

// Discretized control set for player I: {0} plus r*(cos th, sin th) over the
// radius/angle grids. Radius 0 is kept once.
std::vector<Vec2> control_set(const GameParams& params);

// Value function with linearly growing terminal data g(x) = p.x, stored as a
// periodic part plus the exact affine offset: u(x) = base(x) + p.x. The
// offset makes u(x + 2 pi e_i) - u(x) = 2 pi p_i exact on the torus.
struct ValueGrid {
  Grid2 base;
  Vec2 p;
  int k = 0;  // completed backward sweeps

  double value(Vec2 x) const { return base.interpolate(x) + dot(p, x); }
};

// Backward dynamic programming: k-th level is the min over controls of the
// max over signs of the (k-1)-th level at the successor, read by periodic
// bilinear interpolation plus the exact affine offset.
ValueGrid dp_backward(Vec2 terminal_p, const GameParams& params, int n1, int n2);

// One additional backward sweep in place.
void dp_sweep(ValueGrid& value, const GameParams& params);

// Front-speed estimate -mean(base)/(k tau^2); requires k >= 1.
double speed_from_value(const ValueGrid& value, const GameParams& params);

// Quadratic test function phi(x) = c + g.x + x.H x / 2.
struct Quadratic {
  double c = 0.0;
  Vec2 g{};
  Mat2 H{};

  double eval(Vec2 x) const { return c + dot(g, x) + 0.5 * H.quad(x); }
  Vec2 grad(Vec2 x) const { return g + H * x; }
};

// Clamped curvature Hamiltonian F(A,p) = (|p| - d (tr A - p.A p/|p|^2))_+ and
// its semicontinuous envelopes at p = 0 (lower: 0, upper: 2 d n ||A||).
double hamiltonian(const Mat2& A, Vec2 p, double d);
double hamiltonian_lower(const Mat2& A, Vec2 p, double d);
double hamiltonian_upper(const Mat2& A, Vec2 p, double d);

// One-step min-max increment of a quadratic test function (drift excluded)
// against the bracket -tau^2 [F_lower, F_upper].
struct ConsistencyReport {
  double increment;        // min over controls of max over signs
  double lower;            // -tau^2 F_upper
  double upper;            // -tau^2 F_lower
  double f_lower, f_upper;
  bool within(double slack) const {
    return increment >= lower - slack && increment <= upper + slack;
  }
};

ConsistencyReport consistency_residual(const Quadratic& phi, Vec2 x,
                                       const GameParams& params);

}  // namespace cgflow
