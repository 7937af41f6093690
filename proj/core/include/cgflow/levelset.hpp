#pragma once

#include <optional>
#include <vector>

#include "cgflow/errors.hpp"
#include "cgflow/flow.hpp"
#include "cgflow/grid.hpp"

namespace cgflow {

// Periodic corrector w(x,t) = G(x,t) - p.x for the advective curvature front
// equation; evolving w instead of G keeps the state single-valued on the
// torus. p = 0 is allowed (pure clamped curvature flow of w plus advection),
// which is how the circle and containment configurations run.
struct CorrectorState {
  Grid2 w;
  Vec2 p{1.0, 0.0};
  double d = 0.1;           // Markstein number
  CellularFlow flow{1.0};
  double t = 0.0;
  double eps = 0.0;         // curvature regularization; 0 means "use h"

  double curvature_eps() const { return eps > 0.0 ? eps : w.min_h(); }
};

struct Checkpoint {
  double t;
  double mean_w;
  double min_w;
  double max_w;
  double osc() const { return max_w - min_w; }
};

// Largest stable explicit step: 0.4 * min(h^2/(4d), h/(1+A+|p|)).
double admissible_dt(const CorrectorState& state);

// Curvature kappa = div(DG/|DG|) of G = p.x + w by central differences with
// the gradient norm regularized as sqrt(|DG|^2 + eps^2).
Grid2 curvature_field(const CorrectorState& state, double eps);

// One explicit Euler step of
//   w_t = -[ (1 - d kappa)_+ |p+Dw|_godunov + V.(p+Dw)_upwind ].
// The clamped speed is frozen per node per step; the Godunov norm assumes the
// frozen speed is non-negative, which the clamp guarantees.
CorrectorState step(const CorrectorState& state, double dt);

struct EvolveResult {
  CorrectorState state;
  std::vector<Checkpoint> checkpoints;
};

// March to time state.t + T with stable steps, recording a checkpoint every
// checkpoint_every time units (and always at the final time).
EvolveResult evolve(CorrectorState state, double T, double checkpoint_every);

// Stationary discounted problem
//   lambda v + (1 - d div((p+Dv)/|p+Dv|))_+ |p+Dv| + V.(p+Dv) = 0.
struct DiscountedState {
  Grid2 v;
  double lambda;
  Vec2 p;
  double d;
  CellularFlow flow;
  std::vector<double> residual_history;
  int iterations = 0;
};

struct DiscountedOptions {
  double tol = 1e-8;        // on max-norm update per unit pseudo-time
  long max_iterations = 2'000'000;
  double eps = 0.0;         // curvature regularization; 0 means "use h"
  // Relaxation of the curvature-speed feedback: the speed field is evaluated
  // on an exponentially averaged iterate. Without it the clamp chatters at
  // corrector kinks and the sup-norm residual limit-cycles; at a fixed point
  // the averaged and current iterates coincide, so the converged state
  // satisfies the unrelaxed discrete equation to tol.
  double speed_relaxation = 0.02;
};

DiscountedState solve_discounted(Vec2 p, double d, const CellularFlow& flow,
                                 double lambda, int n_grid,
                                 const DiscountedOptions& opts = {});

}  // namespace cgflow
