#pragma once

#include <vector>

#include "cgflow/flow.hpp"
#include "cgflow/grid.hpp"

namespace cgflow {

// Curvature of the axis-aligned ellipse x1^2/a^2 + x2^2/b^2 = 1 at the point
// (a cos phi, b sin phi).
double ellipse_curvature(double a, double b, double phi);

// Normal velocity of a moving ellipse with semi-axis rates a' = da, b' = db.
double ellipse_normal_velocity(double a, double b, double da, double db,
                               double phi);

// Parameters of the shrinking-fattening ellipse supersolution: the ellipse
//   (x1 - a0 - nu)^2 / a(t)^2 + (x2 - theta)^2 / b(t)^2 = 1,
//   a(t) = a0 + t/2,  b(t) = b0 - L t,  t in [0, t_max],
// with b0 = delta/2 and a0, L constrained so the boundary moves strictly
// slower than the front law allows.
struct SupersolutionParams {
  double delta = 0.4;
  double M0 = 1.0;  // max |V|
  double a0 = 0.0;
  double b0 = 0.0;
  double L = 0.0;

  double t_max() const { return std::min(2.0 * a0, b0 / (2.0 * L)); }
  double a(double t) const { return a0 + 0.5 * t; }
  double b(double t) const { return b0 - L * t; }

  // Throws std::invalid_argument naming the first violated inequality.
  void validate() const;
};

// Derive admissible parameters for a given margin and flow bound; a0 takes
// 90% of its admissible range, L 120% of its lower bound.
SupersolutionParams derive_supersolution_params(double delta, double M0);

struct MarginReport {
  double min_margin = 0.0;  // min over the (phi, t) grid of 1 - kappa + V.n - v_n
  double phi_at_min = 0.0;
  double t_at_min = 0.0;
};

// Minimum of (1 - kappa + V.n - v_n) over a phi x t grid along the moving
// ellipse centered at origin + (a0 + nu, theta). The grid always includes
// the case-split angles |sin phi| = sqrt(3)/2. `origin` translates the
// Appendix frame into the torus (the frame corner S=(0,0)).
MarginReport supersolution_margin(const SupersolutionParams& params,
                                  const CellularFlow& flow, int n_phi, int n_t,
                                  double theta, double nu = 0.0,
                                  Vec2 origin = {0.0, 0.0});

struct ContainmentRow {
  double t = 0.0;
  double min_margin = 0.0;
  int nodes_checked = 0;
  int violations = 0;
};

struct ContainmentReport {
  std::vector<ContainmentRow> rows;
  SupersolutionParams params;
  Vec2 origin;                 // torus position of the frame corner (0,0)
  double t_delta = 0.0;
  std::vector<double> edge_probe_values;  // G((0, theta_k), t_delta)
  bool passed = false;
};

// Evolves the front equation from the arctangent signed-distance data of the
// unit square S (translated so its left edge sits on a grid line) and checks
// that every grid node strictly inside the analytic ellipse shrunk by 2h has
// G < 0 at each checkpoint time, plus the edge probes G((0,theta), t_delta) < 0
// for theta in probe_thetas.
ContainmentReport containment_check(const CellularFlow& flow, double d,
                                    double delta, int grid,
                                    const std::vector<double>& time_fractions,
                                    const std::vector<double>& probe_thetas);

}  // namespace cgflow
