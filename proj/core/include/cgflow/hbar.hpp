#pragma once

#include <string>
#include <vector>

#include "cgflow/game.hpp"
#include "cgflow/levelset.hpp"

namespace cgflow {

// One estimate of the effective burning velocity Hbar_A(p), tagged with the
// method and the discretization it was produced at. Estimates are never
// exact; error_indicator is an oscillation bound (front speed), the spread
// across the discount list (discounted), or the burn-in sensitivity (game).
struct HbarEstimate {
  enum class Method { FrontSpeed, Discounted, Game };

  Vec2 p;
  double A = 0.0;
  double d = 0.0;
  Method method = Method::FrontSpeed;
  double value = 0.0;
  double error_indicator = 0.0;

  // Discretization metadata; unused entries stay zero.
  int grid = 0;
  double T = 0.0;
  double tau = 0.0;
  double lambda = 0.0;
  int n_angles = 0;
  int n_radii = 0;

  bool valid() const { return value > 0.0; }
  static const char* method_name(Method m);
};

// Slope of -mean w between burn_in and T; the corrector w + Hbar*t stays
// bounded, so the mean drifts linearly once transients die out.
HbarEstimate hbar_front_speed(Vec2 p, double A, double d, int grid, double T,
                              double burn_in);

// Vanishing-discount route: -mean(lambda v_lambda) at the smallest lambda,
// with the spread across the list plus the spatial oscillation of
// lambda*v as the error indicator. lambda_list must be decreasing.
HbarEstimate hbar_discounted(Vec2 p, double A, double d,
                             const std::vector<double>& lambda_list, int grid,
                             double tol = 1e-8);

// Game route: backward DP from terminal data p.x, speed read as the slope of
// speed_from_value between half and full depth to cancel the bounded
// transient.
HbarEstimate hbar_game(Vec2 p, double A, double d, const GameParams& params,
                       int grid);

struct SweepRow {
  HbarEstimate estimate;
  double trend = 0.0;   // Hbar * log(A) / A, the growth-law diagnostic
  double fitted_c = 0.0;  // A pi (|p1|+|p2|) / Hbar - 2 log A
};

// Amplitude sweep with the growth-law diagnostics attached. Front-speed and
// discounted methods run per amplitude; A = 0 rows use the laminar value.
std::vector<SweepRow> sweep(Vec2 p, double d, const std::vector<double>& A_list,
                            int grid, double T, double burn_in,
                            const std::vector<double>& lambda_list);

struct ContinuityProbe {
  std::vector<HbarEstimate> values;
  double max_gap = 0.0;
  double median_gap = 0.0;
  bool jump_flagged = false;  // some gap exceeded 3x the median gap
};

// Modulus-of-continuity proxy for Hbar along a list of directions.
ContinuityProbe continuity_probe(const std::vector<Vec2>& p_list, double A,
                                 double d, int grid, double T, double burn_in);

}  // namespace cgflow
