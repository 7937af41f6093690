#include "cgflow/hbar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgflow {

const char* HbarEstimate::method_name(Method m) {
  switch (m) {
    case Method::FrontSpeed: return "front_speed";
    case Method::Discounted: return "discounted";
    case Method::Game: return "game";
  }
  return "?";
}

HbarEstimate hbar_front_speed(Vec2 p, double A, double d, int grid, double T,
                              double burn_in) {
  if (!(T > burn_in)) throw std::invalid_argument("need T > burn_in");
  CorrectorState state;
  state.w = Grid2(grid, grid, 0.0);
  state.p = p;
  state.d = d;
  state.flow = CellularFlow(A);

  const double every = (T - burn_in) / 8.0;
  auto upto = evolve(std::move(state), burn_in, burn_in);
  const double mean_burnin = upto.state.w.mean();
  auto rest = evolve(std::move(upto.state), T - burn_in, every);

  HbarEstimate est;
  est.p = p;
  est.A = A;
  est.d = d;
  est.method = HbarEstimate::Method::FrontSpeed;
  est.grid = grid;
  est.T = T;
  est.value = -(rest.state.w.mean() - mean_burnin) / (T - burn_in);
  // Oscillation of w + Hbar*t equals the spatial oscillation of w.
  double osc = 0.0;
  for (const auto& cp : rest.checkpoints) osc = std::max(osc, cp.osc());
  est.error_indicator = osc;
  return est;
}

HbarEstimate hbar_discounted(Vec2 p, double A, double d,
                             const std::vector<double>& lambda_list, int grid,
                             double tol) {
  if (lambda_list.empty())
    throw std::invalid_argument("lambda list must not be empty");
  for (std::size_t k = 1; k < lambda_list.size(); ++k)
    if (!(lambda_list[k] < lambda_list[k - 1]) || !(lambda_list[k] > 0.0))
      throw std::invalid_argument("lambda list must be positive decreasing");

  const CellularFlow flow(A);
  DiscountedOptions opts;
  opts.tol = tol;
  std::vector<double> means;
  double last_osc = 0.0;
  for (double lambda : lambda_list) {
    const DiscountedState sol = solve_discounted(p, d, flow, lambda, grid, opts);
    Grid2 lam_v = sol.v;
    for (double& v : lam_v.values()) v *= lambda;
    means.push_back(-lam_v.mean());
    last_osc = lam_v.oscillation();
  }

  HbarEstimate est;
  est.p = p;
  est.A = A;
  est.d = d;
  est.method = HbarEstimate::Method::Discounted;
  est.grid = grid;
  est.lambda = lambda_list.back();
  est.value = means.back();
  const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
  est.error_indicator = (*hi - *lo) + last_osc;
  return est;
}

HbarEstimate hbar_game(Vec2 p, double A, double d, const GameParams& params_in,
                       int grid) {
  GameParams params = params_in;
  params.d = d;
  params.flow = CellularFlow(A);

  ValueGrid value{Grid2(grid, grid, 0.0), p, 0};
  const int n_half = std::max(1, params.n_steps / 2);
  for (int s = 0; s < n_half; ++s) dp_sweep(value, params);
  const double mean_half = value.base.mean();
  const double speed_half = speed_from_value(value, params);
  for (int s = n_half; s < params.n_steps; ++s) dp_sweep(value, params);
  const double speed_full = speed_from_value(value, params);
  const double tau2 = params.tau * params.tau;

  HbarEstimate est;
  est.p = p;
  est.A = A;
  est.d = d;
  est.method = HbarEstimate::Method::Game;
  est.grid = grid;
  est.tau = params.tau;
  est.T = params.n_steps * tau2;
  est.n_angles = params.n_angles;
  est.n_radii = params.n_radii;
  // Slope over the second half; the bounded transient cancels.
  est.value = -(value.base.mean() - mean_half) /
              ((value.k - n_half) * tau2);
  est.error_indicator =
      std::abs(est.value - speed_full) + std::abs(speed_full - speed_half);
  return est;
}

std::vector<SweepRow> sweep(Vec2 p, double d, const std::vector<double>& A_list,
                            int grid, double T, double burn_in,
                            const std::vector<double>& lambda_list) {
  for (std::size_t k = 1; k < A_list.size(); ++k)
    if (!(A_list[k] > A_list[k - 1]))
      throw std::invalid_argument("A list must be increasing");

  std::vector<SweepRow> rows;
  const double pl1 = std::abs(p.x) + std::abs(p.y);
  auto push = [&](HbarEstimate est) {
    SweepRow row;
    row.estimate = est;
    if (est.A > 1.0) {
      row.trend = est.value * std::log(est.A) / est.A;
      row.fitted_c = est.A * kPi * pl1 / est.value - 2.0 * std::log(est.A);
    }
    rows.push_back(row);
  };

  for (double A : A_list) {
    if (A == 0.0) {
      HbarEstimate est;
      est.p = p;
      est.A = 0.0;
      est.d = d;
      est.method = HbarEstimate::Method::FrontSpeed;
      est.grid = grid;
      est.T = T;
      est.value = p.norm();  // laminar speed, any d
      push(est);
      continue;
    }
    push(hbar_front_speed(p, A, d, grid, T, burn_in));
    if (!lambda_list.empty())
      push(hbar_discounted(p, A, d, lambda_list, grid));
  }
  return rows;
}

ContinuityProbe continuity_probe(const std::vector<Vec2>& p_list, double A,
                                 double d, int grid, double T, double burn_in) {
  if (p_list.size() < 2)
    throw std::invalid_argument("continuity probe needs at least 2 directions");
  ContinuityProbe probe;
  for (Vec2 p : p_list)
    probe.values.push_back(hbar_front_speed(p, A, d, grid, T, burn_in));
  std::vector<double> gaps;
  for (std::size_t k = 1; k < probe.values.size(); ++k)
    gaps.push_back(
        std::abs(probe.values[k].value - probe.values[k - 1].value));
  probe.max_gap = *std::max_element(gaps.begin(), gaps.end());
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  probe.median_gap = sorted[sorted.size() / 2];
  probe.jump_flagged =
      probe.median_gap > 0.0 && probe.max_gap > 3.0 * probe.median_gap;
  return probe;
}

}  // namespace cgflow
