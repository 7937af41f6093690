#include "cgflow/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cgflow/levelset.hpp"

namespace cgflow {

double ellipse_curvature(double a, double b, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double q = a * a * s * s + b * b * c * c;
  return a * b / (q * std::sqrt(q));
}

double ellipse_normal_velocity(double a, double b, double da, double db,
                               double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  const double q = a * a * s * s + b * b * c * c;
  return (da * b * c * c + a * db * s * s) / std::sqrt(q);
}

void SupersolutionParams::validate() const {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("need delta in (0, 1/2)");
  if (!(b0 == delta / 2.0))
    throw std::invalid_argument("need b0 = delta/2");
  if (!(a0 > 0.0 && a0 < b0 / 4.0))
    throw std::invalid_argument("need a0 in (0, b0/4)");
  if (!(64.0 * a0 / (b0 * b0) + 4.0 * std::sqrt(3.0) * M0 * a0 / b0 < 0.125))
    throw std::invalid_argument(
        "need 64 a0/b0^2 + 4 sqrt(3) M0 a0/b0 < 1/8");
  if (M0 * std::sin(std::min(4.0 * a0, kPi / 2.0)) >= 0.125)
    throw std::invalid_argument(
        "need |V.(1,0)| < 1/8 on the strip [-4a0,4a0] x [0,1]");
  if (!(L > 0.0))
    throw std::invalid_argument("need L > 0");
  if (!(0.5 - 3.0 * L * a0 / (4.0 * b0) < 1.0 - b0 / (a0 * a0) - M0))
    throw std::invalid_argument(
        "need 1/2 - 3 L a0/(4 b0) < 1 - b0/a0^2 - M0");
}

SupersolutionParams derive_supersolution_params(double delta, double M0) {
  SupersolutionParams p;
  p.delta = delta;
  p.M0 = M0;
  p.b0 = delta / 2.0;
  double a0_cap = p.b0 / 4.0;
  a0_cap = std::min(
      a0_cap, 0.125 / (64.0 / (p.b0 * p.b0) + 4.0 * std::sqrt(3.0) * M0 / p.b0));
  if (M0 > 0.0)
    a0_cap = std::min(a0_cap, std::asin(std::min(1.0, 0.125 / M0)) / 4.0);
  p.a0 = 0.9 * a0_cap;
  const double L_min =
      (4.0 * p.b0 / (3.0 * p.a0)) * (p.b0 / (p.a0 * p.a0) + M0 - 0.5);
  p.L = 1.2 * L_min;
  p.validate();
  return p;
}

namespace {

std::vector<double> phi_grid(int n_phi) {
  std::vector<double> phis;
  phis.reserve(n_phi + 4);
  for (int k = 0; k < n_phi; ++k) phis.push_back(kTwoPi * k / n_phi);
  // Case split |sin phi| = sqrt(3)/2 must be exercised exactly.
  for (double phi : {kPi / 3, 2 * kPi / 3, 4 * kPi / 3, 5 * kPi / 3})
    phis.push_back(phi);
  return phis;
}

double margin_at(const SupersolutionParams& params, const CellularFlow& flow,
                 const std::vector<double>& phis, double t, double theta,
                 double nu, Vec2 origin, double* phi_at_min) {
  const double a = params.a(t), b = params.b(t);
  const Vec2 center = origin + Vec2{params.a0 + nu, theta};
  double worst = std::numeric_limits<double>::infinity();
  for (double phi : phis) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double kappa = ellipse_curvature(a, b, phi);
    const double vn = ellipse_normal_velocity(a, b, 0.5, -params.L, phi);
    const double q = std::sqrt(a * a * s * s + b * b * c * c);
    const Vec2 normal{b * c / q, a * s / q};
    const Vec2 x = center + Vec2{a * c, b * s};
    const double margin = 1.0 - kappa + dot(flow.velocity(x), normal) - vn;
    if (margin < worst) {
      worst = margin;
      if (phi_at_min) *phi_at_min = phi;
    }
  }
  return worst;
}

}  // namespace

MarginReport supersolution_margin(const SupersolutionParams& params,
                                  const CellularFlow& flow, int n_phi, int n_t,
                                  double theta, double nu, Vec2 origin) {
  params.validate();
  if (flow.amplitude > params.M0 + 1e-12)
    throw std::invalid_argument("flow exceeds the M0 the parameters assume");
  const auto phis = phi_grid(n_phi);
  MarginReport rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n_t; ++k) {
    const double t = params.t_max() * k / n_t;
    double phi_min = 0.0;
    const double m = margin_at(params, flow, phis, t, theta, nu, origin, &phi_min);
    if (m < rep.min_margin) {
      rep.min_margin = m;
      rep.phi_at_min = phi_min;
      rep.t_at_min = t;
    }
  }
  return rep;
}

ContainmentReport containment_check(const CellularFlow& flow, double d,
                                    double delta, int grid,
                                    const std::vector<double>& time_fractions,
                                    const std::vector<double>& probe_thetas) {
  ContainmentReport report;
  report.params = derive_supersolution_params(delta, flow.amplitude);
  report.t_delta = report.params.t_max();

  // Map S = (0,1)^2 into the torus with its left edge exactly on the grid
  // line x1 = pi (exact for power-of-two grids), vertically centered.
  Grid2 proto(grid, grid);
  report.origin = {proto.x1(grid / 2), kPi - 0.5};
  const Vec2 center_s = report.origin + Vec2{0.5, 0.5};

  auto signed_dist = [&](Vec2 x) {
    const Vec2 dl = torus_delta(x, center_s);
    const double qx = std::abs(dl.x) - 0.5;
    const double qy = std::abs(dl.y) - 0.5;
    if (qx > 0.0 || qy > 0.0)
      return std::hypot(std::max(qx, 0.0), std::max(qy, 0.0));
    return std::max(qx, qy);
  };

  CorrectorState state;
  state.w = Grid2::sample(grid, grid, [&](Vec2 x) {
    return (2.0 / kPi) * std::atan(signed_dist(x));
  });
  state.p = {0.0, 0.0};
  state.d = d;
  state.flow = flow;

  const auto phis = phi_grid(256);
  const double h = state.w.min_h();
  std::vector<double> fractions = time_fractions;
  std::sort(fractions.begin(), fractions.end());

  bool ok = true;
  for (double f : fractions) {
    const double t_target = f * report.t_delta;
    while (state.t < t_target - 1e-18) {
      const double dt = std::min((t_target - state.t), report.t_delta / 64.0);
      state = step(state, dt);
    }
    ContainmentRow row;
    row.t = state.t;
    row.min_margin = std::numeric_limits<double>::infinity();
    const double a_in = report.params.a(state.t) - 2.0 * h;
    const double b_in = report.params.b(state.t) - 2.0 * h;
    for (double theta : probe_thetas) {
      row.min_margin = std::min(
          row.min_margin, margin_at(report.params, flow, phis, state.t, theta,
                                    0.0, report.origin, nullptr));
      if (a_in <= 0.0 || b_in <= 0.0) continue;
      const Vec2 center = report.origin + Vec2{report.params.a0, theta};
      for (int j = 0; j < grid; ++j) {
        for (int i = 0; i < grid; ++i) {
          const Vec2 dl = torus_delta(state.w.node(i, j), center);
          const double e = (dl.x / a_in) * (dl.x / a_in) +
                           (dl.y / b_in) * (dl.y / b_in);
          if (e < 1.0) {
            ++row.nodes_checked;
            if (state.w.raw(i, j) >= 0.0) ++row.violations;
          }
        }
      }
    }
    ok = ok && row.violations == 0;
    report.rows.push_back(row);
  }

  for (double theta : probe_thetas) {
    const double g = state.w.interpolate(report.origin + Vec2{0.0, theta});
    report.edge_probe_values.push_back(g);
    ok = ok && g < 0.0;
  }
  report.passed = ok;
  return report;
}

}  // namespace cgflow
