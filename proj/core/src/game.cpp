#include "cgflow/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgflow {

Vec2 step_position(Vec2 x, Vec2 eta, int b, const GameParams& params) {
  const double r = eta.norm();
  if (r > 1.0 + 1e-12)
    throw std::invalid_argument("step_position: |eta| = " + std::to_string(r) +
                                " exceeds 1");
  if (b != 1 && b != -1)
    throw std::invalid_argument("step_position: b must be +1 or -1");
  const double tau = params.tau;
  return x + (tau * params.sqrt_2d() * b) * eta + (tau * tau * r) * eta.perp() -
         (tau * tau) * params.flow.velocity(x);
}

std::vector<Vec2> control_set(const GameParams& params) {
  if (params.n_angles < 8) throw std::invalid_argument("n_angles must be >= 8");
  if (params.n_radii < 2) throw std::invalid_argument("n_radii must be >= 2");
  std::vector<Vec2> etas;
  etas.reserve(1 + static_cast<std::size_t>(params.n_angles) * (params.n_radii - 1));
  etas.push_back({0.0, 0.0});
  for (int ir = 1; ir < params.n_radii; ++ir) {
    const double r = static_cast<double>(ir) / (params.n_radii - 1);
    for (int ia = 0; ia < params.n_angles; ++ia) {
      const double th = kTwoPi * ia / params.n_angles;
      etas.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  return etas;
}

namespace {

// Successor displacements that do not depend on the node: the b*eta kick and
// the eta-perp drift. The -tau^2 V(x) part is added per node.
struct ControlDisp {
  Vec2 plus;   // b = +1
  Vec2 minus;  // b = -1
};

std::vector<ControlDisp> control_displacements(const GameParams& params) {
  std::vector<ControlDisp> disp;
  const double tau = params.tau;
  for (Vec2 eta : control_set(params)) {
    const Vec2 kick = (tau * params.sqrt_2d()) * eta;
    const Vec2 drift = (tau * tau * eta.norm()) * eta.perp();
    disp.push_back({kick + drift, drift - kick});
  }
  return disp;
}

}  // namespace

void dp_sweep(ValueGrid& value, const GameParams& params) {
  const Grid2& prev = value.base;
  Grid2 next(prev.n1(), prev.n2());
  const auto disp = control_displacements(params);
  const double tau2 = params.tau * params.tau;

  for (int j = 0; j < prev.n2(); ++j) {
    for (int i = 0; i < prev.n1(); ++i) {
      const Vec2 x = prev.node(i, j);
      const Vec2 xv = x - tau2 * params.flow.velocity(x);
      double best = std::numeric_limits<double>::infinity();
      for (const ControlDisp& c : disp) {
        const Vec2 xp = xv + c.plus;
        const Vec2 xm = xv + c.minus;
        const double up = prev.interpolate(xp) + dot(value.p, xp);
        const double um = prev.interpolate(xm) + dot(value.p, xm);
        best = std::min(best, std::max(up, um));
      }
      next.raw(i, j) = best - dot(value.p, x);
    }
  }
  if (!next.all_finite())
    throw NonFiniteError("dp_sweep: non-finite value at sweep " +
                         std::to_string(value.k + 1));
  value.base = std::move(next);
  ++value.k;
}

ValueGrid dp_backward(Vec2 terminal_p, const GameParams& params, int n1, int n2) {
  ValueGrid value{Grid2(n1, n2, 0.0), terminal_p, 0};
  for (int s = 0; s < params.n_steps; ++s) dp_sweep(value, params);
  return value;
}

double speed_from_value(const ValueGrid& value, const GameParams& params) {
  if (value.k == 0)
    throw std::invalid_argument("speed_from_value: no sweeps have run");
  return -value.base.mean() / (value.k * params.tau * params.tau);
}

double hamiltonian(const Mat2& A, Vec2 p, double d) {
  const double n = p.norm();
  const Vec2 t = (1.0 / n) * p.perp();
  return std::max(n - d * A.quad(t), 0.0);
}

double hamiltonian_lower(const Mat2& A, Vec2 p, double d) {
  return p.norm2() == 0.0 ? 0.0 : hamiltonian(A, p, d);
}

double hamiltonian_upper(const Mat2& A, Vec2 p, double d) {
  return p.norm2() == 0.0 ? 4.0 * d * A.spectral_norm() : hamiltonian(A, p, d);
}

ConsistencyReport consistency_residual(const Quadratic& phi, Vec2 x,
                                       const GameParams& params) {
  const Vec2 g = phi.grad(x);
  const double tau = params.tau;
  const double tau2 = tau * tau;

  double inc = std::numeric_limits<double>::infinity();
  for (Vec2 eta : control_set(params)) {
    const double kick = tau * params.sqrt_2d() * std::abs(dot(eta, g));
    const double curv = params.d * tau2 * phi.H.quad(eta);
    const double drift = tau2 * eta.norm() * dot(eta.perp(), g);
    inc = std::min(inc, kick + curv + drift);
  }

  ConsistencyReport rep;
  rep.increment = inc;
  rep.f_lower = hamiltonian_lower(phi.H, g, params.d);
  rep.f_upper = hamiltonian_upper(phi.H, g, params.d);
  rep.lower = -tau2 * rep.f_upper;
  rep.upper = -tau2 * rep.f_lower;
  return rep;
}

}  // namespace cgflow
