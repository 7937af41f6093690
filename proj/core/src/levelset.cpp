#include "cgflow/levelset.hpp"

#include <algorithm>
#include <cmath>

namespace cgflow {

namespace {

// Velocity components sampled once per grid; the time loops reuse them.
struct FlowTable {
  Grid2 vx, vy;

  FlowTable(int n1, int n2, const CellularFlow& flow)
      : vx(n1, n2), vy(n1, n2) {
    for (int j = 0; j < n2; ++j)
      for (int i = 0; i < n1; ++i) {
        const Vec2 v = flow.velocity(vx.node(i, j));
        vx.raw(i, j) = v.x;
        vy.raw(i, j) = v.y;
      }
  }
};

// Shared discretization of the spatial operator
//   L(w) = speed * |p+Dw|_godunov + V.(p+Dw)_upwind,
// with speed = (1 - d*kappa(source))_+ and kappa from central differences of
// the field `curv_src` (usually w itself; the discounted solver passes a
// relaxed copy). Writes L into `out`.
void apply_operator(const Grid2& w, const Grid2& curv_src, Vec2 p, double d,
                    const FlowTable& flow, double eps, Grid2& out) {
  const int n1 = w.n1(), n2 = w.n2();
  const double h1 = w.h1(), h2 = w.h2();
  const double eps2 = eps * eps;

  for (int j = 0; j < n2; ++j) {
    const int jm = j == 0 ? n2 - 1 : j - 1;
    const int jp = j + 1 == n2 ? 0 : j + 1;
    for (int i = 0; i < n1; ++i) {
      const int im = i == 0 ? n1 - 1 : i - 1;
      const int ip = i + 1 == n1 ? 0 : i + 1;

      // Clamped curvature speed from the (possibly relaxed) source field.
      const double c0 = curv_src.raw(i, j);
      const double cxm = curv_src.raw(im, j), cxp = curv_src.raw(ip, j);
      const double cym = curv_src.raw(i, jm), cyp = curv_src.raw(i, jp);
      const double gx = p.x + (cxp - cxm) / (2 * h1);
      const double gy = p.y + (cyp - cym) / (2 * h2);
      const double gxx = (cxp - 2 * c0 + cxm) / (h1 * h1);
      const double gyy = (cyp - 2 * c0 + cym) / (h2 * h2);
      const double gxy = (curv_src.raw(ip, jp) + curv_src.raw(im, jm) -
                          curv_src.raw(ip, jm) - curv_src.raw(im, jp)) /
                         (4 * h1 * h2);
      const double den = gx * gx + gy * gy + eps2;
      const double kappa =
          (gx * gx * gyy - 2 * gx * gy * gxy + gy * gy * gxx) /
          (den * std::sqrt(den));
      const double speed = std::max(1.0 - d * kappa, 0.0);

      // Godunov norm of p+Dw for non-negative speed.
      const double w0 = w.raw(i, j);
      const double axm = p.x + (w0 - w.raw(im, j)) / h1;
      const double axp = p.x + (w.raw(ip, j) - w0) / h1;
      const double aym = p.y + (w0 - w.raw(i, jm)) / h2;
      const double ayp = p.y + (w.raw(i, jp) - w0) / h2;
      const double g1 = std::max(std::max(axm, 0.0), -std::min(axp, 0.0));
      const double g2 = std::max(std::max(aym, 0.0), -std::min(ayp, 0.0));
      const double norm = std::sqrt(g1 * g1 + g2 * g2);

      // Drift upwinded on the sign of each velocity component.
      const double ux = flow.vx.raw(i, j), uy = flow.vy.raw(i, j);
      const double adv =
          ux * (ux > 0.0 ? axm : axp) + uy * (uy > 0.0 ? aym : ayp);

      out.raw(i, j) = speed * norm + adv;
    }
  }
}

CorrectorState step_with(const CorrectorState& state, double dt,
                         const FlowTable& table, Grid2& scratch) {
  const double dt_adm = admissible_dt(state);
  if (dt > dt_adm * (1.0 + 1e-12)) throw CflError(dt, dt_adm);
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");

  CorrectorState next = state;
  apply_operator(state.w, state.w, state.p, state.d, table,
                 state.curvature_eps(), scratch);
  for (std::size_t k = 0; k < scratch.size(); ++k)
    next.w.values()[k] = state.w.values()[k] - dt * scratch.values()[k];
  next.t = state.t + dt;
  if (!next.w.all_finite())
    throw NonFiniteError("step: non-finite value produced at t = " +
                         std::to_string(next.t));
  return next;
}

}  // namespace

double admissible_dt(const CorrectorState& state) {
  const double h = state.w.min_h();
  const double hyperbolic =
      h / (1.0 + state.flow.amplitude + state.p.norm());
  const double parabolic =
      state.d > 0.0 ? h * h / (4.0 * state.d) : hyperbolic;
  return 0.4 * std::min(parabolic, hyperbolic);
}

Grid2 curvature_field(const CorrectorState& state, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("curvature eps must be > 0");
  if (!state.w.all_finite())
    throw NonFiniteError("curvature_field: corrector state is not finite");
  const Grid2& w = state.w;
  Grid2 out(w.n1(), w.n2());
  const double eps2 = eps * eps;
  for (int j = 0; j < w.n2(); ++j) {
    const int jm = j == 0 ? w.n2() - 1 : j - 1;
    const int jp = j + 1 == w.n2() ? 0 : j + 1;
    for (int i = 0; i < w.n1(); ++i) {
      const int im = i == 0 ? w.n1() - 1 : i - 1;
      const int ip = i + 1 == w.n1() ? 0 : i + 1;
      const double gx = state.p.x + (w.raw(ip, j) - w.raw(im, j)) / (2 * w.h1());
      const double gy = state.p.y + (w.raw(i, jp) - w.raw(i, jm)) / (2 * w.h2());
      const double gxx = (w.raw(ip, j) - 2 * w.raw(i, j) + w.raw(im, j)) / (w.h1() * w.h1());
      const double gyy = (w.raw(i, jp) - 2 * w.raw(i, j) + w.raw(i, jm)) / (w.h2() * w.h2());
      const double gxy = (w.raw(ip, jp) + w.raw(im, jm) - w.raw(ip, jm) - w.raw(im, jp)) /
                         (4 * w.h1() * w.h2());
      const double den = gx * gx + gy * gy + eps2;
      out.raw(i, j) =
          (gx * gx * gyy - 2 * gx * gy * gxy + gy * gy * gxx) / (den * std::sqrt(den));
    }
  }
  return out;
}

CorrectorState step(const CorrectorState& state, double dt) {
  const FlowTable table(state.w.n1(), state.w.n2(), state.flow);
  Grid2 scratch(state.w.n1(), state.w.n2());
  return step_with(state, dt, table, scratch);
}

EvolveResult evolve(CorrectorState state, double T, double checkpoint_every) {
  if (T < 0.0) throw std::invalid_argument("evolve: T must be >= 0");
  EvolveResult result;
  const double t_end = state.t + T;
  auto record = [&](const CorrectorState& s) {
    result.checkpoints.push_back({s.t, s.w.mean(), s.w.min(), s.w.max()});
  };
  record(state);
  if (T > 0.0) {
    if (!(checkpoint_every > 0.0))
      throw std::invalid_argument("evolve: checkpoint_every must be positive");
    const FlowTable table(state.w.n1(), state.w.n2(), state.flow);
    Grid2 scratch(state.w.n1(), state.w.n2());
    double next_cp = state.t + checkpoint_every;
    const double dt0 = admissible_dt(state);
    while (state.t < t_end - 1e-12) {
      const double target = std::min(t_end, next_cp);
      if (target - state.t > 1e-14)
        state = step_with(state, std::min(dt0, target - state.t), table, scratch);
      if (state.t >= target - 1e-12) {
        record(state);
        if (target == next_cp) next_cp += checkpoint_every;
      }
    }
  }
  result.state = std::move(state);
  return result;
}

DiscountedState solve_discounted(Vec2 p, double d, const CellularFlow& flow,
                                 double lambda, int n_grid,
                                 const DiscountedOptions& opts) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  Grid2 v(n_grid, n_grid, 0.0);
  Grid2 relaxed = v;
  Grid2 op(n_grid, n_grid);
  const FlowTable table(n_grid, n_grid, flow);

  const double h = v.min_h();
  const double hyperbolic = h / (1.0 + flow.amplitude + p.norm());
  const double parabolic = d > 0.0 ? h * h / (4.0 * d) : hyperbolic;
  const double dtau = 0.4 * std::min(parabolic, hyperbolic) / (1.0 + lambda);
  const double eps = opts.eps > 0.0 ? opts.eps : h;
  const double theta = opts.speed_relaxation;

  std::vector<double> history;
  double residual = 0.0;
  for (long it = 0; it < opts.max_iterations; ++it) {
    apply_operator(v, relaxed, p, d, table, eps, op);
    residual = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double r = lambda * v.values()[k] + op.values()[k];
      v.values()[k] -= dtau * r;
      residual = std::max(residual, std::abs(r));
    }
    for (std::size_t k = 0; k < v.size(); ++k)
      relaxed.values()[k] += theta * (v.values()[k] - relaxed.values()[k]);
    if ((it & 0xff) == 0) history.push_back(residual);
    if (residual <= opts.tol) {
      if (!v.all_finite())
        throw NonFiniteError("solve_discounted: non-finite iterate");
      DiscountedState out{std::move(v), lambda, p, d, flow, std::move(history),
                          static_cast<int>(it + 1)};
      return out;
    }
  }
  history.push_back(residual);
  throw ConvergenceError(
      "solve_discounted: residual " + std::to_string(residual) + " > tol after " +
          std::to_string(opts.max_iterations) + " iterations",
      std::move(history));
}

}  // namespace cgflow
