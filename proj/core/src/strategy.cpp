#include "cgflow/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgflow {

namespace {

double max_speed_on_ball(const CellularFlow& flow, Vec2 center, double radius) {
  double worst = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double th = kTwoPi * k / 64;
    for (double f : {0.5, 1.0}) {
      const Vec2 x = center + (f * radius) * Vec2{std::cos(th), std::sin(th)};
      worst = std::max(worst, flow.velocity(x).norm());
    }
  }
  return worst;
}

}  // namespace

DescentStrategy::DescentStrategy(const GameParams& params, double threshold)
    : params_(params), threshold_(threshold) {}

Vec2 DescentStrategy::choose(Vec2 x, int) {
  if (in_fallback_) {
    if ((x - fallback_center_).norm() >= fallback_radius_) {
      in_fallback_ = false;
    } else {
      ExitStrategy exit(fallback_center_, +1);
      return exit.choose(x, 0);
    }
  }
  const Vec2 v = params_.flow.velocity(x);
  const double speed = v.norm();
  if (speed < threshold_) {
    // Stagnation point: escape a ball on which the flow stays weak.
    ++fallback_events_;
    in_fallback_ = true;
    fallback_center_ = x;
    double r = 1.0;
    while (r > 1e-6 && max_speed_on_ball(params_.flow, x, r) > 0.25) r *= 0.5;
    fallback_radius_ = r;
    ExitStrategy exit(fallback_center_, +1);
    return exit.choose(x, 0);
  }
  return (1.0 / speed) * v;
}

std::string DescentStrategy::meta() const {
  return fallback_events_ > 0
             ? "descent fallback events: " + std::to_string(fallback_events_)
             : std::string{};
}

Vec2 ExitStrategy::choose(Vec2 x, int) {
  const Vec2 r = x - center_;
  const double n = r.norm();
  if (n < 1e-14) return {1.0, 0.0};
  // eta orthogonal to r with eta_perp = orientation * r / |r|.
  const Vec2 eta = (-static_cast<double>(orientation_) / n) * r.perp();
  return eta;
}

AxisPushStrategy::AxisPushStrategy(Vec2 direction) {
  const double n = direction.norm();
  if (n < 1e-14) throw std::invalid_argument("axis-push needs a direction");
  const Vec2 u = (1.0 / n) * direction;
  eta_ = {u.y, -u.x};  // eta_perp == u
}

void CompositeStrategy::add_phase(Condition when, std::unique_ptr<PlayerOne> s) {
  phases_.emplace_back(std::move(when), std::move(s));
}

void CompositeStrategy::set_default(std::unique_ptr<PlayerOne> s) {
  default_ = std::move(s);
}

Vec2 CompositeStrategy::choose(Vec2 x, int n) {
  for (auto& [when, s] : phases_)
    if (when(x, n)) return s->choose(x, n);
  if (!default_) throw std::logic_error("composite strategy has no default");
  return default_->choose(x, n);
}

int SignSeekingLevel::choose(Vec2 x, Vec2 eta) {
  const double hp = stream(step_position(x, eta, +1, params_));
  const double hm = stream(step_position(x, eta, -1, params_));
  if (hp == hm) return +1;
  return (hp > hm) == maximize_ ? +1 : -1;
}

int WorstCaseEnum::choose(Vec2 x, Vec2 eta) {
  const double fp = objective_(step_position(x, eta, +1, params_));
  const double fm = objective_(step_position(x, eta, -1, params_));
  return fp >= fm ? +1 : -1;
}

Trajectory run(Vec2 x0, PlayerOne& s1, PlayerTwo& s2, const GameParams& params,
               const StopCondition& stop, int max_steps) {
  Trajectory traj;
  traj.tau = params.tau;
  traj.points.push_back(x0);
  Vec2 x = x0;
  for (int n = 0; n < max_steps; ++n) {
    if (stop && stop(x, n)) break;
    const Vec2 eta = s1.choose(x, n);
    const int b = s2.choose(x, eta);
    x = step_position(x, eta, b, params);
    traj.points.push_back(x);
    traj.controls.emplace_back(eta, b);
  }
  traj.meta = s1.name() + " vs " + s2.name();
  const std::string extra = s1.meta();
  if (!extra.empty()) traj.meta += "; " + extra;
  return traj;
}

double descent_level_ode(double s0, double t) {
  if (!(s0 > 0.0 && s0 <= 1.0))
    throw std::invalid_argument("descent_level_ode: s0 must lie in (0, 1]");
  const double u = std::max(std::asin(std::sqrt(s0)) - t / std::sqrt(2.0), 0.0);
  const double s = std::sin(u);
  return s * s;
}

Target Target::region(CellRegion r, std::string name) {
  return {[r](Vec2 x) { return r.contains(x); }, std::move(name)};
}

Target Target::ball(Vec2 center, double radius) {
  return {[=](Vec2 x) { return (x - center).norm() <= radius; }, "ball"};
}

Target Target::cell(int index, double margin) {
  const Vec2 q = kCellOffsets[index - 1];
  return {[=](Vec2 x) {
            const Vec2 r = x - q;
            return r.x > margin && r.x < kPi - margin && r.y > margin &&
                   r.y < kPi - margin;
          },
          "U" + std::to_string(index)};
}

ReachReport measure_reach(Vec2 start, const Target& target, PlayerOne& s1,
                          PlayerTwo& s2, const GameParams& params,
                          int budget_steps) {
  const auto traj = run(
      start, s1, s2, params, [&](Vec2 x, int) { return target.contains(x); },
      budget_steps);
  ReachReport rep;
  rep.start = start;
  rep.target = target.name;
  rep.steps_used = traj.steps();
  rep.time_used = traj.time();
  rep.success = target.contains(traj.points.back());
  rep.adversary = s2.name();
  return rep;
}

CellTransitionStrategy::CellTransitionStrategy(const GameParams& params,
                                               EdgeCrossing edge,
                                               int source_sign, int target_sign)
    : params_(params), edge_(edge), source_sign_(source_sign),
      target_sign_(target_sign) {}

double CellTransitionStrategy::entrainment_cos(Vec2 x) const {
  // Probe the flow just inside the target cell at this tangential position:
  // positive where the target-side drift -V carries into the cell, with
  // magnitude ~ A * probe_eps * |cos(tangential)|.
  const double probe_eps = 0.02;
  Vec2 probe, nu;
  if (edge_.axis == 0) {
    nu = {edge_.normal_sign, 0.0};
    probe = {edge_.coord + probe_eps * edge_.normal_sign, x.y};
  } else {
    nu = {0.0, edge_.normal_sign};
    probe = {x.x, edge_.coord + probe_eps * edge_.normal_sign};
  }
  const double entrain = dot(-params_.flow.velocity(probe), nu);
  const double scale = params_.flow.amplitude * probe_eps;
  return scale > 0.0 ? entrain / scale : 0.0;
}

Vec2 CellTransitionStrategy::push_direction() const {
  const Vec2 nu = edge_.axis == 0 ? Vec2{edge_.normal_sign, 0.0}
                                  : Vec2{0.0, edge_.normal_sign};
  return {nu.y, -nu.x};  // eta with eta_perp = nu
}

Vec2 CellTransitionStrategy::choose(Vec2 x, int) {
  const double level_src = source_sign_ * stream(x);
  const double level_tgt = target_sign_ * stream(x);
  // edge_dist > 0 once we are past the edge on the target side.
  const double edge_dist =
      edge_.normal_sign * ((edge_.axis == 0 ? x.x : x.y) - edge_.coord);
  const double tan_coord = tangential(x);
  const bool in_span = tan_coord > edge_.tan_lo + corner_margin &&
                       tan_coord < edge_.tan_hi - corner_margin;

  const Vec2 v = params_.flow.velocity(x);
  const double vn = v.norm();
  auto toward_level = [&](int sign_down) -> Vec2 {
    // sign_down = +1 lowers H, -1 raises H; eta = sign_down * V/|V|.
    if (vn < 1e-14) return {0.0, 0.0};
    return (static_cast<double>(sign_down) / vn) * v;
  };

  // Whatever the phase: once firmly on the target side, steer inward.
  if (level_tgt > 0.0 && edge_dist >= enter_depth) phase_ = Phase::Enter;

  if (phase_ == Phase::Enter) {
    if (level_tgt < -0.01 || edge_dist < -enter_depth) {
      phase_ = Phase::Seek;  // got thrown back across
      ++aborts_;
    } else {
      return toward_level(-target_sign_);
    }
  }

  if (phase_ == Phase::Push) {
    const bool span_ok = tan_coord > edge_.tan_lo + corner_margin - 0.1 &&
                         tan_coord < edge_.tan_hi - corner_margin + 0.1;
    if (!span_ok || entrainment_cos(x) < continue_slope ||
        edge_dist < -2.0 * launch_dist) {
      phase_ = Phase::Seek;
      ++aborts_;
    } else {
      return push_direction();
    }
  }

  // Seek: regulate the source level into the band with hysteresis, launch a
  // push when close to the edge inside the favourable window, coast with the
  // flow otherwise.
  if (level_tgt > 0.0 && edge_dist > 0.0) {
    phase_ = Phase::Enter;  // the drift carried us across on its own
    return toward_level(-target_sign_);
  }
  const double band_mid = 0.5 * (band_lo + band_hi);
  if (regulate_ == +1 && level_src >= band_mid) regulate_ = 0;
  if (regulate_ == -1 && level_src <= band_mid) regulate_ = 0;
  if (level_src < band_lo) regulate_ = +1;
  if (level_src > band_hi) regulate_ = -1;
  if (regulate_ == +1) return toward_level(-source_sign_);
  if (regulate_ == -1) return toward_level(source_sign_);

  if (edge_dist <= 0.0 && edge_dist >= -launch_dist && in_span &&
      entrainment_cos(x) >= start_slope) {
    phase_ = Phase::Push;
    ++pushes_;
    return push_direction();
  }
  return {0.0, 0.0};  // coast with the flow
}

std::string CellTransitionStrategy::meta() const {
  return "pushes: " + std::to_string(pushes_) +
         ", aborts: " + std::to_string(aborts_);
}

ReachReport measure_cell_transition(Vec2 start, int target_cell,
                                    const GameParams& params, int budget_steps,
                                    double target_margin) {
  struct Leg {
    EdgeCrossing edge;
    int src_sign, tgt_sign;
    int cell;  // target cell index of this leg
  };
  std::vector<Leg> legs;
  switch (target_cell) {
    case 2:
      legs.push_back({{0, 0.0, -1.0, 0.0, kPi}, +1, -1, 2});
      break;
    case 3:
      legs.push_back({{1, 0.0, -1.0, 0.0, kPi}, +1, -1, 3});
      break;
    case 4:
      legs.push_back({{0, 0.0, -1.0, 0.0, kPi}, +1, -1, 2});
      legs.push_back({{1, 0.0, -1.0, -kPi, 0.0}, -1, +1, 4});
      break;
    default:
      throw std::invalid_argument("target cell must be 2, 3 or 4");
  }

  ReachReport total;
  total.start = start;
  total.target = "U" + std::to_string(target_cell);
  Vec2 x = start;
  int steps_left = budget_steps;
  for (const Leg& leg : legs) {
    const Target target = Target::cell(leg.cell, target_margin);
    CellTransitionStrategy s1(params, leg.edge, leg.src_sign, leg.tgt_sign);
    // Greedy adversary maximizing the distance to the target rectangle.
    const Vec2 q = kCellOffsets[leg.cell - 1];
    WorstCaseEnum greedy(
        params,
        [q, target_margin](Vec2 y) {
          const Vec2 r = y - q;
          const double dx = std::max(
              {target_margin - r.x, r.x - (kPi - target_margin), 0.0});
          const double dy = std::max(
              {target_margin - r.y, r.y - (kPi - target_margin), 0.0});
          return std::hypot(dx, dy);
        },
        "greedy-distance");
    const auto traj = run(
        x, s1, greedy, params,
        [&target](Vec2 y, int) { return target.contains(y); }, steps_left);
    total.steps_used += traj.steps();
    total.time_used += traj.time();
    total.adversary = greedy.name();
    x = traj.points.back();
    if (!target.contains(x)) {
      total.success = false;
      return total;
    }
    steps_left -= traj.steps();
  }
  total.success = true;
  return total;
}

CrossingDefenseReport crossing_defense(Vec2 start, PlayerOne& s1,
                                       const GameParams& params, Vec2 axis,
                                       int n_steps) {
  OpposeAxis s2(axis);
  const auto traj =
      run(start, s1, s2, params, StopCondition{}, n_steps);
  CrossingDefenseReport rep;
  rep.bound = 1.0 + params.flow.amplitude;
  rep.tau = params.tau;
  const double tau2 = params.tau * params.tau;
  const int n_min = std::max(1, n_steps / 10);
  for (int n = n_min; n <= traj.steps(); ++n) {
    const double disp = dot(traj.points[n] - start, axis);
    rep.max_rate = std::max(rep.max_rate, disp / (n * tau2));
  }
  return rep;
}

}  // namespace cgflow
