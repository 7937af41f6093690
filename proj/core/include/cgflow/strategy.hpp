#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cgflow/game.hpp"
#include "cgflow/regions.hpp"

namespace cgflow {

// Player I policy: emits the direction eta (|eta| <= 1) from the current
// position and step index. Policies may carry per-run state (the descent
// fallback, the cell-transition controller), so construct a fresh instance
// per trajectory.
class PlayerOne {
 public:
  virtual ~PlayerOne() = default;
  virtual Vec2 choose(Vec2 x, int n) = 0;
  virtual std::string name() const = 0;
  virtual std::string meta() const { return {}; }
};

// Player II policy: picks the sign b after seeing eta.
class PlayerTwo {
 public:
  virtual ~PlayerTwo() = default;
  virtual int choose(Vec2 x, Vec2 eta) = 0;
  virtual std::string name() const = 0;
};

// eta = V/|V|, which makes eta_perp = -DH/|DH|: the level of H decreases by
// |DH| tau^2 per step regardless of the adversary. At stagnation points
// (|V| below threshold) falls back to the exit strategy on a ball whose
// radius is the largest dyadic one with max |V| <= 1/4 on it; the fallback
// is recorded, not an error.
class DescentStrategy : public PlayerOne {
 public:
  DescentStrategy(const GameParams& params, double stagnation_threshold = 1e-14);
  Vec2 choose(Vec2 x, int n) override;
  std::string name() const override { return "descent"; }
  std::string meta() const override;

 private:
  GameParams params_;
  double threshold_;
  bool in_fallback_ = false;
  Vec2 fallback_center_;
  double fallback_radius_ = 0.0;
  int fallback_events_ = 0;
};

// eta = 0: the trajectory follows the drift -V alone.
class FollowFlowStrategy : public PlayerOne {
 public:
  Vec2 choose(Vec2, int) override { return {0.0, 0.0}; }
  std::string name() const override { return "follow-flow"; }
};

// eta orthogonal to the displacement from a center; orientation +1 points
// eta_perp outward (escape), -1 inward.
class ExitStrategy : public PlayerOne {
 public:
  ExitStrategy(Vec2 center, int orientation = +1)
      : center_(center), orientation_(orientation) {}
  Vec2 choose(Vec2 x, int n) override;
  std::string name() const override { return "exit"; }

 private:
  Vec2 center_;
  int orientation_;
};

// Unit eta with eta_perp equal to a fixed target direction; the adversary's
// kick is orthogonal to the push, so the normal progress is tau^2 per step.
class AxisPushStrategy : public PlayerOne {
 public:
  explicit AxisPushStrategy(Vec2 direction);
  Vec2 choose(Vec2, int) override { return eta_; }
  std::string name() const override { return "axis-push"; }

 private:
  Vec2 eta_;
};

// Ordered phases with switch conditions; the first phase whose condition
// holds acts. The last phase is the unconditional default.
class CompositeStrategy : public PlayerOne {
 public:
  using Condition = std::function<bool(Vec2, int)>;
  void add_phase(Condition when, std::unique_ptr<PlayerOne> strategy);
  void set_default(std::unique_ptr<PlayerOne> strategy);
  Vec2 choose(Vec2 x, int n) override;
  std::string name() const override { return "composite"; }

 private:
  std::vector<std::pair<Condition, std::unique_ptr<PlayerOne>>> phases_;
  std::unique_ptr<PlayerOne> default_;
};

// Player II policies.
class FixedSign : public PlayerTwo {
 public:
  explicit FixedSign(int b) : b_(b) {}
  int choose(Vec2, Vec2) override { return b_; }
  std::string name() const override { return b_ > 0 ? "fixed(+1)" : "fixed(-1)"; }

 private:
  int b_;
};

// b maximizing (or minimizing) H at the successor.
class SignSeekingLevel : public PlayerTwo {
 public:
  SignSeekingLevel(const GameParams& params, bool maximize)
      : params_(params), maximize_(maximize) {}
  int choose(Vec2 x, Vec2 eta) override;
  std::string name() const override { return maximize_ ? "max-sign" : "min-sign"; }

 private:
  GameParams params_;
  bool maximize_;
};

// b with b * (eta . axis) <= 0: blocks player I's kick along the axis.
class OpposeAxis : public PlayerTwo {
 public:
  explicit OpposeAxis(Vec2 axis) : axis_(axis) {}
  int choose(Vec2, Vec2 eta) override {
    return dot(eta, axis_) > 0.0 ? -1 : +1;
  }
  std::string name() const override { return "oppose-axis"; }

 private:
  Vec2 axis_;
};

// Greedy enumeration: evaluates both successors against an objective and
// picks the larger; ties go to b = +1.
class WorstCaseEnum : public PlayerTwo {
 public:
  WorstCaseEnum(const GameParams& params, std::function<double(Vec2)> objective,
                std::string label = "worst-case")
      : params_(params), objective_(std::move(objective)), label_(std::move(label)) {}
  int choose(Vec2 x, Vec2 eta) override;
  std::string name() const override { return label_; }

 private:
  GameParams params_;
  std::function<double(Vec2)> objective_;
  std::string label_;
};

struct Trajectory {
  std::vector<Vec2> points;               // length steps+1
  std::vector<std::pair<Vec2, int>> controls;  // (eta, b) per step
  double tau = 0.0;
  std::string meta;

  int steps() const { return static_cast<int>(controls.size()); }
  double time() const { return steps() * tau * tau; }
};

using StopCondition = std::function<bool(Vec2, int)>;

// Iterate the game dynamics for at most max_steps or until stop(x, n) holds.
// Deterministic given inputs.
Trajectory run(Vec2 x0, PlayerOne& s1, PlayerTwo& s2, const GameParams& params,
               const StopCondition& stop, int max_steps);

// Closed-form solution of s' = -sqrt(2 s (1-s)):
// s(t) = sin^2(max(asin(sqrt(s0)) - t/sqrt(2), 0)). Requires s0 in (0, 1].
double descent_level_ode(double s0, double t);

struct ReachReport {
  Vec2 start;
  std::string target;
  int steps_used = 0;
  double time_used = 0.0;
  bool success = false;
  std::string adversary;
};

struct Target {
  std::function<bool(Vec2)> contains;
  std::string name;

  static Target region(CellRegion r, std::string name);
  static Target ball(Vec2 center, double radius);
  // Open cell rectangle U_i shrunk by a safety margin.
  static Target cell(int index, double margin = 0.0);
};

ReachReport measure_reach(Vec2 start, const Target& target, PlayerOne& s1,
                          PlayerTwo& s2, const GameParams& params,
                          int budget_steps);

// Cell-to-cell transition controller: regulates |H| into a thin band near
// the separatrix, coasts with the flow until the crossing window on the
// shared edge is favourable, pushes across with eta_perp along the inward
// normal, then steers into the target cell interior. The push keeps the
// adversary's kick orthogonal to the crossing direction; the window bounds
// the tangential drift the adversary can accumulate.
struct EdgeCrossing {
  int axis;          // 0: edge {x1 = coord}, 1: edge {x2 = coord}
  double coord;
  double normal_sign;  // crossing moves x[axis] toward normal_sign
  double tan_lo, tan_hi;
};

class CellTransitionStrategy : public PlayerOne {
 public:
  CellTransitionStrategy(const GameParams& params, EdgeCrossing edge,
                         int source_sign, int target_sign);
  Vec2 choose(Vec2 x, int n) override;
  std::string name() const override { return "cell-transition"; }
  std::string meta() const override;

  // Tunables; defaults work for A in [0.5, 2.5], d <= 0.3, tau ~ 0.1.
  double band_lo = 0.03, band_hi = 0.10;
  double launch_dist = 0.25;
  double corner_margin = 0.35;
  double start_slope = 0.6;      // entrainment cosine needed to begin a push
  double continue_slope = -0.15; // and to keep pushing (headroom past midpoint)
  double enter_depth = 0.03;

 private:
  double entrainment_cos(Vec2 x) const;
  double tangential(Vec2 x) const { return edge_.axis == 0 ? x.y : x.x; }
  Vec2 push_direction() const;
  GameParams params_;
  EdgeCrossing edge_;
  int source_sign_, target_sign_;
  enum class Phase { Seek, Push, Enter } phase_ = Phase::Seek;
  int regulate_ = 0;  // +1 raising the source level, -1 lowering, 0 idle
  int pushes_ = 0, aborts_ = 0;
};

// Route from a point of U_1 into U_i (i = 2,3,4) against a supplied
// adversary; U_4 goes through U_2. Returns the combined report.
ReachReport measure_cell_transition(Vec2 start, int target_cell,
                                    const GameParams& params, int budget_steps,
                                    double target_margin = 0.15);

// Horizontal progress audit: any player-I strategy against OpposeAxis moves
// along `axis` at mean speed at most M = 1 + max|V| (plus O(tau)).
struct CrossingDefenseReport {
  double max_rate = 0.0;   // max over windows of displacement/time
  double bound = 0.0;      // 1 + max|V|
  double tau = 0.0;
};

CrossingDefenseReport crossing_defense(Vec2 start, PlayerOne& s1,
                                       const GameParams& params, Vec2 axis,
                                       int n_steps);

}  // namespace cgflow
