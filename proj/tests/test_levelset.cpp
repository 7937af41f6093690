#include "doctest.h"

#include <cmath>
#include <random>

#include "cgflow/contour.hpp"
#include "cgflow/levelset.hpp"
#include "oracles.hpp"

using namespace cgflow;

TEST_SUITE_BEGIN("levelset");

namespace {

CorrectorState make_state(int n, Vec2 p, double d, double A) {
  CorrectorState s;
  s.w = Grid2(n, n, 0.0);
  s.p = p;
  s.d = d;
  s.flow = CellularFlow(A);
  return s;
}

CorrectorState circle_state(int n, double r0, double d, double A) {
  CorrectorState s = make_state(n, {0.0, 0.0}, d, A);
  const Vec2 c{kPi, kPi};
  s.w = Grid2::sample(n, n, [&](Vec2 x) { return torus_distance(x, c) - r0; });
  return s;
}

double front_radius(const Grid2& g) {
  const Vec2 c{kPi, kPi};
  const auto verts = vertices_of(extract_front(g, 0.0));
  REQUIRE(!verts.empty());
  double sum = 0.0;
  for (Vec2 v : verts) sum += torus_distance(v, c);
  return sum / verts.size();
}

}  // namespace

TEST_CASE("curvature field: flat, constant, circle") {
  auto flat = make_state(64, {1.0, 0.0}, 0.1, 0.0);
  const Grid2 k0 = curvature_field(flat, flat.w.min_h());
  CHECK(std::abs(k0.min()) < 1e-12);
  CHECK(std::abs(k0.max()) < 1e-12);

  auto shifted = flat;
  shifted.w += 3.7;
  const Grid2 k1 = curvature_field(shifted, shifted.w.min_h());
  CHECK(k1.values() == k0.values());

  // kappa ~ 1 on the unit circle, within O(h + eps).
  auto circ = circle_state(128, 1.0, 0.1, 0.0);
  const Grid2 kc = curvature_field(circ, circ.w.min_h());
  const double h = circ.w.min_h();
  int checked = 0;
  for (int j = 0; j < 128; ++j)
    for (int i = 0; i < 128; ++i) {
      const double r = torus_distance(circ.w.node(i, j), {kPi, kPi});
      if (std::abs(r - 1.0) < 2 * h) {
        REQUIRE(kc.at(i, j) == doctest::Approx(1.0).epsilon(6 * h));
        ++checked;
      }
    }
  REQUIRE(checked > 100);
}

TEST_CASE("curvature field rejects non-finite state") {
  auto s = make_state(32, {1.0, 0.0}, 0.1, 0.0);
  s.w.at(3, 4) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(curvature_field(s, 0.1), NonFiniteError);
}

TEST_CASE("cfl rejection carries the admissible step") {
  auto s = make_state(64, {1.0, 0.0}, 0.1, 2.0);
  const double ok = admissible_dt(s);
  try {
    step(s, 2 * ok);
    FAIL("expected CflError");
  } catch (const CflError& e) {
    CHECK(e.admissible_dt == doctest::Approx(ok));
  }
}

TEST_CASE("plane front advances at unit speed exactly") {
  auto s = make_state(64, {1.0, 0.0}, 0.3, 0.0);
  const double dt = admissible_dt(s);
  s = step(s, dt);
  for (double v : s.w.values()) REQUIRE(v == doctest::Approx(-dt).epsilon(1e-14));

  // Longer horizon: max |w + t| stays at rounding level.
  auto r = evolve(make_state(64, {1.0, 0.0}, 0.7, 0.0), 2.0, 0.5);
  for (double v : r.state.w.values())
    REQUIRE(std::abs(v + r.state.t) < 1e-10);
}

TEST_CASE("translation equivariance: step commutes with adding a constant") {
  auto s = make_state(64, {1.0, 0.0}, 0.1, 2.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (double& v : s.w.values()) v = 0.0;
  // A smooth non-trivial field.
  s.w = Grid2::sample(64, 64, [](Vec2 x) {
    return 0.3 * std::sin(x.x) * std::cos(2 * x.y) + 0.1 * std::cos(x.x + x.y);
  });
  auto shifted = s;
  shifted.w += 1.234;
  const double dt = admissible_dt(s);
  const auto s1 = step(s, dt);
  const auto s2 = step(shifted, dt);
  for (std::size_t k = 0; k < s1.w.size(); ++k)
    REQUIRE(s2.w.values()[k] - s1.w.values()[k] ==
            doctest::Approx(1.234).epsilon(1e-13));
}

TEST_CASE("expanding circle follows the radius ODE") {
  // R' = (1 - d/R)_+ with d=0.2, R0=1; reference value from the test-side
  // RK4 oracle, frozen: R(0.5) = 1.4162215046587472.
  const double r_oracle = oracles::circle_radius(1.0, 0.2, 0.5);
  CHECK(r_oracle == doctest::Approx(1.4162215046587472).epsilon(1e-9));

  auto r128 = evolve(circle_state(128, 1.0, 0.2, 0.0), 0.5, 0.5);
  const double err128 = std::abs(front_radius(r128.state.w) - r_oracle);
  CHECK(err128 <= 2 * r128.state.w.min_h());
}

TEST_CASE("small circle below the Markstein radius stays put") {
  auto s0 = circle_state(128, 0.1, 0.2, 0.0);
  const auto f0 = extract_front(s0.w, 0.0);
  auto r = evolve(std::move(s0), 1.0, 0.25);
  const auto f1 = extract_front(r.state.w, 0.0);
  CHECK(hausdorff_distance(f0, f1) <= 2 * r.state.w.min_h());
}

TEST_CASE("positive part clamps the speed field on a small circle") {
  auto s = circle_state(128, 0.1, 0.5, 0.0);
  const Grid2 kappa = curvature_field(s, s.w.min_h());
  const double h = s.w.min_h();
  for (int j = 0; j < 128; ++j)
    for (int i = 0; i < 128; ++i) {
      const double r = torus_distance(s.w.node(i, j), {kPi, kPi});
      if (std::abs(r - 0.1) < h)
        REQUIRE(1.0 - s.d * kappa.at(i, j) < 0.0);
    }
}

TEST_CASE("cellular front freezes where the clamp covers a band") {
  // Initial front {H = 1-r}: the level curve at level 0.95 has curvature
  // in [3.04, 3.25], so d = 0.4 clamps the speed on a band around it and the
  // front is stagnant; with d = 0.2 the product d*kappa ~ 0.6 stays below 1
  // and the front burns outward. The acceptance criterion pins d = 0.2; this
  // case documents the mechanism at parameters that satisfy d*kappa >= 1.
  for (double A : {1.0, 4.0}) {
    const int n = 128;
    CorrectorState s = make_state(n, {0.0, 0.0}, 0.4, A);
    s.w = Grid2::sample(n, n, [](Vec2 x) { return 0.95 - stream(x); });
    const auto f0 = extract_front(s.w, 0.0);
    const double h = s.w.min_h();
    auto r = evolve(std::move(s), 1.0, 0.5);
    const double disp = hausdorff_distance(f0, extract_front(r.state.w, 0.0));
    REQUIRE(disp <= 3 * h);
  }
}

TEST_CASE("evolve: T=0 is the identity") {
  auto s = make_state(32, {1.0, 0.0}, 0.1, 1.0);
  s.w.at(5, 5) = 0.25;
  const auto before = s.w.values();
  auto r = evolve(std::move(s), 0.0, 1.0);
  CHECK(r.state.w.values() == before);
  CHECK(r.checkpoints.size() == 1);
}

TEST_CASE("evolve: mean w drifts linearly after burn-in") {
  auto r = evolve(make_state(96, {1.0, 0.0}, 0.1, 2.0), 20.0, 1.0);
  // Fit the slope on t >= 8 and check the residual stays small relative to
  // the drift; this is self-consistency of the linear regime, not an oracle.
  std::vector<Checkpoint> tail;
  for (const auto& cp : r.checkpoints)
    if (cp.t >= 8.0) tail.push_back(cp);
  REQUIRE(tail.size() >= 5);
  double st = 0, sm = 0, stt = 0, stm = 0;
  for (const auto& cp : tail) {
    st += cp.t; sm += cp.mean_w; stt += cp.t * cp.t; stm += cp.t * cp.mean_w;
  }
  const double n = static_cast<double>(tail.size());
  const double slope = (n * stm - st * sm) / (n * stt - st * st);
  const double icept = (sm - slope * st) / n;
  CHECK(slope < -0.5);  // the front genuinely drifts
  for (const auto& cp : tail)
    REQUIRE(std::abs(cp.mean_w - (icept + slope * cp.t)) <
            0.02 * std::abs(slope) * cp.t + 0.02);
}

TEST_CASE("scheme monotonicity on ordered pairs") {
  // Ordered initial data stay ordered: the discrete comparison surrogate.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const double a1 = u(rng), a2 = u(rng), ph1 = kPi * u(rng), ph2 = kPi * u(rng);
    const double amp = 0.05 + 0.1 * std::abs(u(rng));
    auto low = make_state(64, {1.0, 0.0}, 0.1, 2.0);
    low.w = Grid2::sample(64, 64, [&](Vec2 x) {
      return 0.2 * a1 * std::sin(x.x + ph1) + 0.2 * a2 * std::cos(2 * x.y + ph2);
    });
    auto high = low;
    high.w = Grid2::sample(64, 64, [&](Vec2 x) {
      const double bump =
          amp * std::exp(3.0 * (std::cos(x.x - ph2) + std::cos(x.y - ph1) - 2.0));
      return low.w.interpolate(x) + bump;
    });
    const double dt = admissible_dt(low);
    int steps = 0;
    for (double t = 0.0; t < 0.5; t += dt, ++steps) {
      low = step(low, dt);
      high = step(high, dt);
    }
    double violation = 0.0;
    for (std::size_t k = 0; k < low.w.size(); ++k)
      violation = std::max(violation, low.w.values()[k] - high.w.values()[k]);
    REQUIRE(violation <= 1e-10 * steps);
  }
}

TEST_CASE("ball of dependence grows at most like C sqrt(t) + M t") {
  const int n = 128;
  auto base = make_state(n, {1.0, 0.0}, 0.1, 1.0);
  auto pert = base;
  const Vec2 c{kPi, kPi};
  const double r_bump = 0.3;
  pert.w = Grid2::sample(n, n, [&](Vec2 x) {
    const double r = torus_distance(x, c);
    return r < r_bump ? 0.5 * std::cos(r / r_bump * kPi / 2) : 0.0;
  });

  auto radius_of_difference = [&](const Grid2& a, const Grid2& b) {
    double rmax = 0.0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (std::abs(a.at(i, j) - b.at(i, j)) > 1e-8)
          rmax = std::max(rmax, torus_distance(a.node(i, j), c));
    return rmax;
  };

  const double t1 = 0.25, t2 = 1.0;
  auto b1 = evolve(base, t1, t1);
  auto p1 = evolve(pert, t1, t1);
  const double r1 = radius_of_difference(b1.state.w, p1.state.w);
  auto b2 = evolve(std::move(b1.state), t2 - t1, t2 - t1);
  auto p2 = evolve(std::move(p1.state), t2 - t1, t2 - t1);

  const double M = 1.0 + 1.0;  // 1 + A
  // Fit C at t1, then the fitted cone must hold at t2.
  const double r2 = radius_of_difference(b2.state.w, p2.state.w);
  const double C =
      std::max(0.0, (r1 - r_bump - M * t1) / std::sqrt(t1)) + 0.2;
  CHECK(r2 <= r_bump + C * std::sqrt(t2) + M * t2 + 2 * base.w.min_h());
}

TEST_CASE("curvature regularization sensitivity is reported") {
  // Open question in the discretization: eps in {h/2, h, 2h}. Report the
  // spread of the circle-radius error; no assertion beyond sanity.
  const double r_oracle = oracles::circle_radius(1.0, 0.2, 0.5);
  const double h = kTwoPi / 128;
  std::printf("eps sensitivity (circle R(0.5), oracle %.6f):\n", r_oracle);
  for (double f : {0.5, 1.0, 2.0}) {
    auto s = circle_state(128, 1.0, 0.2, 0.0);
    s.eps = f * h;
    auto r = evolve(std::move(s), 0.5, 0.5);
    const double rr = front_radius(r.state.w);
    std::printf("  eps = %.2f h -> R = %.6f (err %+.2e)\n", f, rr, rr - r_oracle);
    REQUIRE(std::abs(rr - r_oracle) < 4 * h);
  }
}

TEST_SUITE_END();
