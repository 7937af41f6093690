#include "doctest.h"

#include <cmath>

#include "cgflow/hbar.hpp"

using namespace cgflow;

TEST_SUITE_BEGIN("hbar");

TEST_CASE("laminar baselines are exact") {
  const auto front = hbar_front_speed({1.0, 0.0}, 0.0, 0.0, 32, 4.0, 1.0);
  CHECK(front.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(front.error_indicator < 1e-10);

  const auto disc = hbar_discounted({1.0, 0.0}, 0.0, 0.0, {0.1}, 32);
  CHECK(disc.value == doctest::Approx(1.0).epsilon(1e-5));

  GameParams gp;
  gp.tau = 0.05;
  gp.n_steps = 40;
  const auto game = hbar_game({1.0, 0.0}, 0.0, 0.0, gp, 32);
  CHECK(game.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("flat fronts ignore curvature") {
  const auto est = hbar_front_speed({1.0, 0.0}, 0.0, 0.2, 32, 4.0, 1.0);
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS(hbar_front_speed({1, 0}, 1.0, 0.1, 32, 1.0, 2.0));
  CHECK_THROWS(hbar_discounted({1, 0}, 1.0, 0.1, {0.05, 0.1}, 32));
  CHECK_THROWS(hbar_discounted({1, 0}, 1.0, 0.1, {}, 32));
}

TEST_CASE("estimates carry discretization metadata") {
  const auto est = hbar_front_speed({0.0, 1.0}, 1.0, 0.1, 48, 8.0, 2.0);
  CHECK(est.grid == 48);
  CHECK(est.T == 8.0);
  CHECK(est.valid());
  CHECK(est.error_indicator > 0.0);
}

TEST_CASE("coarse three-way concordance smoke test") {
  // Acceptance runs the full-resolution version; this guards the wiring.
  const Vec2 p{1.0, 0.0};
  const auto front = hbar_front_speed(p, 1.0, 0.1, 48, 15.0, 5.0);
  const auto disc = hbar_discounted(p, 1.0, 0.1, {0.2, 0.1}, 48, 1e-7);
  REQUIRE(front.valid());
  REQUIRE(disc.valid());
  CHECK(std::abs(front.value - disc.value) / front.value < 0.15);

  // The kick tau*sqrt(2d) must span a few grid cells or interpolation
  // diffusion swamps the Markstein term; tau = 0.25 at h = 2pi/128 does.
  GameParams gp;
  gp.tau = 0.25;
  gp.n_steps = 160;  // game time 10
  gp.n_angles = 64;
  const auto game = hbar_game(p, 1.0, 0.1, gp, 128);
  REQUIRE(game.valid());
  CHECK(std::abs(game.value - front.value) / front.value < 0.1);
}

TEST_CASE("sweep attaches growth-law diagnostics") {
  const auto rows = sweep({1.0, 0.0}, 0.0, {0.0, 4.0}, 48, 10.0, 2.0, {});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].estimate.value == doctest::Approx(1.0));  // laminar row
  CHECK(rows[1].estimate.value > 0.0);
  CHECK(rows[1].trend ==
        doctest::Approx(rows[1].estimate.value * std::log(4.0) / 4.0));
  CHECK(std::isfinite(rows[1].fitted_c));
  CHECK_THROWS(sweep({1, 0}, 0.0, {4.0, 2.0}, 48, 10.0, 2.0, {}));
}

TEST_CASE("continuity probe flags nothing for the laminar flow") {
  std::vector<Vec2> dirs;
  for (int k = 0; k <= 4; ++k) {
    const double th = 0.5 * kPi * k / 4;
    dirs.push_back({std::cos(th), std::sin(th)});
  }
  const auto probe = continuity_probe(dirs, 0.0, 0.0, 32, 4.0, 1.0);
  CHECK(probe.max_gap < 1e-8);
  CHECK(!probe.jump_flagged);
}

TEST_SUITE_END();
