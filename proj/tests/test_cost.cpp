#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "redesign/cost.hpp"
#include "redesign/rng.hpp"

using namespace redesign;

TEST_CASE("played-cell charge") {
  const CostModel unit{};
  CHECK(round_cost(unit, std::vector{2.0, 2.0}, std::vector{2.0, 2.0}) == 0.0);
  // PD cell (mum, fink): original (5, 1), designed (1.5, 2.5)
  CHECK(round_cost(unit, std::vector{5.0, 1.0}, std::vector{1.5, 2.5}) ==
        doctest::Approx(5.0));
  // RPS cell (R, R) at t = 1: original (0, 0), designed (-0.5, 0.5)
  CHECK(round_cost(unit, std::vector{0.0, 0.0}, std::vector{-0.5, 0.5}) ==
        doctest::Approx(1.0));
}

TEST_CASE("norm orders and the lipschitz factor") {
  const std::vector original{0.0, 0.0};
  const std::vector designed{3.0, 4.0};
  CHECK(round_cost({1.0, 1.0}, original, designed) == doctest::Approx(7.0));
  CHECK(round_cost({1.0, 2.0}, original, designed) == doctest::Approx(5.0));
  CHECK(round_cost({1.0, std::numeric_limits<double>::infinity()}, original,
                   designed) == doctest::Approx(4.0));
  CHECK(round_cost({2.5, 1.0}, original, designed) == doctest::Approx(17.5));

  CHECK_THROWS_AS(round_cost({1.0, 0.5}, original, designed), std::invalid_argument);
  CHECK_THROWS_AS(round_cost({0.0, 1.0}, original, designed), std::invalid_argument);
  CHECK_THROWS_AS(round_cost({1.0, 1.0}, original, std::vector{1.0}),
                  std::invalid_argument);
}

TEST_CASE("nonnegativity, triangle inequality, range bound") {
  RandomStream rng(123);
  const double lower = -2.0, upper = 3.0;
  for (double p : {1.0, 2.0, 3.5, std::numeric_limits<double>::infinity()}) {
    const CostModel model{1.0, p};
    for (int trial = 0; trial < 200; ++trial) {
      const int players = 2 + static_cast<int>(rng.uniform01() * 3);
      std::vector<double> x(players), y(players), z(players);
      for (int i = 0; i < players; ++i) {
        x[i] = lower + (upper - lower) * rng.uniform01();
        y[i] = lower + (upper - lower) * rng.uniform01();
        z[i] = lower + (upper - lower) * rng.uniform01();
      }
      const double xy = round_cost(model, x, y);
      const double yz = round_cost(model, y, z);
      const double xz = round_cost(model, x, z);
      CHECK(xz >= 0.0);
      CHECK(xz <= xy + yz + 1e-12);
      const double cap = (upper - lower) *
                         (std::isinf(p) ? 1.0 : std::pow(players, 1.0 / p));
      CHECK(xz <= cap + 1e-12);
    }
  }
}
