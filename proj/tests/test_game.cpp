#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "redesign/catalog.hpp"
#include "redesign/game.hpp"
#include "redesign/rng.hpp"

using namespace redesign;

TEST_CASE("construction validates the invariants") {
  CHECK_THROWS_AS(NormalFormGame({2, 2}, {0, 0, 0, 0, 0, 0, 0, 0}, 1.0, 1.0),
                  std::invalid_argument);  // U must exceed L
  CHECK_THROWS_AS(NormalFormGame({2, 2}, {0, 0, 0}, -1.0, 1.0),
                  std::invalid_argument);  // table not total
  CHECK_THROWS_AS(NormalFormGame({2}, {0.0, 3.0}, -1.0, 1.0),
                  std::invalid_argument);  // value outside [L, U]
  CHECK_THROWS_AS(NormalFormGame({2}, {0.0, 1.0}, -1.0, 1.0,
                                 std::vector<double>{0.0, 1.0}),
                  std::invalid_argument);  // natural min != L
  CHECK_THROWS_AS(NormalFormGame({0}, {}, -1.0, 1.0), std::invalid_argument);

  const NormalFormGame game({2}, {-1.0, 1.0}, -1.0, 1.0,
                            std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(game.natural_values()->size() == 3);
  CHECK(game.num_profiles() == 2);
}

TEST_CASE("loss lookup on the example games") {
  const GamePreset pd = make_pd();
  CHECK(pd.game.loss_at({0, 0}) == LossVector{2.0, 2.0});
  const GamePreset rps = make_rps();
  CHECK(rps.game.loss_at({0, 0}) == LossVector{0.0, 0.0});
  const GamePreset vd = make_vd(3);
  CHECK(vd.game.loss_at({0, 0, 0}) == LossVector{0.0, 0.0, 0.0});

  CHECK_THROWS_AS(pd.game.loss_at({0, 2}), std::out_of_range);
  CHECK_THROWS_AS(pd.game.loss_at({0}), std::invalid_argument);
}

TEST_CASE("profile indexing round-trips") {
  RandomStream rng(11);
  const NormalFormGame game({3, 2, 4}, std::vector<double>(24 * 3, 0.0), -1.0, 1.0);
  for (std::size_t idx = 0; idx < game.num_profiles(); ++idx) {
    CHECK(game.profile_index(game.profile_at(idx)) == idx);
  }
  // last player's action varies fastest
  CHECK(game.profile_index({0, 0, 1}) == 1);
  CHECK(game.profile_index({1, 0, 0}) == 8);
}

TEST_CASE("match_count") {
  CHECK(match_count({1, 2, 3}, {1, 2, 3}) == 3);
  CHECK(match_count({1, 2, 3}, {0, 0, 0}) == 0);
  CHECK(match_count({1, 0, 3}, {1, 2, 0}) == 1);
  CHECK_THROWS_AS(match_count({1}, {1, 2}), std::invalid_argument);

  RandomStream rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    ActionProfile a, b;
    for (int i = 0; i < 4; ++i) {
      a.push_back(static_cast<int>(rng.uniform01() * 3));
      b.push_back(static_cast<int>(rng.uniform01() * 3));
    }
    CHECK(match_count(a, b) == match_count(b, a));
    CHECK(match_count(a, a) == 4);
  }
}

TEST_CASE("is_zero_sum") {
  CHECK(is_zero_sum(make_rps().game));
  CHECK_FALSE(is_zero_sum(make_pd().game));
  CHECK(is_zero_sum(NormalFormGame({2, 2}, std::vector<double>(8, 0.0), -1.0, 1.0)));
  CHECK_THROWS_AS(is_zero_sum(make_rps().game, -1.0), std::invalid_argument);

  // invariant under relabelling the players' actions
  const NormalFormGame& rps = make_rps().game;
  std::vector<double> relabelled(rps.losses().size());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 2; ++i)
        relabelled[static_cast<std::size_t>(((2 - a) * 3 + (2 - b)) * 2 + i)] =
            rps.loss(static_cast<std::size_t>(a * 3 + b), i);
  CHECK(is_zero_sum(NormalFormGame({3, 3}, relabelled, -1.0, 1.0)));
}

TEST_CASE("dominance gap certifies strict dominance") {
  // redesigned VD (thresholded interior, M = 3, rho = 1), flattened
  const double third = 1.0 / 3.0;
  const NormalFormGame designed_vd(
      {2, 2, 2},
      {0, 0, 0,                                  // (v, v, v)
       -third, -third, 2 * third,                // (v, v, n)
       -third, 2 * third, -third,                // (v, n, v)
       -2 * third, third, third,                 // (v, n, n)
       2 * third, -third, -third,                // (n, v, v)
       third, -2 * third, third,                 // (n, v, n)
       third, third, -2 * third,                 // (n, n, v)
       10, 10, 10},                              // (n, n, n)
      -1.0, 10.0);
  for (int i = 0; i < 3; ++i)
    CHECK(dominance_gap(designed_vd, i, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // unthresholded interior redesign of PD with rho = 1: gap (1 - 1/M) rho
  const NormalFormGame designed_pd({2, 2}, {2, 2, 1.5, 2.5, 2.5, 1.5, 2, 2}, 1.0, 5.0);
  CHECK(dominance_gap(designed_pd, 0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dominance_gap(designed_pd, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));

  // original PD: mum is dominated
  CHECK(dominance_gap(make_pd().game, 0, 0) < 0.0);

  // single-action player has no alternative
  const NormalFormGame degenerate({1, 2}, {0, 0, 0, 0}, -1.0, 1.0);
  CHECK(dominance_gap(degenerate, 0, 0) ==
        std::numeric_limits<double>::infinity());

  CHECK_THROWS_AS(dominance_gap(designed_pd, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(dominance_gap(designed_pd, 0, 2), std::out_of_range);
}

TEST_CASE("set_losses keeps shape and range") {
  NormalFormGame game({2}, {0.0, 0.5}, -1.0, 1.0);
  game.set_losses(std::vector<double>{1.0, -1.0});
  CHECK(game.loss_at({0}, 0) == 1.0);
  CHECK_THROWS_AS(game.set_losses(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(game.set_losses(std::vector<double>{2.0, 0.0}),
                  std::invalid_argument);
}
