#pragma once

// Random game population shared by the designer property suites.

#include <vector>

#include "redesign/game.hpp"
#include "redesign/rng.hpp"

namespace redesign::testing {

struct RandomGameCase {
  NormalFormGame game;
  ActionProfile target;
  double margin;
  bool zero_sum_target;  // l^o(target) sums to zero
};

// M in {2,3,4}, A_i in {2..5}, random loss range, random interior target cell,
// random margin. When force_zero_sum_target is set the range is symmetric and
// the target cell sums to zero.
inline RandomGameCase random_game_case(RandomStream& rng,
                                       bool force_zero_sum_target) {
  const int players = 2 + static_cast<int>(rng.uniform01() * 3.0);
  std::vector<int> action_counts;
  for (int i = 0; i < players; ++i)
    action_counts.push_back(2 + static_cast<int>(rng.uniform01() * 4.0));

  double lower, upper;
  if (force_zero_sum_target) {
    upper = 1.0 + 4.0 * rng.uniform01();
    lower = -upper;
  } else {
    lower = -4.0 * rng.uniform01();
    upper = lower + 1.0 + 7.0 * rng.uniform01();
  }
  const double margin = 0.5 * (upper - lower) * (0.05 + 0.95 * rng.uniform01());
  const double interior_lo = lower + margin;
  const double interior_hi = upper - margin;

  ActionProfile target;
  for (int count : action_counts)
    target.push_back(static_cast<int>(rng.uniform01() * count));

  LossVector target_losses(static_cast<std::size_t>(players));
  if (force_zero_sum_target) {
    // rejection-sample M-1 coordinates, balance with the last one
    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      double sum = 0.0;
      for (int i = 0; i + 1 < players; ++i) {
        target_losses[static_cast<std::size_t>(i)] =
            interior_lo + (interior_hi - interior_lo) * rng.uniform01();
        sum += target_losses[static_cast<std::size_t>(i)];
      }
      target_losses[static_cast<std::size_t>(players - 1)] = -sum;
      ok = -sum >= interior_lo && -sum <= interior_hi;
    }
    if (!ok) target_losses.assign(static_cast<std::size_t>(players), 0.0);
  } else {
    for (int i = 0; i < players; ++i)
      target_losses[static_cast<std::size_t>(i)] =
          interior_lo + (interior_hi - interior_lo) * rng.uniform01();
  }

  std::size_t profiles = 1;
  for (int count : action_counts) profiles *= static_cast<std::size_t>(count);
  std::vector<double> losses(profiles * static_cast<std::size_t>(players));
  for (double& v : losses) v = lower + (upper - lower) * rng.uniform01();

  NormalFormGame game(action_counts, std::move(losses), lower, upper);
  const std::size_t target_idx = game.profile_index(target);
  std::vector<double> values(game.losses().begin(), game.losses().end());
  for (int i = 0; i < players; ++i)
    values[target_idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i)] =
        target_losses[static_cast<std::size_t>(i)];
  game.set_losses(values);

  return RandomGameCase{std::move(game), std::move(target), margin,
                        force_zero_sum_target};
}

}  // namespace redesign::testing
