#include "redesign/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace redesign {

GamePreset make_vd(int num_players) {
  if (num_players < 2)
    throw std::invalid_argument("vd: needs at least two players");
  const std::vector<int> action_counts(static_cast<std::size_t>(num_players), 2);
  const std::size_t profiles = std::size_t{1} << num_players;
  std::vector<double> losses(profiles * static_cast<std::size_t>(num_players));
  for (std::size_t idx = 0; idx < profiles; ++idx) {
    int volunteers = 0;
    for (int i = 0; i < num_players; ++i)
      if (((idx >> (num_players - 1 - i)) & 1u) == 0) ++volunteers;
    for (int i = 0; i < num_players; ++i) {
      const bool volunteered = ((idx >> (num_players - 1 - i)) & 1u) == 0;
      double loss;
      if (volunteered)
        loss = 0.0;
      else
        loss = volunteers > 0 ? -1.0 : 10.0;
      losses[idx * static_cast<std::size_t>(num_players) + static_cast<std::size_t>(i)] = loss;
    }
  }
  NormalFormGame game(action_counts, std::move(losses), -1.0, 10.0);
  ActionProfile target(static_cast<std::size_t>(num_players), 0);
  DesignerSpec spec{.kind = DesignKind::interior,
                    .target = target,
                    .margin = 1.0,
                    .thresholded = true};
  return GamePreset{"vd", std::move(game), std::move(target), std::move(spec),
                    CostModel{}};
}

GamePreset make_tc() {
  const std::vector<int> action_counts{16, 16};
  std::vector<double> losses(16 * 16 * 2);
  for (int a1 = 0; a1 < 16; ++a1) {
    for (int a2 = 0; a2 < 16; ++a2) {
      const double price = std::sqrt(30.0 - a1 - a2);
      const std::size_t idx = static_cast<std::size_t>(a1 * 16 + a2) * 2;
      losses[idx] = -a1 * price;
      losses[idx + 1] = -a2 * price;
    }
  }
  NormalFormGame game(action_counts, std::move(losses), -15.0 * std::sqrt(15.0), 0.0);
  ActionProfile target{10, 10};
  DesignerSpec spec{.kind = DesignKind::interior,
                    .target = target,
                    .margin = 1.0,
                    .thresholded = true};
  return GamePreset{"tc", std::move(game), std::move(target), std::move(spec),
                    CostModel{}};
}

GamePreset make_pd() {
  // action 0 = mum, 1 = fink; rows flatten profile-major
  NormalFormGame game({2, 2},
                      {2, 2,   // (mum, mum)
                       5, 1,   // (mum, fink)
                       1, 5,   // (fink, mum)
                       4, 4},  // (fink, fink)
                      1.0, 5.0);
  ActionProfile target{0, 0};
  DesignerSpec spec{.kind = DesignKind::interior,
                    .target = target,
                    .margin = 1.0,
                    .thresholded = true};
  return GamePreset{"pd", std::move(game), std::move(target), std::move(spec),
                    CostModel{}};
}

GamePreset make_rps() {
  // actions 0 = rock, 1 = paper, 2 = scissors; losses, not payoffs
  NormalFormGame game({3, 3},
                      {0, 0, 1, -1, -1, 1,    // (R, R) (R, P) (R, S)
                       -1, 1, 0, 0, 1, -1,    // (P, R) (P, P) (P, S)
                       1, -1, -1, 1, 0, 0},   // (S, R) (S, P) (S, S)
                      -1.0, 1.0, std::vector<double>{-1.0, 0.0, 1.0});
  ActionProfile target{0, 1};
  DesignerSpec spec{.kind = DesignKind::boundary,
                    .target = target,
                    .margin = 1.0,
                    .interior_vector = LossVector{0.0, 0.0},
                    .regret_rate = 0.5,
                    .epsilon = 0.3,
                    .thresholded = false};
  return GamePreset{"rps", std::move(game), std::move(target), std::move(spec),
                    CostModel{}};
}

GamePreset preset_by_id(const std::string& id) {
  if (id == "vd") return make_vd();
  if (id == "tc") return make_tc();
  if (id == "pd") return make_pd();
  if (id == "rps") return make_rps();
  throw std::invalid_argument("unknown game preset: " + id);
}

}  // namespace redesign
