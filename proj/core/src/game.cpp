#include "redesign/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace redesign {
namespace {

constexpr std::size_t kMaxCells = 100'000'000;

}  // namespace

NormalFormGame::NormalFormGame(std::vector<int> action_counts,
                               std::vector<double> losses, double loss_lower,
                               double loss_upper,
                               std::optional<std::vector<double>> natural_values,
                               double tol)
    : action_counts_(std::move(action_counts)),
      losses_(std::move(losses)),
      loss_lower_(loss_lower),
      loss_upper_(loss_upper),
      natural_values_(std::move(natural_values)) {
  if (action_counts_.empty())
    throw std::invalid_argument("game: needs at least one player");
  for (std::size_t i = 0; i < action_counts_.size(); ++i) {
    if (action_counts_[i] < 1)
      throw std::invalid_argument("game: player " + std::to_string(i) +
                                  " has no actions");
  }
  if (!(loss_upper_ > loss_lower_))
    throw std::invalid_argument("game: loss_upper must exceed loss_lower");

  num_profiles_ = 1;
  for (int count : action_counts_) {
    if (num_profiles_ > kMaxCells / static_cast<std::size_t>(count))
      throw std::invalid_argument("game: joint action space too large");
    num_profiles_ *= static_cast<std::size_t>(count);
  }
  strides_.assign(action_counts_.size(), 1);
  for (std::size_t i = action_counts_.size() - 1; i-- > 0;) {
    strides_[i] = strides_[i + 1] * static_cast<std::size_t>(action_counts_[i + 1]);
  }

  if (losses_.size() != num_profiles_ * action_counts_.size())
    throw std::invalid_argument("game: loss table has " +
                                std::to_string(losses_.size()) +
                                " values, expected " +
                                std::to_string(num_profiles_ * action_counts_.size()));
  for (double v : losses_) {
    if (!std::isfinite(v) || v < loss_lower_ - tol || v > loss_upper_ + tol)
      throw std::invalid_argument("game: loss value " + std::to_string(v) +
                                  " outside [L, U]");
  }

  if (natural_values_) {
    if (natural_values_->empty())
      throw std::invalid_argument("game: natural_values must be non-empty");
    auto [lo, hi] = std::minmax_element(natural_values_->begin(), natural_values_->end());
    if (*lo != loss_lower_ || *hi != loss_upper_)
      throw std::invalid_argument(
          "game: natural_values min/max must equal loss_lower/loss_upper");
  }
}

std::size_t NormalFormGame::profile_index(const ActionProfile& a) const {
  if (a.size() != action_counts_.size())
    throw std::invalid_argument("profile: expected " +
                                std::to_string(action_counts_.size()) +
                                " actions, got " + std::to_string(a.size()));
  std::size_t index = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= action_counts_[i])
      throw std::out_of_range("profile: action " + std::to_string(a[i]) +
                              " out of range for player " + std::to_string(i));
    index += static_cast<std::size_t>(a[i]) * strides_[i];
  }
  return index;
}

ActionProfile NormalFormGame::profile_at(std::size_t index) const {
  if (index >= num_profiles_)
    throw std::out_of_range("profile index out of range");
  ActionProfile a(action_counts_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<int>(index / strides_[i] %
                            static_cast<std::size_t>(action_counts_[i]));
  }
  return a;
}

LossVector NormalFormGame::loss_at(const ActionProfile& a) const {
  const std::size_t idx = profile_index(a);
  return LossVector(loss_row(idx).begin(), loss_row(idx).end());
}

double NormalFormGame::loss_at(const ActionProfile& a, int player) const {
  if (player < 0 || player >= num_players())
    throw std::out_of_range("player index out of range");
  return loss(profile_index(a), player);
}

void NormalFormGame::set_losses(std::span<const double> values, double tol) {
  if (values.size() != losses_.size())
    throw std::invalid_argument("set_losses: size mismatch");
  for (double v : values) {
    if (!std::isfinite(v) || v < loss_lower_ - tol || v > loss_upper_ + tol)
      throw std::invalid_argument("set_losses: value outside [L, U]");
  }
  losses_.assign(values.begin(), values.end());
}

bool NormalFormGame::same_shape(const NormalFormGame& other) const {
  return action_counts_ == other.action_counts_;
}

int match_count(const ActionProfile& a, const ActionProfile& target) {
  if (a.size() != target.size())
    throw std::invalid_argument("match_count: profile length mismatch");
  int matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == target[i]) ++matches;
  }
  return matches;
}

bool is_zero_sum(const NormalFormGame& game, double tol) {
  if (tol < 0) throw std::invalid_argument("is_zero_sum: negative tolerance");
  const int players = game.num_players();
  for (std::size_t idx = 0; idx < game.num_profiles(); ++idx) {
    double sum = 0.0;
    for (int i = 0; i < players; ++i) sum += game.loss(idx, i);
    if (std::abs(sum) > tol) return false;
  }
  return true;
}

double dominance_gap(const NormalFormGame& game, int player, int target_action) {
  if (player < 0 || player >= game.num_players())
    throw std::out_of_range("dominance_gap: player index out of range");
  const int count = game.action_counts()[static_cast<std::size_t>(player)];
  if (target_action < 0 || target_action >= count)
    throw std::out_of_range("dominance_gap: action index out of range");
  if (count == 1) return std::numeric_limits<double>::infinity();

  const std::size_t stride = game.stride(player);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < game.num_profiles(); ++idx) {
    const int action = static_cast<int>(idx / stride % static_cast<std::size_t>(count));
    if (action == target_action) continue;
    const std::size_t base = idx - static_cast<std::size_t>(action) * stride;
    const std::size_t target_idx = base + static_cast<std::size_t>(target_action) * stride;
    gap = std::min(gap, game.loss(idx, player) - game.loss(target_idx, player));
  }
  return gap;
}

}  // namespace redesign
