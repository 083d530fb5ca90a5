#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace redesign {

// One joint choice, one 0-based action index per player.
using ActionProfile = std::vector<int>;
// Per-player losses for one profile.
using LossVector = std::vector<double>;

// Finite normal-form game with vector-valued losses.
//
// Losses are stored as a dense profile-major tensor: the entry for
// (profile, player) sits at profile_index(a) * num_players() + player.
// Profiles are encoded mixed-radix with the last player's action varying
// fastest, so nested loss tables flatten in this exact order.
// Immutable apart from set_losses(); safe to share across threads once built.
class NormalFormGame {
 public:
  // natural_values, when present, is the game's discrete loss alphabet;
  // its min/max must equal loss_lower/loss_upper.
  NormalFormGame(std::vector<int> action_counts, std::vector<double> losses,
                 double loss_lower, double loss_upper,
                 std::optional<std::vector<double>> natural_values = std::nullopt,
                 double tol = 1e-9);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  std::size_t num_profiles() const { return num_profiles_; }
  double loss_lower() const { return loss_lower_; }
  double loss_upper() const { return loss_upper_; }
  double loss_range() const { return loss_upper_ - loss_lower_; }
  const std::optional<std::vector<double>>& natural_values() const {
    return natural_values_;
  }

  // Mixed-radix encoding; validates the profile.
  std::size_t profile_index(const ActionProfile& a) const;
  ActionProfile profile_at(std::size_t index) const;
  std::size_t stride(int player) const {
    return strides_[static_cast<std::size_t>(player)];
  }

  LossVector loss_at(const ActionProfile& a) const;
  double loss_at(const ActionProfile& a, int player) const;

  // Unchecked hot-path accessors.
  double loss(std::size_t profile_index, int player) const {
    return losses_[profile_index * action_counts_.size() +
                   static_cast<std::size_t>(player)];
  }
  std::span<const double> losses() const { return losses_; }
  // Contiguous per-player row for one profile.
  std::span<const double> loss_row(std::size_t profile_index) const {
    return {losses_.data() + profile_index * action_counts_.size(),
            action_counts_.size()};
  }

  // Replaces the whole loss tensor in place (same shape, values in [L, U]).
  void set_losses(std::span<const double> values, double tol = 1e-9);

  bool same_shape(const NormalFormGame& other) const;

 private:
  std::vector<int> action_counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_;
  std::vector<double> losses_;
  double loss_lower_;
  double loss_upper_;
  std::optional<std::vector<double>> natural_values_;
};

// Number of coordinates where a and target agree.
int match_count(const ActionProfile& a, const ActionProfile& target);

// True iff every profile's losses sum to 0 within tol.
bool is_zero_sum(const NormalFormGame& game, double tol = 1e-9);

// Minimum margin by which target_action beats any alternative action of
// `player`, over every opponent configuration:
//   min over a_{-i}, a_i != target of l_i(a_i, a_{-i}) - l_i(target, a_{-i}).
// Positive certifies strict dominance. Returns +infinity when the player has
// no alternative action (single-action player).
double dominance_gap(const NormalFormGame& game, int player, int target_action);

}  // namespace redesign
