#include "redesign/designer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace redesign {
namespace {

constexpr double kTol = 1e-9;

void check_rates(double regret_rate, double epsilon) {
  if (!(regret_rate >= 0.0 && regret_rate < 1.0))
    throw std::invalid_argument("designer: regret rate must be in [0, 1)");
  if (!(epsilon > 0.0 && epsilon <= 1.0 - regret_rate))
    throw std::invalid_argument("designer: epsilon must be in (0, 1 - alpha]");
}

// Shared kernel of the interior construction: target_losses stands in for
// l^o(target), so the boundary design can substitute its interior vector.
std::vector<double> interior_values(const NormalFormGame& original,
                                    const ActionProfile& target,
                                    const LossVector& target_losses,
                                    double margin) {
  const int players = original.num_players();
  const double m = static_cast<double>(players);
  std::vector<double> values(original.num_profiles() * static_cast<std::size_t>(players));
  ActionProfile a(static_cast<std::size_t>(players));
  for (std::size_t idx = 0; idx < original.num_profiles(); ++idx) {
    int matches = 0;
    for (int i = 0; i < players; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<int>(
          idx / original.stride(i) %
          static_cast<std::size_t>(original.action_counts()[static_cast<std::size_t>(i)]));
      if (a[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)]) ++matches;
    }
    const double d = static_cast<double>(matches);
    for (int i = 0; i < players; ++i) {
      const double base = target_losses[static_cast<std::size_t>(i)];
      values[idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i)] =
          a[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)]
              ? base - (1.0 - d / m) * margin
              : base + (d / m) * margin;
    }
  }
  return values;
}

void check_interiority(const LossVector& target_losses, double loss_lower,
                       double loss_upper, double margin) {
  for (std::size_t i = 0; i < target_losses.size(); ++i) {
    const double v = target_losses[i];
    if (v < loss_lower + margin - kTol || v > loss_upper - margin + kTol)
      throw std::invalid_argument(
          "designer: target loss for player " + std::to_string(i) + " (" +
          std::to_string(v) + ") is not at least margin " + std::to_string(margin) +
          " inside the loss range");
  }
}

}  // namespace

double interpolation_weight(double regret_rate, double epsilon, std::int64_t t) {
  check_rates(regret_rate, epsilon);
  if (t < 1) throw std::invalid_argument("designer: round index must be >= 1");
  return std::pow(static_cast<double>(t), regret_rate + epsilon - 1.0);
}

NormalFormGame interior_design(const NormalFormGame& original,
                               const ActionProfile& target, double margin) {
  if (!(margin > 0.0) || margin > 0.5 * original.loss_range() + kTol)
    throw std::invalid_argument("designer: margin must be in (0, (U - L) / 2]");
  const LossVector target_losses = original.loss_at(target);
  check_interiority(target_losses, original.loss_lower(), original.loss_upper(),
                    margin);
  return NormalFormGame(original.action_counts(),
                        interior_values(original, target, target_losses, margin),
                        original.loss_lower(), original.loss_upper(),
                        original.natural_values());
}

NormalFormGame threshold_to_original(const NormalFormGame& designed,
                                     const NormalFormGame& original,
                                     const ActionProfile& target) {
  if (!designed.same_shape(original) ||
      designed.loss_lower() != original.loss_lower() ||
      designed.loss_upper() != original.loss_upper())
    throw std::invalid_argument("threshold: games differ in shape or loss range");
  original.profile_index(target);  // validates

  const int players = designed.num_players();
  std::vector<double> values(designed.losses().begin(), designed.losses().end());
  for (std::size_t idx = 0; idx < designed.num_profiles(); ++idx) {
    for (int i = 0; i < players; ++i) {
      const int action = static_cast<int>(
          idx / designed.stride(i) %
          static_cast<std::size_t>(designed.action_counts()[static_cast<std::size_t>(i)]));
      const std::size_t at = idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i);
      const double orig = original.loss(idx, i);
      values[at] = action == target[static_cast<std::size_t>(i)]
                       ? std::min(values[at], orig)
                       : std::max(values[at], orig);
    }
  }
  return NormalFormGame(designed.action_counts(), std::move(values),
                        designed.loss_lower(), designed.loss_upper(),
                        designed.natural_values());
}

RedesignedRound boundary_design(const NormalFormGame& original,
                                const ActionProfile& target,
                                const LossVector& interior_vector, double margin,
                                double regret_rate, double epsilon,
                                std::int64_t t) {
  if (interior_vector.size() != static_cast<std::size_t>(original.num_players()))
    throw std::invalid_argument("designer: interior vector length mismatch");
  if (!(margin > 0.0))
    throw std::invalid_argument("designer: margin must be positive");
  // Cap the margin at the largest value keeping v interior.
  double cap = 0.5 * original.loss_range();
  for (double v : interior_vector)
    cap = std::min(cap, std::min(v - original.loss_lower(), original.loss_upper() - v));
  const double effective = std::min(margin, cap);
  if (!(effective > 0.0))
    throw std::invalid_argument(
        "designer: interior vector touches the loss range boundary");
  const double w = interpolation_weight(regret_rate, epsilon, t);

  const LossVector target_losses = original.loss_at(target);
  std::vector<double> values =
      interior_values(original, target, interior_vector, effective);
  const int players = original.num_players();
  for (std::size_t idx = 0; idx < original.num_profiles(); ++idx) {
    for (int i = 0; i < players; ++i) {
      const std::size_t at = idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i);
      values[at] = w * values[at] +
                   (1.0 - w) * target_losses[static_cast<std::size_t>(i)];
    }
  }
  return RedesignedRound{
      .round = t,
      .game = NormalFormGame(original.action_counts(), std::move(values),
                             original.loss_lower(), original.loss_upper(),
                             original.natural_values()),
      .weight = w,
  };
}

NormalFormGame discrete_design(const NormalFormGame& game, double loss_lower,
                               double loss_upper, RandomStream& rng) {
  if (!(loss_upper > loss_lower))
    throw std::invalid_argument("designer: loss_upper must exceed loss_lower");
  const double range = loss_upper - loss_lower;
  std::vector<double> values(game.losses().begin(), game.losses().end());
  for (double& v : values) {
    if (v < loss_lower - kTol || v > loss_upper + kTol)
      throw std::invalid_argument("designer: loss value outside [L, U]");
    const double p = std::clamp((v - loss_lower) / range, 0.0, 1.0);
    v = rng.bernoulli(p) ? loss_upper : loss_lower;
  }
  return NormalFormGame(game.action_counts(), std::move(values), loss_lower,
                        loss_upper, game.natural_values());
}

LossVector default_interior_vector(const NormalFormGame& game) {
  return LossVector(static_cast<std::size_t>(game.num_players()),
                    0.5 * (game.loss_lower() + game.loss_upper()));
}

LossVector target_mean_interior_vector(const NormalFormGame& game,
                                       const ActionProfile& target) {
  const LossVector target_losses = game.loss_at(target);
  double mean = 0.0;
  for (double v : target_losses) mean += v;
  mean /= static_cast<double>(target_losses.size());
  if (!(mean > game.loss_lower() && mean < game.loss_upper()))
    throw std::invalid_argument(
        "designer: mean target loss hits the loss range boundary");
  return LossVector(static_cast<std::size_t>(game.num_players()), mean);
}

RoundDesigner::RoundDesigner(DesignerSpec spec, const NormalFormGame& original)
    : spec_(std::move(spec)),
      original_(original),
      round_game_(original),
      effective_margin_(spec_.margin) {
  if (spec_.kind == DesignKind::identity) return;
  original_.profile_index(spec_.target);  // validates the target profile

  if (spec_.kind == DesignKind::interior) {
    NormalFormGame designed = interior_design(original_, spec_.target, spec_.margin);
    cached_ = spec_.thresholded
                  ? threshold_to_original(designed, original_, spec_.target)
                  : std::move(designed);
    return;
  }

  // boundary / discrete
  check_rates(spec_.regret_rate, spec_.epsilon);
  const LossVector v =
      spec_.interior_vector ? *spec_.interior_vector : default_interior_vector(original_);
  // Round 1 carries weight 1, so its blend is exactly the source game; reuse
  // the free function once to validate and to fix the effective margin.
  RedesignedRound first = boundary_design(original_, spec_.target, v, spec_.margin,
                                          spec_.regret_rate, spec_.epsilon, 1);
  source_.assign(first.game.losses().begin(), first.game.losses().end());
  double cap = 0.5 * original_.loss_range();
  for (double vi : v)
    cap = std::min(cap, std::min(vi - original_.loss_lower(), original_.loss_upper() - vi));
  effective_margin_ = std::min(spec_.margin, cap);

  const LossVector target_losses = original_.loss_at(spec_.target);
  const int players = original_.num_players();
  destination_.resize(source_.size());
  for (std::size_t idx = 0; idx < original_.num_profiles(); ++idx)
    for (int i = 0; i < players; ++i)
      destination_[idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i)] =
          target_losses[static_cast<std::size_t>(i)];
  blend_.resize(source_.size());

  target_branch_.resize(source_.size());
  for (std::size_t idx = 0; idx < original_.num_profiles(); ++idx) {
    for (int i = 0; i < players; ++i) {
      const int action = static_cast<int>(
          idx / original_.stride(i) %
          static_cast<std::size_t>(original_.action_counts()[static_cast<std::size_t>(i)]));
      target_branch_[idx * static_cast<std::size_t>(players) + static_cast<std::size_t>(i)] =
          action == spec_.target[static_cast<std::size_t>(i)] ? 1 : 0;
    }
  }
}

double RoundDesigner::weight(std::int64_t t) const {
  if (spec_.kind == DesignKind::identity || spec_.kind == DesignKind::interior)
    return 1.0;
  return interpolation_weight(spec_.regret_rate, spec_.epsilon, t);
}

const NormalFormGame& RoundDesigner::make_round(std::int64_t t, RandomStream& rng) {
  if (t < 1) throw std::invalid_argument("designer: round index must be >= 1");
  switch (spec_.kind) {
    case DesignKind::identity:
      return original_;
    case DesignKind::interior:
      return *cached_;
    case DesignKind::boundary:
    case DesignKind::discrete:
      break;
  }

  const double w = interpolation_weight(spec_.regret_rate, spec_.epsilon, t);
  const std::span<const double> original_values = original_.losses();
  for (std::size_t j = 0; j < blend_.size(); ++j)
    blend_[j] = w * source_[j] + (1.0 - w) * destination_[j];
  if (spec_.thresholded) {
    for (std::size_t j = 0; j < blend_.size(); ++j)
      blend_[j] = target_branch_[j] ? std::min(blend_[j], original_values[j])
                                    : std::max(blend_[j], original_values[j]);
  }
  if (spec_.kind == DesignKind::discrete) {
    const double lower = original_.loss_lower();
    const double range = original_.loss_range();
    for (double& v : blend_) {
      const double p = std::clamp((v - lower) / range, 0.0, 1.0);
      v = rng.bernoulli(p) ? original_.loss_upper() : lower;
    }
  }
  round_game_.set_losses(blend_);
  return round_game_;
}

}  // namespace redesign
