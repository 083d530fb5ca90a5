#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "redesign/game.hpp"
#include "redesign/rng.hpp"

namespace redesign {

enum class DesignKind { identity, interior, boundary, discrete };

// Parameters of one redesign strategy against a fixed target profile.
struct DesignerSpec {
  DesignKind kind = DesignKind::identity;
  ActionProfile target;
  double margin = 1.0;       // rho > 0; dominance headroom carved around the target
  std::optional<LossVector> interior_vector;  // v for boundary/discrete; defaults to
                                              // the constant (L + U) / 2 vector
  double regret_rate = 0.5;  // alpha in [0, 1); the learners' known regret exponent
  double epsilon = 0.25;     // in (0, 1 - alpha]
  bool thresholded = false;  // cellwise min/max against the original losses
};

// Decay of the source game's influence: w_t = t^(alpha + epsilon - 1).
// Monotone nonincreasing, w_1 = 1, w_t -> 0.
double interpolation_weight(double regret_rate, double epsilon, std::int64_t t);

// Time-invariant redesign around an interior target cell. For every profile a
// and player i, with d(a) = match_count(a, target):
//   l_i(a) = l^o_i(target) - (1 - d(a)/M) * margin   if a_i = target_i
//   l_i(a) = l^o_i(target) + (d(a)/M) * margin       otherwise
// Requires l^o_i(target) in [L + margin, U - margin] for every player.
NormalFormGame interior_design(const NormalFormGame& original,
                               const ActionProfile& target, double margin);

// Cellwise clamp of a designed game against the original: keep the smaller
// loss where the player already plays its target action, the larger loss
// elsewhere. Never moves a value farther from the original than the input.
NormalFormGame threshold_to_original(const NormalFormGame& designed,
                                     const NormalFormGame& original,
                                     const ActionProfile& target);

struct RedesignedRound {
  std::int64_t round;
  NormalFormGame game;
  double weight;  // w_t; 1 for time-invariant designs
};

// Time-varying redesign usable even when the target cell touches the loss
// range boundary: blends a source game (interior design built on the interior
// vector v) toward a destination game that repeats l^o(target) everywhere,
// with weight w_t on the source. The margin is capped at the largest value
// keeping v interior.
RedesignedRound boundary_design(const NormalFormGame& original,
                                const ActionProfile& target,
                                const LossVector& interior_vector, double margin,
                                double regret_rate, double epsilon,
                                std::int64_t t);

// Per-cell, per-player randomized rounding to the extreme values {L, U}:
// U with probability (value - L) / (U - L), else L. Unbiased in expectation.
NormalFormGame discrete_design(const NormalFormGame& game, double loss_lower,
                               double loss_upper, RandomStream& rng);

// The always-valid interior vector: constant (L + U) / 2.
LossVector default_interior_vector(const NormalFormGame& game);
// Constant vector at the mean of l^o(target); preserves zero-sum games but
// requires the mean to lie strictly inside (L, U).
LossVector target_mean_interior_vector(const NormalFormGame& game,
                                       const ActionProfile& target);

// Per-trial round factory. Validates the spec against the original game up
// front, caches the time-invariant pieces, and produces the round-t game:
//   identity -> the original, unchanged
//   interior -> cached interior design (thresholded if requested)
//   boundary -> per-round blend of cached source and destination tensors
//   discrete -> boundary blend followed by randomized rounding, resampled
//               fresh every round
// Thresholding, when requested, applies to the continuous game before any
// rounding. make_round is deterministic given the rng stream; the returned
// reference stays valid until the next call.
class RoundDesigner {
 public:
  RoundDesigner(DesignerSpec spec, const NormalFormGame& original);

  const DesignerSpec& spec() const { return spec_; }
  const NormalFormGame& original() const { return original_; }
  // Margin after the boundary cap; equals spec().margin for interior designs.
  double effective_margin() const { return effective_margin_; }
  double weight(std::int64_t t) const;

  const NormalFormGame& make_round(std::int64_t t, RandomStream& rng);

 private:
  DesignerSpec spec_;
  NormalFormGame original_;
  std::optional<NormalFormGame> cached_;  // interior kind
  NormalFormGame round_game_;             // scratch for time-varying kinds
  std::vector<double> source_;
  std::vector<double> destination_;
  std::vector<double> blend_;
  std::vector<unsigned char> target_branch_;  // per tensor entry: a_i == target_i
  double effective_margin_;
};

}  // namespace redesign
