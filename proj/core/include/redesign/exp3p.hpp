#pragma once

#include <cstdint>
#include <vector>

#include "redesign/rng.hpp"

namespace redesign {

struct Exp3PParams {
  double mixing_gamma;      // uniform-exploration mixture, clamped to [0, 1]
  double exploration_beta;  // optimistic bias on every arm's gain estimate
  double learning_rate;
};

// Horizon-tuned schedule:
//   gamma = min(1, 1.05 * sqrt(K ln K / T))
//   beta  = sqrt(ln K / (T K))
//   eta   = 0.95 * sqrt(ln K / (T K))
Exp3PParams exp3p_schedule(int num_actions, std::int64_t horizon);

// EXP3.P bandit learner over losses in [L, U].
//
// Sampling distribution: p_i = (1 - gamma) * softmax(logw)_i + gamma / K.
// An observed loss is rescaled to a gain g = (U - loss) / (U - L) in [0, 1],
// and every arm's log-weight moves by eta * (g * 1{i = a} + beta) / p_i.
// Weights live in log domain and are renormalized every 10^4 rounds so the
// state stays finite out to very long horizons.
class Exp3P {
 public:
  Exp3P(int num_actions, std::int64_t horizon, double loss_lower,
        double loss_upper);

  int num_actions() const { return num_actions_; }
  std::int64_t horizon() const { return horizon_; }
  std::int64_t round() const { return round_; }
  double loss_lower() const { return loss_lower_; }
  double loss_upper() const { return loss_upper_; }
  const Exp3PParams& params() const { return params_; }

  void distribution(std::vector<double>& out) const;
  std::vector<double> distribution() const;

  // Draws from the current distribution without mutating state.
  int sample(RandomStream& rng) const;

  // Importance-weighted update for the played action; advances the round.
  void update(int action, double observed_loss);

 private:
  int num_actions_;
  std::int64_t horizon_;
  std::int64_t round_ = 0;
  double loss_lower_;
  double loss_upper_;
  Exp3PParams params_;
  std::vector<double> log_weights_;
};

// Observed history of one player: chosen action plus the full per-action loss
// row of each round (the row is known to the harness even though the learner
// itself only sees its own entry).
struct PlayerTrace {
  std::vector<int> actions;
  std::vector<std::vector<double>> loss_rows;
};

// Best-in-hindsight regret: realized cumulative loss minus the best single
// fixed action's cumulative loss against the recorded rows. Empty trace -> 0.
double regret(const PlayerTrace& trace);

}  // namespace redesign
