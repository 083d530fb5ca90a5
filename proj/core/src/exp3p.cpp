#include "redesign/exp3p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace redesign {
namespace {

constexpr double kLossTol = 1e-9;
constexpr std::int64_t kRenormInterval = 10'000;

}  // namespace

Exp3PParams exp3p_schedule(int num_actions, std::int64_t horizon) {
  if (num_actions < 2)
    throw std::invalid_argument("exp3p: needs at least two actions");
  if (horizon < 1) throw std::invalid_argument("exp3p: horizon must be >= 1");
  const double k = static_cast<double>(num_actions);
  const double t = static_cast<double>(horizon);
  const double log_k = std::log(k);
  return Exp3PParams{
      .mixing_gamma = std::min(1.0, 1.05 * std::sqrt(k * log_k / t)),
      .exploration_beta = std::sqrt(log_k / (t * k)),
      .learning_rate = 0.95 * std::sqrt(log_k / (t * k)),
  };
}

Exp3P::Exp3P(int num_actions, std::int64_t horizon, double loss_lower,
             double loss_upper)
    : num_actions_(num_actions),
      horizon_(horizon),
      loss_lower_(loss_lower),
      loss_upper_(loss_upper),
      params_(exp3p_schedule(num_actions, horizon)),
      log_weights_(static_cast<std::size_t>(num_actions), 0.0) {
  if (!(loss_upper > loss_lower))
    throw std::invalid_argument("exp3p: loss_upper must exceed loss_lower");
}

void Exp3P::distribution(std::vector<double>& out) const {
  const std::size_t k = log_weights_.size();
  out.resize(k);
  const double max_lw = *std::max_element(log_weights_.begin(), log_weights_.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = std::exp(log_weights_[i] - max_lw);
    sum += out[i];
  }
  const double mix = params_.mixing_gamma / static_cast<double>(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = (1.0 - params_.mixing_gamma) * (out[i] / sum) + mix;
  }
}

std::vector<double> Exp3P::distribution() const {
  std::vector<double> out;
  distribution(out);
  return out;
}

int Exp3P::sample(RandomStream& rng) const {
  if (round_ >= horizon_)
    throw std::logic_error("exp3p: horizon exhausted");
  const std::vector<double> probs = distribution();
  return rng.categorical(probs);
}

void Exp3P::update(int action, double observed_loss) {
  if (round_ >= horizon_)
    throw std::logic_error("exp3p: horizon exhausted");
  if (action < 0 || action >= num_actions_)
    throw std::out_of_range("exp3p: action index out of range");
  if (!std::isfinite(observed_loss) || observed_loss < loss_lower_ - kLossTol ||
      observed_loss > loss_upper_ + kLossTol)
    throw std::invalid_argument("exp3p: observed loss " +
                                std::to_string(observed_loss) +
                                " outside [L, U]");

  const double gain = std::clamp(
      (loss_upper_ - observed_loss) / (loss_upper_ - loss_lower_), 0.0, 1.0);
  const std::vector<double> probs = distribution();
  for (int i = 0; i < num_actions_; ++i) {
    const double estimate =
        ((i == action ? gain : 0.0) + params_.exploration_beta) /
        probs[static_cast<std::size_t>(i)];
    log_weights_[static_cast<std::size_t>(i)] += params_.learning_rate * estimate;
  }
  ++round_;
  if (round_ % kRenormInterval == 0) {
    const double max_lw =
        *std::max_element(log_weights_.begin(), log_weights_.end());
    for (double& lw : log_weights_) lw -= max_lw;
  }
}

double regret(const PlayerTrace& trace) {
  if (trace.loss_rows.empty()) return 0.0;
  if (trace.actions.size() != trace.loss_rows.size())
    throw std::invalid_argument("regret: actions and loss rows disagree in length");
  const std::size_t k = trace.loss_rows.front().size();
  if (k == 0) throw std::invalid_argument("regret: empty loss row");

  std::vector<double> per_action(k, 0.0);
  double realized = 0.0;
  for (std::size_t t = 0; t < trace.loss_rows.size(); ++t) {
    const auto& row = trace.loss_rows[t];
    if (row.size() != k)
      throw std::invalid_argument("regret: ragged loss rows");
    const int action = trace.actions[t];
    if (action < 0 || static_cast<std::size_t>(action) >= k)
      throw std::out_of_range("regret: recorded action out of range");
    realized += row[static_cast<std::size_t>(action)];
    for (std::size_t a = 0; a < k; ++a) per_action[a] += row[a];
  }
  return realized - *std::min_element(per_action.begin(), per_action.end());
}

}  // namespace redesign
