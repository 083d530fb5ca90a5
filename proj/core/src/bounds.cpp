#include "redesign/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace redesign {
namespace {

void check_common(std::int64_t horizon, int num_players,
                  std::span<const int> action_counts, double margin,
                  double range, double lipschitz, double norm_p) {
  if (horizon < 1) throw std::invalid_argument("bounds: horizon must be >= 1");
  if (num_players < 2)
    throw std::invalid_argument("bounds: needs at least two players");
  if (action_counts.size() != static_cast<std::size_t>(num_players))
    throw std::invalid_argument("bounds: action_counts length mismatch");
  for (int count : action_counts)
    if (count < 2)
      throw std::invalid_argument("bounds: every player needs >= 2 actions");
  if (!(margin > 0.0)) throw std::invalid_argument("bounds: margin must be positive");
  if (!(range >= 0.0)) throw std::invalid_argument("bounds: negative loss range");
  if (!(lipschitz > 0.0))
    throw std::invalid_argument("bounds: lipschitz constant must be positive");
  if (!(norm_p >= 1.0)) throw std::invalid_argument("bounds: norm order must be >= 1");
}

// sum_i (5.15 sqrt(T A_i ln A_i) + sqrt(T A_i / ln A_i))
double regret_sum(std::int64_t horizon, std::span<const int> action_counts) {
  const double t = static_cast<double>(horizon);
  double sum = 0.0;
  for (int count : action_counts) {
    const double a = static_cast<double>(count);
    const double log_a = std::log(a);
    sum += 5.15 * std::sqrt(t * a * log_a) + std::sqrt(t * a / log_a);
  }
  return sum;
}

double players_norm_factor(int num_players, double norm_p) {
  if (std::isinf(norm_p)) return 1.0;
  return std::pow(static_cast<double>(num_players), 1.0 / norm_p);
}

}  // namespace

double exp3p_regret_bound(std::int64_t horizon, int num_actions, double range) {
  if (horizon < 1) throw std::invalid_argument("bounds: horizon must be >= 1");
  if (num_actions < 2)
    throw std::invalid_argument("bounds: needs at least two actions");
  if (!(range >= 0.0)) throw std::invalid_argument("bounds: negative loss range");
  const double t = static_cast<double>(horizon);
  const double k = static_cast<double>(num_actions);
  const double log_k = std::log(k);
  return range * (5.15 * std::sqrt(t * k * log_k) + std::sqrt(t * k / log_k));
}

BoundReport interior_bounds(std::int64_t horizon, int num_players,
                            std::span<const int> action_counts, double margin,
                            double range, double lipschitz, double norm_p) {
  check_common(horizon, num_players, action_counts, margin, range, lipschitz, norm_p);
  const double m = static_cast<double>(num_players);
  const double miss =
      (m * range / ((m - 1.0) * margin)) * regret_sum(horizon, action_counts);
  const double cost = lipschitz * players_norm_factor(num_players, norm_p) * range * miss;
  return BoundReport{horizon, miss, cost};
}

BoundReport boundary_bounds(std::int64_t horizon, int num_players,
                            std::span<const int> action_counts, double margin,
                            double range, double lipschitz, double norm_p,
                            double regret_rate, double epsilon) {
  check_common(horizon, num_players, action_counts, margin, range, lipschitz, norm_p);
  if (!(regret_rate >= 0.0 && regret_rate < 1.0))
    throw std::invalid_argument("bounds: regret rate must be in [0, 1)");
  if (!(epsilon > 0.0 && epsilon <= 1.0 - regret_rate))
    throw std::invalid_argument("bounds: epsilon must be in (0, 1 - alpha]");

  const double t = static_cast<double>(horizon);
  const double m = static_cast<double>(num_players);
  const double rate = regret_rate + epsilon;
  const double factor = players_norm_factor(num_players, norm_p);
  const double miss =
      ((m * range / ((m - 1.0) * margin)) * regret_sum(horizon, action_counts) +
       m / rate) *
      std::pow(t, 1.0 - rate);
  const double cost = lipschitz * range * factor * miss +
                      (lipschitz * range * factor / rate) * std::pow(t, rate);
  return BoundReport{horizon, miss, cost};
}

}  // namespace redesign
