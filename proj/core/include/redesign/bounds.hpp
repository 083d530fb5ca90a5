#pragma once

#include <cstdint>
#include <span>

namespace redesign {

// Closed-form expected upper bounds for one horizon: miss_bound caps
// T - E[N^T(target)], cost_bound caps E[C^T].
struct BoundReport {
  std::int64_t horizon;
  double miss_bound;
  double cost_bound;
};

// EXP3.P expected-regret bound over losses spanning `range`:
//   range * (5.15 * sqrt(T K ln K) + sqrt(T K / ln K)).
double exp3p_regret_bound(std::int64_t horizon, int num_actions, double range);

// Exact bounds for the time-invariant interior design. With
// S = sum_i (5.15 sqrt(T A_i ln A_i) + sqrt(T A_i / ln A_i)):
//   miss_bound = (M range / ((M - 1) rho)) * S
//   cost_bound = eta * M^(1/p) * range * miss_bound
BoundReport interior_bounds(std::int64_t horizon, int num_players,
                            std::span<const int> action_counts, double margin,
                            double range, double lipschitz, double norm_p);

// Exact bounds for the time-varying boundary design:
//   miss_bound = ((M range / ((M - 1) rho)) * S + M / (alpha + eps)) * T^(1 - alpha - eps)
//   cost_bound = eta range M^(1/p) * miss_bound
//              + (eta range M^(1/p) / (alpha + eps)) * T^(alpha + eps)
BoundReport boundary_bounds(std::int64_t horizon, int num_players,
                            std::span<const int> action_counts, double margin,
                            double range, double lipschitz, double norm_p,
                            double regret_rate, double epsilon);

}  // namespace redesign
