#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "redesign/cost.hpp"
#include "redesign/designer.hpp"
#include "redesign/exp3p.hpp"
#include "redesign/game.hpp"

namespace redesign {

// pi-bar accounting: average the sampling distributions themselves, or the
// empirical frequencies of realized actions.
enum class PolicyAveraging { probability, empirical };

struct SimulationConfig {
  NormalFormGame game;
  DesignerSpec designer;
  CostModel cost;
  std::int64_t horizon = 10'000;
  int num_trials = 5;
  std::uint64_t base_seed = 1'234'567;
  // Snapshot rounds; empty selects {1e4, 1e5, 1e6, 1e7} clipped to the
  // horizon. The horizon itself is always included.
  std::vector<std::int64_t> checkpoints;
  PolicyAveraging averaging = PolicyAveraging::probability;
  // Keep each player's full per-round loss rows (memory grows with T; meant
  // for small horizons and independent regret audits).
  bool record_rows = false;
  bool parallel_trials = true;
};

// Snapshot of one trial's accumulators after `round` rounds.
struct CheckpointStats {
  std::int64_t round;
  std::int64_t target_count;  // rounds where the full target profile was played
  std::int64_t miss_count;    // round - target_count
  double cumulative_cost;
  std::vector<double> regret;                   // per player
  std::vector<std::vector<double>> avg_policy;  // per player, sums to 1
};

struct TrialResult {
  int trial_index;
  std::vector<CheckpointStats> checkpoints;
  std::vector<std::int64_t> profile_counts;  // final N^T(a) per profile index
  std::vector<PlayerTrace> traces;           // populated when record_rows
};

struct SeriesStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single trial
  std::vector<double> per_trial;
};

struct AggregateCheckpoint {
  std::int64_t round;
  SeriesStats target_count;
  SeriesStats miss_count;
  SeriesStats cost;
  SeriesStats target_fraction;
  SeriesStats per_round_cost;
  std::vector<SeriesStats> regret;       // per player
  std::vector<SeriesStats> target_mass;  // per player: avg_policy[i][target_i]
  std::vector<std::vector<double>> mean_policy;  // per player, mean across trials
};

struct SimulationResult {
  std::vector<TrialResult> trials;
  std::vector<AggregateCheckpoint> checkpoints;
};

// Optional per-round observer: (t, target_hit, round_cost, cumulative_cost).
using RoundSink =
    std::function<void(std::int64_t, bool, double, double)>;
// Called once per trial index, in order, before any trial starts.
using RoundSinkFactory = std::function<RoundSink(int)>;

std::vector<std::int64_t> default_checkpoints(std::int64_t horizon);

// One seeded trial of the redesign protocol. Each round: the designer commits
// the round game, every player samples from its current policy, observes only
// its own entry of the played cell, and updates; the designer is charged on
// the played cell against the original game. Deterministic given
// (base_seed, trial_index).
TrialResult run_trial(const SimulationConfig& config, int trial_index,
                      const RoundSink& sink = {});

// Runs num_trials independent trials (parallel when enabled; results are
// identical either way) and aggregates mean/stddev per checkpoint.
SimulationResult run(const SimulationConfig& config,
                     const RoundSinkFactory& sink_factory = {});

// Least-squares slope of log(value) against log(horizon). Points with
// nonpositive values are dropped; at least two must survive.
double sublinearity_slope(std::span<const std::pair<double, double>> series);

}  // namespace redesign
