#include "redesign/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace redesign {
namespace {

std::vector<std::int64_t> normalized_checkpoints(const SimulationConfig& config) {
  std::vector<std::int64_t> points = config.checkpoints.empty()
                                         ? default_checkpoints(config.horizon)
                                         : config.checkpoints;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 1 || points[i] > config.horizon)
      throw std::invalid_argument("harness: checkpoint outside [1, horizon]");
    if (i > 0 && points[i] <= points[i - 1])
      throw std::invalid_argument("harness: checkpoints must be strictly increasing");
  }
  if (points.empty() || points.back() != config.horizon)
    points.push_back(config.horizon);
  return points;
}

SeriesStats summarize(std::vector<double> per_trial) {
  SeriesStats stats;
  const std::size_t n = per_trial.size();
  double sum = 0.0;
  for (double v : per_trial) sum += v;
  stats.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : per_trial) ss += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  stats.per_trial = std::move(per_trial);
  return stats;
}

SeriesStats summarize_over_trials(const std::vector<TrialResult>& trials,
                                  std::size_t checkpoint,
                                  double (*extract)(const CheckpointStats&)) {
  std::vector<double> values;
  values.reserve(trials.size());
  for (const TrialResult& trial : trials)
    values.push_back(extract(trial.checkpoints[checkpoint]));
  return summarize(std::move(values));
}

}  // namespace

std::vector<std::int64_t> default_checkpoints(std::int64_t horizon) {
  std::vector<std::int64_t> points;
  for (std::int64_t grid : {std::int64_t{10'000}, std::int64_t{100'000},
                            std::int64_t{1'000'000}, std::int64_t{10'000'000}}) {
    if (grid <= horizon) points.push_back(grid);
  }
  if (points.empty() || points.back() != horizon) points.push_back(horizon);
  return points;
}

TrialResult run_trial(const SimulationConfig& config, int trial_index,
                      const RoundSink& sink) {
  if (config.horizon < 1)
    throw std::invalid_argument("harness: horizon must be >= 1");
  if (trial_index < 0) throw std::invalid_argument("harness: negative trial index");
  const std::vector<std::int64_t> checkpoints = normalized_checkpoints(config);

  const NormalFormGame& original = config.game;
  const int players = original.num_players();
  // Designer precondition failures surface here, before round 1.
  RoundDesigner designer(config.designer, original);

  std::vector<Exp3P> learners;
  std::vector<RandomStream> player_rngs;
  learners.reserve(static_cast<std::size_t>(players));
  player_rngs.reserve(static_cast<std::size_t>(players));
  for (int i = 0; i < players; ++i) {
    learners.emplace_back(original.action_counts()[static_cast<std::size_t>(i)],
                          config.horizon, original.loss_lower(),
                          original.loss_upper());
    player_rngs.push_back(RandomStream::derived(
        config.base_seed, static_cast<std::uint64_t>(trial_index),
        static_cast<std::uint64_t>(i)));
  }
  RandomStream designer_rng = RandomStream::derived(
      config.base_seed, static_cast<std::uint64_t>(trial_index),
      static_cast<std::uint64_t>(players));

  const bool has_target = !config.designer.target.empty();
  const ActionProfile& target = config.designer.target;
  if (has_target) original.profile_index(target);  // validate once

  // Accumulators.
  std::vector<std::int64_t> profile_counts(original.num_profiles(), 0);
  std::int64_t target_count = 0;
  double cumulative_cost = 0.0;
  std::vector<double> realized_loss(static_cast<std::size_t>(players), 0.0);
  std::vector<std::vector<double>> counterfactual_loss;  // per player, per action
  std::vector<std::vector<double>> policy_sum;           // probability averaging
  std::vector<std::vector<std::int64_t>> action_counts_taken;
  std::vector<std::vector<double>> probs(static_cast<std::size_t>(players));
  for (int i = 0; i < players; ++i) {
    const std::size_t k =
        static_cast<std::size_t>(original.action_counts()[static_cast<std::size_t>(i)]);
    counterfactual_loss.emplace_back(k, 0.0);
    policy_sum.emplace_back(k, 0.0);
    action_counts_taken.emplace_back(k, 0);
  }

  TrialResult result;
  result.trial_index = trial_index;
  if (config.record_rows)
    result.traces.assign(static_cast<std::size_t>(players), PlayerTrace{});

  ActionProfile profile(static_cast<std::size_t>(players));
  std::size_t next_checkpoint = 0;

  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    const NormalFormGame& round_game = designer.make_round(t, designer_rng);

    std::size_t idx = 0;
    for (int i = 0; i < players; ++i) {
      Exp3P& learner = learners[static_cast<std::size_t>(i)];
      auto& p = probs[static_cast<std::size_t>(i)];
      learner.distribution(p);
      auto& sums = policy_sum[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < p.size(); ++a) sums[a] += p[a];
      const int action = player_rngs[static_cast<std::size_t>(i)].categorical(p);
      profile[static_cast<std::size_t>(i)] = action;
      ++action_counts_taken[static_cast<std::size_t>(i)][static_cast<std::size_t>(action)];
      idx += static_cast<std::size_t>(action) * original.stride(i);
    }

    bool hit = has_target;
    if (has_target) {
      for (int i = 0; i < players && hit; ++i)
        hit = profile[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)];
    }
    if (hit) ++target_count;
    ++profile_counts[idx];

    for (int i = 0; i < players; ++i) {
      const double loss = round_game.loss(idx, i);
      learners[static_cast<std::size_t>(i)].update(profile[static_cast<std::size_t>(i)], loss);
      realized_loss[static_cast<std::size_t>(i)] += loss;
      const std::size_t stride = original.stride(i);
      const std::size_t base =
          idx - static_cast<std::size_t>(profile[static_cast<std::size_t>(i)]) * stride;
      auto& cf = counterfactual_loss[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < cf.size(); ++a)
        cf[a] += round_game.loss(base + a * stride, i);
      if (config.record_rows) {
        PlayerTrace& trace = result.traces[static_cast<std::size_t>(i)];
        trace.actions.push_back(profile[static_cast<std::size_t>(i)]);
        std::vector<double> row(cf.size());
        for (std::size_t a = 0; a < row.size(); ++a)
          row[a] = round_game.loss(base + a * stride, i);
        trace.loss_rows.push_back(std::move(row));
      }
    }

    const double cost =
        round_cost(config.cost, original.loss_row(idx), round_game.loss_row(idx));
    cumulative_cost += cost;
    if (sink) sink(t, hit, cost, cumulative_cost);

    if (next_checkpoint < checkpoints.size() && t == checkpoints[next_checkpoint]) {
      CheckpointStats stats;
      stats.round = t;
      stats.target_count = target_count;
      stats.miss_count = t - target_count;
      stats.cumulative_cost = cumulative_cost;
      for (int i = 0; i < players; ++i) {
        const auto& cf = counterfactual_loss[static_cast<std::size_t>(i)];
        const double best = *std::min_element(cf.begin(), cf.end());
        stats.regret.push_back(realized_loss[static_cast<std::size_t>(i)] - best);
        std::vector<double> policy(cf.size());
        if (config.averaging == PolicyAveraging::probability) {
          const auto& sums = policy_sum[static_cast<std::size_t>(i)];
          for (std::size_t a = 0; a < policy.size(); ++a)
            policy[a] = sums[a] / static_cast<double>(t);
        } else {
          const auto& taken = action_counts_taken[static_cast<std::size_t>(i)];
          for (std::size_t a = 0; a < policy.size(); ++a)
            policy[a] = static_cast<double>(taken[a]) / static_cast<double>(t);
        }
        stats.avg_policy.push_back(std::move(policy));
      }
      result.checkpoints.push_back(std::move(stats));
      ++next_checkpoint;
    }
  }

  result.profile_counts = std::move(profile_counts);
  return result;
}

SimulationResult run(const SimulationConfig& config,
                     const RoundSinkFactory& sink_factory) {
  if (config.num_trials < 1)
    throw std::invalid_argument("harness: num_trials must be >= 1");

  std::vector<RoundSink> sinks(static_cast<std::size_t>(config.num_trials));
  if (sink_factory)
    for (int k = 0; k < config.num_trials; ++k)
      sinks[static_cast<std::size_t>(k)] = sink_factory(k);

  SimulationResult result;
  result.trials.resize(static_cast<std::size_t>(config.num_trials));
  const unsigned workers = std::thread::hardware_concurrency();
  if (config.parallel_trials && config.num_trials > 1 && workers > 1) {
    std::vector<std::future<TrialResult>> futures;
    futures.reserve(static_cast<std::size_t>(config.num_trials));
    for (int k = 0; k < config.num_trials; ++k) {
      futures.push_back(std::async(std::launch::async, [&config, &sinks, k] {
        return run_trial(config, k, sinks[static_cast<std::size_t>(k)]);
      }));
    }
    for (int k = 0; k < config.num_trials; ++k)
      result.trials[static_cast<std::size_t>(k)] = futures[static_cast<std::size_t>(k)].get();
  } else {
    for (int k = 0; k < config.num_trials; ++k)
      result.trials[static_cast<std::size_t>(k)] =
          run_trial(config, k, sinks[static_cast<std::size_t>(k)]);
  }

  const std::size_t num_checkpoints = result.trials.front().checkpoints.size();
  const int players = config.game.num_players();
  for (std::size_t c = 0; c < num_checkpoints; ++c) {
    AggregateCheckpoint agg;
    agg.round = result.trials.front().checkpoints[c].round;
    agg.target_count = summarize_over_trials(
        result.trials, c,
        [](const CheckpointStats& s) { return static_cast<double>(s.target_count); });
    agg.miss_count = summarize_over_trials(
        result.trials, c,
        [](const CheckpointStats& s) { return static_cast<double>(s.miss_count); });
    agg.cost = summarize_over_trials(
        result.trials, c, [](const CheckpointStats& s) { return s.cumulative_cost; });
    {
      std::vector<double> fraction, per_round;
      for (const TrialResult& trial : result.trials) {
        const CheckpointStats& s = trial.checkpoints[c];
        fraction.push_back(static_cast<double>(s.target_count) /
                           static_cast<double>(s.round));
        per_round.push_back(s.cumulative_cost / static_cast<double>(s.round));
      }
      agg.target_fraction = summarize(std::move(fraction));
      agg.per_round_cost = summarize(std::move(per_round));
    }
    for (int i = 0; i < players; ++i) {
      std::vector<double> regrets, masses;
      for (const TrialResult& trial : result.trials) {
        const CheckpointStats& s = trial.checkpoints[c];
        regrets.push_back(s.regret[static_cast<std::size_t>(i)]);
        if (!config.designer.target.empty())
          masses.push_back(
              s.avg_policy[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(
                               config.designer.target[static_cast<std::size_t>(i)])]);
      }
      agg.regret.push_back(summarize(std::move(regrets)));
      if (!masses.empty()) agg.target_mass.push_back(summarize(std::move(masses)));

      const std::size_t k =
          static_cast<std::size_t>(config.game.action_counts()[static_cast<std::size_t>(i)]);
      std::vector<double> mean_policy(k, 0.0);
      for (const TrialResult& trial : result.trials) {
        const auto& policy = trial.checkpoints[c].avg_policy[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < k; ++a) mean_policy[a] += policy[a];
      }
      for (double& v : mean_policy) v /= static_cast<double>(config.num_trials);
      agg.mean_policy.push_back(std::move(mean_policy));
    }
    result.checkpoints.push_back(std::move(agg));
  }
  return result;
}

double sublinearity_slope(std::span<const std::pair<double, double>> series) {
  if (series.size() < 3)
    throw std::invalid_argument("slope: needs at least three grid points");
  std::vector<double> xs, ys;
  for (const auto& [horizon, value] : series) {
    if (!(horizon > 0.0)) throw std::invalid_argument("slope: nonpositive horizon");
    if (value > 0.0) {
      xs.push_back(std::log(horizon));
      ys.push_back(std::log(value));
    }
  }
  if (xs.size() < 2)
    throw std::invalid_argument(
        "slope: fewer than two positive values after exclusions");
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(xs.size());
  mean_y /= static_cast<double>(ys.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope: degenerate horizon grid");
  return sxy / sxx;
}

}  // namespace redesign
