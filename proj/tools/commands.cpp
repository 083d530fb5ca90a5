#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <json.hpp>

#include "redesign/bounds.hpp"
#include "redesign/harness.hpp"
#include "redesign/serialize.hpp"

namespace redesign::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const char* kind_name(DesignKind kind) {
  switch (kind) {
    case DesignKind::identity: return "none";
    case DesignKind::interior: return "interior";
    case DesignKind::boundary: return "boundary";
    case DesignKind::discrete: return "discrete";
  }
  return "?";
}

// Bounds matching the configured design at round count t; nullopt when no
// bound applies (identity kind, or a game outside the bounds' assumptions).
std::optional<BoundReport> bounds_at(const ExperimentConfig& config,
                                     double effective_margin, std::int64_t t) {
  try {
    switch (config.designer.kind) {
      case DesignKind::identity:
        return std::nullopt;
      case DesignKind::interior:
        return interior_bounds(t, config.game.num_players(),
                               config.game.action_counts(), effective_margin,
                               config.game.loss_range(), config.cost.lipschitz,
                               config.cost.norm_p);
      case DesignKind::boundary:
      case DesignKind::discrete:
        return boundary_bounds(t, config.game.num_players(),
                               config.game.action_counts(), effective_margin,
                               config.game.loss_range(), config.cost.lipschitz,
                               config.cost.norm_p, config.designer.regret_rate,
                               config.designer.epsilon);
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

SimulationConfig simulation_for(const ExperimentConfig& config, std::int64_t horizon) {
  std::vector<std::int64_t> checkpoints;
  for (std::int64_t t : config.checkpoints)
    if (t <= horizon) checkpoints.push_back(t);
  return SimulationConfig{
      .game = config.game,
      .designer = config.designer,
      .cost = config.cost,
      .horizon = horizon,
      .num_trials = config.trials,
      .base_seed = config.seed,
      .checkpoints = std::move(checkpoints),
      .averaging = config.averaging,
      .record_rows = false,
      .parallel_trials = true,
  };
}

// Validates the designer against the game once and reports the margin the
// design actually uses (the boundary cap may shrink it).
double validated_effective_margin(const ExperimentConfig& config) {
  try {
    RoundDesigner designer(config.designer, config.game);
    return designer.effective_margin();
  } catch (const std::exception& e) {
    throw ConfigError("designer", e.what());
  }
}

ordered_json stats_json(const SeriesStats& stats) {
  ordered_json out;
  out["mean"] = stats.mean;
  out["std"] = stats.stddev;
  out["per_trial"] = stats.per_trial;
  return out;
}

ordered_json bounds_json(const std::optional<BoundReport>& report) {
  if (!report) return nullptr;
  ordered_json out;
  out["miss"] = report->miss_bound;
  out["cost"] = report->cost_bound;
  return out;
}

ordered_json designer_json(const ExperimentConfig& config) {
  const DesignerSpec& spec = config.designer;
  ordered_json out;
  out["kind"] = kind_name(spec.kind);
  if (spec.kind == DesignKind::identity) return out;
  out["target"] = spec.target;
  out["rho"] = spec.margin;
  out["thresholded"] = spec.thresholded;
  if (spec.kind == DesignKind::boundary || spec.kind == DesignKind::discrete) {
    out["v"] = spec.interior_vector ? *spec.interior_vector
                                    : default_interior_vector(config.game);
    out["alpha"] = spec.regret_rate;
    out["epsilon"] = spec.epsilon;
  }
  return out;
}

struct HorizonOutcome {
  std::int64_t horizon;
  SimulationResult result;
};

ordered_json summary_json(const ExperimentConfig& config, double effective_margin,
                          const std::vector<HorizonOutcome>& outcomes) {
  ordered_json doc;
  doc["game"] = config.game_label;
  doc["players"] = config.game.num_players();
  doc["action_counts"] = config.game.action_counts();
  doc["designer"] = designer_json(config);
  {
    ordered_json cost;
    cost["eta"] = config.cost.lipschitz;
    if (std::isinf(config.cost.norm_p))
      cost["p"] = "inf";
    else
      cost["p"] = config.cost.norm_p;
    doc["cost"] = cost;
  }
  {
    ordered_json run;
    run["trials"] = config.trials;
    run["seed"] = config.seed;
    run["averaging"] =
        config.averaging == PolicyAveraging::probability ? "probability" : "empirical";
    doc["run"] = run;
  }

  doc["results"] = ordered_json::array();
  for (const HorizonOutcome& outcome : outcomes) {
    ordered_json entry;
    entry["T"] = outcome.horizon;
    entry["bounds"] = bounds_json(bounds_at(config, effective_margin, outcome.horizon));
    entry["checkpoints"] = ordered_json::array();
    for (const AggregateCheckpoint& cp : outcome.result.checkpoints) {
      ordered_json c;
      c["t"] = cp.round;
      c["target_count"] = stats_json(cp.target_count);
      c["miss_count"] = stats_json(cp.miss_count);
      c["cost"] = stats_json(cp.cost);
      c["target_fraction"] = stats_json(cp.target_fraction);
      c["per_round_cost"] = stats_json(cp.per_round_cost);
      c["regret"] = ordered_json::array();
      for (const SeriesStats& r : cp.regret) c["regret"].push_back(stats_json(r));
      c["target_mass"] = ordered_json::array();
      for (const SeriesStats& m : cp.target_mass)
        c["target_mass"].push_back(stats_json(m));
      c["mean_policy"] = cp.mean_policy;
      c["bounds"] = bounds_json(bounds_at(config, effective_margin, cp.round));
      entry["checkpoints"].push_back(std::move(c));
    }
    doc["results"].push_back(std::move(entry));
  }

  ordered_json slopes;
  slopes["miss"] = nullptr;
  slopes["cost"] = nullptr;
  if (outcomes.size() >= 3) {
    std::vector<std::pair<double, double>> miss_series, cost_series;
    for (const HorizonOutcome& outcome : outcomes) {
      const AggregateCheckpoint& final_cp = outcome.result.checkpoints.back();
      miss_series.emplace_back(static_cast<double>(outcome.horizon),
                               final_cp.miss_count.mean);
      cost_series.emplace_back(static_cast<double>(outcome.horizon),
                               final_cp.cost.mean);
    }
    try {
      slopes["miss"] = sublinearity_slope(miss_series);
    } catch (const std::invalid_argument&) {
    }
    try {
      slopes["cost"] = sublinearity_slope(cost_series);
    } catch (const std::invalid_argument&) {
    }
  }
  doc["slopes"] = slopes;
  return doc;
}

std::string check_stats_node(const json& node, const std::string& where) {
  if (!node.is_object()) return where + ": expected an object";
  for (const char* key : {"mean", "std"})
    if (!node.contains(key) || !node[key].is_number())
      return where + "." + key + ": expected a number";
  if (!node.contains("per_trial") || !node["per_trial"].is_array())
    return where + ".per_trial: expected an array";
  return "";
}

}  // namespace

int cmd_simulate(const ExperimentConfig& config) {
  const double effective_margin = validated_effective_margin(config);
  const fs::path out_dir(config.output.directory);
  if (config.output.write_csv || config.output.write_json)
    fs::create_directories(out_dir);

  std::vector<HorizonOutcome> outcomes;
  for (std::int64_t horizon : config.horizons) {
    SimulationConfig sim = simulation_for(config, horizon);

    std::vector<std::shared_ptr<std::ofstream>> streams;
    RoundSinkFactory factory;
    if (config.output.write_csv) {
      factory = [&, horizon](int trial) -> RoundSink {
        const fs::path path = out_dir / ("trace_T" + std::to_string(horizon) +
                                         "_trial" + std::to_string(trial) + ".csv");
        auto stream = std::make_shared<std::ofstream>(path);
        if (!*stream)
          throw std::runtime_error("cannot write " + path.string());
        (*stream) << "t,target_hit,round_cost,cumulative_cost\n";
        streams.push_back(stream);
        return [stream](std::int64_t t, bool hit, double cost, double cumulative) {
          char buf[96];
          std::snprintf(buf, sizeof buf, "%lld,%d,%.17g,%.17g\n",
                        static_cast<long long>(t), hit ? 1 : 0, cost, cumulative);
          (*stream) << buf;
        };
      };
    }

    HorizonOutcome outcome{horizon, run(sim, factory)};
    for (auto& stream : streams) stream->close();

    const AggregateCheckpoint& final_cp = outcome.result.checkpoints.back();
    const auto bound = bounds_at(config, effective_margin, horizon);
    std::cout << "T=" << horizon
              << "  target_fraction=" << fmt4(final_cp.target_fraction.mean) << "±"
              << fmt4(final_cp.target_fraction.stddev)
              << "  per_round_cost=" << fmt4(final_cp.per_round_cost.mean) << "±"
              << fmt4(final_cp.per_round_cost.stddev)
              << "  miss=" << fmt4(final_cp.miss_count.mean)
              << "  cost=" << fmt4(final_cp.cost.mean);
    if (bound)
      std::cout << "  miss_bound=" << fmt4(bound->miss_bound)
                << "  cost_bound=" << fmt4(bound->cost_bound);
    std::cout << "\n";
    outcomes.push_back(std::move(outcome));
  }

  const ordered_json summary = summary_json(config, effective_margin, outcomes);
  if (config.output.write_json) {
    std::ofstream out(out_dir / "summary.json");
    if (!out) throw std::runtime_error("cannot write summary.json");
    out << summary.dump(2) << "\n";
  }
  if (config.output.write_csv) {
    std::ofstream out(out_dir / "loglog.csv");
    if (!out) throw std::runtime_error("cannot write loglog.csv");
    out << "log10_T,log10_miss,log10_cost\n";
    for (const HorizonOutcome& outcome : outcomes) {
      const AggregateCheckpoint& final_cp = outcome.result.checkpoints.back();
      if (final_cp.miss_count.mean <= 0.0 || final_cp.cost.mean <= 0.0) continue;
      out << fmt17(std::log10(static_cast<double>(outcome.horizon))) << ","
          << fmt17(std::log10(final_cp.miss_count.mean)) << ","
          << fmt17(std::log10(final_cp.cost.mean)) << "\n";
    }
  }
  if (!summary["slopes"]["miss"].is_null())
    std::cout << "loglog slope: miss=" << fmt4(summary["slopes"]["miss"].get<double>())
              << " cost=" << fmt4(summary["slopes"]["cost"].get<double>()) << "\n";
  return 0;
}

int cmd_design(const ExperimentConfig& config, std::int64_t round) {
  try {
    RoundDesigner designer(config.designer, config.game);
    RandomStream rng = RandomStream::derived(
        config.seed, 0, static_cast<std::uint64_t>(config.game.num_players()));
    std::cout << game_to_json(designer.make_round(round, rng)) << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("designer", e.what());
  }
}

int cmd_bounds(const ExperimentConfig& config) {
  if (config.designer.kind == DesignKind::identity)
    throw ConfigError("designer.kind", "bounds require a redesign kind");
  const double effective_margin = validated_effective_margin(config);
  std::cout << "T,miss_bound,cost_bound\n";
  for (std::int64_t horizon : config.horizons) {
    const auto report = bounds_at(config, effective_margin, horizon);
    if (!report)
      throw ConfigError("game", "bounds need >= 2 players with >= 2 actions each");
    std::cout << horizon << "," << fmt4(report->miss_bound) << ","
              << fmt4(report->cost_bound) << "\n";
  }
  return 0;
}

int cmd_sweep_epsilon(ExperimentConfig config, const std::vector<double>& eps_list) {
  if (config.designer.kind != DesignKind::boundary &&
      config.designer.kind != DesignKind::discrete)
    throw ConfigError("designer.kind",
                      "sweep-epsilon requires a boundary or discrete design");
  std::vector<double> valid;
  for (double eps : eps_list) {
    if (eps > 0.0 && eps <= 1.0 - config.designer.regret_rate) {
      valid.push_back(eps);
    } else {
      std::cerr << "warning: skipping epsilon " << fmt4(eps)
                << ": outside (0, 1 - alpha]\n";
    }
  }
  if (valid.empty()) throw ConfigError("eps", "no valid epsilon values");

  struct Row {
    double epsilon;
    std::int64_t horizon;
    double miss_mean;
    double cost_mean;
  };
  std::vector<Row> rows;
  for (double eps : valid) {
    config.designer.epsilon = eps;
    const double effective_margin = validated_effective_margin(config);
    (void)effective_margin;
    for (std::int64_t horizon : config.horizons) {
      const SimulationResult result = run(simulation_for(config, horizon));
      const AggregateCheckpoint& final_cp = result.checkpoints.back();
      rows.push_back(Row{eps, horizon, final_cp.miss_count.mean, final_cp.cost.mean});
    }
  }

  std::cout << "epsilon,T,miss_mean,cost_mean,log10_miss,log10_cost\n";
  for (const Row& row : rows) {
    const double log_miss =
        row.miss_mean > 0 ? std::log10(row.miss_mean)
                          : -std::numeric_limits<double>::infinity();
    const double log_cost =
        row.cost_mean > 0 ? std::log10(row.cost_mean)
                          : -std::numeric_limits<double>::infinity();
    std::cout << fmt4(row.epsilon) << "," << row.horizon << ","
              << fmt4(row.miss_mean) << "," << fmt4(row.cost_mean) << ","
              << fmt4(log_miss) << "," << fmt4(log_cost) << "\n";
  }

  if (config.output.write_csv) {
    const fs::path out_dir(config.output.directory);
    fs::create_directories(out_dir);
    std::ofstream out(out_dir / "sweep_epsilon.csv");
    if (!out) throw std::runtime_error("cannot write sweep_epsilon.csv");
    out << "epsilon,T,miss_mean,cost_mean,log10_miss,log10_cost\n";
    for (const Row& row : rows) {
      out << fmt17(row.epsilon) << "," << row.horizon << ","
          << fmt17(row.miss_mean) << "," << fmt17(row.cost_mean) << ","
          << fmt17(row.miss_mean > 0 ? std::log10(row.miss_mean)
                                     : -std::numeric_limits<double>::infinity())
          << ","
          << fmt17(row.cost_mean > 0 ? std::log10(row.cost_mean)
                                     : -std::numeric_limits<double>::infinity())
          << "\n";
    }
  }
  return 0;
}

std::string validate_summary(const std::string& summary_text) {
  json doc;
  try {
    doc = json::parse(summary_text);
  } catch (const json::exception& e) {
    return std::string("parse: ") + e.what();
  }
  if (!doc.is_object()) return "expected an object";
  for (const char* key :
       {"game", "players", "action_counts", "designer", "cost", "run", "results",
        "slopes"})
    if (!doc.contains(key)) return std::string("missing key ") + key;
  if (!doc["game"].is_string()) return "game: expected a string";
  if (!doc["players"].is_number_integer()) return "players: expected an integer";
  if (!doc["action_counts"].is_array()) return "action_counts: expected an array";
  if (!doc["designer"].is_object() || !doc["designer"].contains("kind"))
    return "designer: expected an object with kind";
  if (!doc["results"].is_array() || doc["results"].empty())
    return "results: expected a non-empty array";
  for (const auto& entry : doc["results"]) {
    if (!entry.is_object() || !entry.contains("T") ||
        !entry["T"].is_number_integer())
      return "results: each entry needs an integer T";
    if (!entry.contains("checkpoints") || !entry["checkpoints"].is_array() ||
        entry["checkpoints"].empty())
      return "results: each entry needs checkpoints";
    for (const auto& cp : entry["checkpoints"]) {
      if (!cp.contains("t") || !cp["t"].is_number_integer())
        return "checkpoints: missing integer t";
      for (const char* key :
           {"target_count", "miss_count", "cost", "target_fraction",
            "per_round_cost"}) {
        if (!cp.contains(key)) return std::string("checkpoints: missing ") + key;
        const std::string err = check_stats_node(cp[key], key);
        if (!err.empty()) return err;
      }
      if (!cp.contains("regret") || !cp["regret"].is_array())
        return "checkpoints: missing regret";
      if (!cp.contains("mean_policy") || !cp["mean_policy"].is_array())
        return "checkpoints: missing mean_policy";
      if (!cp.contains("bounds") ||
          (!cp["bounds"].is_null() && !cp["bounds"].is_object()))
        return "checkpoints: bounds must be null or an object";
    }
  }
  if (!doc["slopes"].is_object() || !doc["slopes"].contains("miss") ||
      !doc["slopes"].contains("cost"))
    return "slopes: expected an object with miss and cost";
  return "";
}

}  // namespace redesign::cli
