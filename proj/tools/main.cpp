#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace {

using redesign::cli::ConfigError;
using redesign::cli::ExperimentConfig;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--config", options.config_path, "Experiment config file")
      ->required();
  cmd->add_option("--seed", options.seed, "Override run.seed");
  cmd->add_option("--out", options.out_dir, "Override the output directory");
}

ExperimentConfig load_with_overrides(const CommonOptions& options) {
  ExperimentConfig config = redesign::cli::load_config(options.config_path);
  if (options.seed) config.seed = *options.seed;
  if (options.out_dir) {
    config.output.directory = *options.out_dir;
  } else if (const char* env = std::getenv("REDESIGN_OUT")) {
    config.output.directory = env;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Game redesign against no-regret learners: perturb a normal-form game's "
      "losses each round to force a target action profile at sublinear cost"};
  app.require_subcommand(1);

  CommonOptions simulate_options, design_options, bounds_options, sweep_options;
  std::int64_t design_round = 1;
  std::vector<double> eps_list;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the redesign protocol over run.T_list");
  add_common(simulate, simulate_options);

  CLI::App* design =
      app.add_subcommand("design", "Print the round-t redesigned loss table");
  add_common(design, design_options);
  design->add_option("--t", design_round, "Round index (>= 1)")
      ->check(CLI::PositiveNumber);

  CLI::App* bounds =
      app.add_subcommand("bounds", "Print theoretical miss/cost upper bounds");
  add_common(bounds, bounds_options);

  CLI::App* sweep = app.add_subcommand(
      "sweep-epsilon", "Tabulate miss/cost across epsilon values");
  add_common(sweep, sweep_options);
  sweep->add_option("--eps", eps_list, "Comma-separated epsilon values")
      ->required()
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed())
      return redesign::cli::cmd_simulate(load_with_overrides(simulate_options));
    if (design->parsed())
      return redesign::cli::cmd_design(load_with_overrides(design_options),
                                       design_round);
    if (bounds->parsed())
      return redesign::cli::cmd_bounds(load_with_overrides(bounds_options));
    if (sweep->parsed())
      return redesign::cli::cmd_sweep_epsilon(load_with_overrides(sweep_options),
                                              eps_list);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
