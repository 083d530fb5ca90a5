#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "redesign/cost.hpp"
#include "redesign/designer.hpp"
#include "redesign/game.hpp"
#include "redesign/harness.hpp"

namespace redesign::cli {

// Config validation failure; `field` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config error at " + field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct OutputOptions {
  std::string directory = "out";
  bool write_csv = true;
  bool write_json = true;
};

// A fully resolved experiment: presets expanded, defaults applied.
struct ExperimentConfig {
  std::string game_label;  // preset id or "custom"
  NormalFormGame game;
  DesignerSpec designer;
  CostModel cost;
  std::vector<std::int64_t> horizons;  // run.T_list
  int trials = 5;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> checkpoints;  // empty -> default grid per horizon
  PolicyAveraging averaging = PolicyAveraging::probability;
  OutputOptions output;
};

// Parses and validates the experiment config file. The schema is strict:
// unknown keys anywhere are rejected, and every diagnostic names the field.
ExperimentConfig load_config(const std::string& path);

}  // namespace redesign::cli
