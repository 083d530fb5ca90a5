#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"

namespace redesign::cli {

// Runs every horizon in run.T_list and writes per-round trace CSVs, the
// summary document, and the log-log series file into the output directory.
int cmd_simulate(const ExperimentConfig& config);

// Prints the round-t redesigned loss table as a game document.
int cmd_design(const ExperimentConfig& config, std::int64_t round);

// Prints the theoretical miss/cost upper bounds per horizon.
int cmd_bounds(const ExperimentConfig& config);

// Re-runs the configured boundary/discrete design once per epsilon value and
// tabulates final miss counts and costs. Invalid entries are skipped with a
// warning.
int cmd_sweep_epsilon(ExperimentConfig config, const std::vector<double>& eps_list);

// Structural check of a summary document; returns "" when valid, else the
// first problem found.
std::string validate_summary(const std::string& summary_text);

}  // namespace redesign::cli
