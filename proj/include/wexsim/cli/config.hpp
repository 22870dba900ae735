#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wexsim/engine.hpp"

namespace wexsim::cli {

// One layer of configuration: every field optional, so layers stack as
// defaults < config file < command-line flags.
struct ConfigOverrides {
  std::optional<std::string> model;
  std::optional<int> agents;
  std::optional<std::int64_t> steps;
  std::optional<double> lambda;
  std::optional<double> delta_lo;
  std::optional<double> delta_hi;
  std::optional<std::int64_t> tp;
  std::optional<double> xi;
  std::optional<double> rf;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> init;
  std::optional<std::vector<std::int64_t>> sample_times;
  std::optional<double> bin_width;
  std::optional<std::pair<double, double>> band;
  std::optional<std::string> out;
};

// Fully resolved configuration for one run.
struct RunConfig {
  SimParams params;
  ObservationSpec obs;
  std::string out_dir;
};

struct SweepConfig {
  ConfigOverrides shared;
  std::vector<std::string> models;
  std::vector<std::uint64_t> seeds;
  std::vector<ConfigOverrides> cells;  // explicit cells override models x seeds
  std::string out_dir;
  int threads = 0;
};

// Parses a JSON config document; unknown keys are rejected.
ConfigOverrides parse_run_config(const std::string& json_text);
ConfigOverrides load_run_config(const std::filesystem::path& path);

SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// Merges defaults, config file, and flags into a validated RunConfig. The
// model preset decides the initial distribution unless an explicit init was
// given; a flag-level init wins over the preset.
RunConfig resolve_run_config(const ConfigOverrides& file, const ConfigOverrides& flags);

// One planned sweep cell. Resolution is deferred so that a misconfigured
// cell fails on its own when the sweep executes it, instead of aborting the
// whole sweep up front.
struct SweepCellPlan {
  std::string model_label;  // requested model name, for reporting
  std::uint64_t seed = 0;
  ConfigOverrides overrides;  // applied on top of the sweep's shared layer
};

std::vector<SweepCellPlan> plan_sweep_cells(const SweepConfig& config);

}  // namespace wexsim::cli
