#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wexsim/cli/config.hpp"

namespace wexsim::cli {

// Runs one configured simulation and writes gini.csv, per-sample snapshot
// and histogram files, and run.json into config.out_dir.
void cmd_run(const RunConfig& config);

// Executes every sweep cell, isolating per-cell failures. Writes sweep.csv,
// failures.csv, and run_cell<k>.json provenance. Returns true if at least
// one cell succeeded.
bool cmd_sweep(const SweepConfig& config);

struct ReproduceOptions {
  std::string figure;  // fig1..fig6
  std::string out_dir;
  std::vector<std::uint64_t> seeds;  // empty = seeds 1..5
  int threads = 0;
  // Scale overrides for quick checks; reference scale when absent.
  std::optional<int> agents;
  std::optional<std::int64_t> steps;
};

// Runs the model set of one figure across the seed list and writes
// plot-ready CSVs plus a per-model summary of final Gini values.
void cmd_reproduce(const ReproduceOptions& options);

void cmd_list_models(std::ostream& out);

// The model sets behind cmd_reproduce, keyed fig1..fig6.
const std::vector<std::string>& figure_models(const std::string& figure);

}  // namespace wexsim::cli
