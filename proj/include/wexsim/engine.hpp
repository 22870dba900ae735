#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wexsim/factors.hpp"
#include "wexsim/metrics.hpp"
#include "wexsim/model.hpp"
#include "wexsim/rng.hpp"

namespace wexsim {

// All scalar knobs of one simulation run. Defaults are the reference
// parameterization used by the built-in experiments.
struct SimParams {
  int n_agents = 1000;
  std::int64_t total_steps = 1'000'000;
  double lambda = 0.25;    // savings rate, [0, 1)
  double delta_lo = -0.1;  // profit/loss rate bounds, delta_lo > -1
  double delta_hi = 0.1;
  std::int64_t t_p = 10'000;  // redistribution period in steps
  double xi = 0.5;            // redistribution transfer rate, [0, 1]
  double r_f = 0.5;           // free-rider commitment factor, (0, 1]
  std::uint64_t seed = 1;
  std::vector<std::int64_t> sample_times;  // empty = default schedule
  InitDistribution init = InitDistribution::EqualUnit;
  ModelSpec model;
};

// Throws std::invalid_argument on any out-of-contract field.
void validate(const SimParams& params);

// t = 0, every power of ten from 100 up to total_steps, and the final step.
std::vector<std::int64_t> default_sample_times(std::int64_t total_steps);

// Knobs for what gets recorded at sample times, not for the dynamics.
struct ObservationSpec {
  double hist_bin_width = 0.05;
  double band_lo = 0.5;
  double band_hi = 1.5;
};

struct WealthState {
  std::int64_t t = 0;
  std::vector<double> m;
};

struct GiniSample {
  std::int64_t t;
  double g;
};

struct Snapshot {
  std::vector<double> m;
  Histogram hist;
  SnapshotStats stats;
};

struct RunResult {
  SimParams params;  // echo with sample_times resolved
  std::vector<GiniSample> gini_series;
  std::map<std::int64_t, Snapshot> snapshots;

  double final_gini() const { return gini_series.back().g; }
};

// Raised when a run produces non-finite wealth; carries the failing step.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(std::int64_t step, const std::string& message);
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

WealthState init_state(const SimParams& params, Rng& rng);

// Runs the model's exchange rule on agents i and j (0-based storage
// indices), with rf_j applied to agent j. Exposed so pair updates can be
// driven with chosen pairs and rates; step() uses it after drawing them.
void apply_pair_exchange(WealthState& state, const ModelSpec& model, const FactorTable& table,
                         std::size_t i, std::size_t j, double lambda, double delta, double rf_j);

// One interaction: draw an ordered distinct pair (two index draws), draw
// delta, run the exchange, advance t, and redistribute when the new t is a
// multiple of t_p. The draw order is fixed and is part of the replay
// contract.
void step(WealthState& state, const SimParams& params, const FactorTable& table, Rng& rng);

// Full seeded run; records the Gini index and a snapshot at every sample
// time (observing the post-redistribution state when both coincide).
RunResult run(const SimParams& params, const ObservationSpec& obs = {});

// Same, but with a caller-supplied factor table instead of the linear
// profile for params.n_agents.
RunResult run_with_factors(const SimParams& params, const FactorTable& table,
                           const ObservationSpec& obs = {});

// One sweep cell = one (params, seed) pair, summarized.
struct SweepCell {
  std::string model;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double final_g = 0.0;
  double mean_m = 0.0;
  double band_fraction = 0.0;
};

struct SweepSummaryRow {
  std::string model;
  int n_ok = 0;
  int n_failed = 0;
  double median_final_g = 0.0;
  double min_final_g = 0.0;
  double max_final_g = 0.0;
};

struct SweepResult {
  std::vector<SweepCell> cells;          // grid-major, seed-minor order
  std::vector<SweepSummaryRow> summary;  // per model, first-appearance order
};

// Runs every grid entry under every replicate seed. Cells may execute on
// n_threads workers (0 = hardware concurrency); results are merged in grid
// order, so the output is independent of scheduling. A failing cell is
// reported in place without aborting the sweep.
SweepResult sweep(const std::vector<SimParams>& grid, const std::vector<std::uint64_t>& seeds,
                  int n_threads = 0, const ObservationSpec& obs = {});

}  // namespace wexsim
