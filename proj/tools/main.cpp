#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wexsim/cli/commands.hpp"
#include "wexsim/cli/config.hpp"
#include "wexsim/engine.hpp"

namespace {

using wexsim::cli::ConfigOverrides;

// Binds the shared parameter flags of `run` to an overrides layer. Only
// flags the user actually passed end up set.
void add_param_flags(CLI::App& cmd, ConfigOverrides& flags, std::vector<double>& band,
                     std::vector<std::int64_t>& sample_times) {
  cmd.add_option_function<std::string>(
      "--model", [&flags](const std::string& v) { flags.model = v; }, "Model preset name");
  cmd.add_option_function<int>(
      "--agents", [&flags](int v) { flags.agents = v; }, "Number of agents");
  cmd.add_option_function<std::int64_t>(
      "--steps", [&flags](std::int64_t v) { flags.steps = v; }, "Total interaction steps");
  cmd.add_option_function<std::uint64_t>(
      "--seed", [&flags](std::uint64_t v) { flags.seed = v; }, "RNG seed");
  cmd.add_option_function<double>(
      "--lambda", [&flags](double v) { flags.lambda = v; }, "Savings rate in [0,1)");
  cmd.add_option_function<double>(
      "--delta-lo", [&flags](double v) { flags.delta_lo = v; }, "Lower profit/loss bound");
  cmd.add_option_function<double>(
      "--delta-hi", [&flags](double v) { flags.delta_hi = v; }, "Upper profit/loss bound");
  cmd.add_option_function<std::int64_t>(
      "--tp", [&flags](std::int64_t v) { flags.tp = v; }, "Redistribution period in steps");
  cmd.add_option_function<double>(
      "--xi", [&flags](double v) { flags.xi = v; }, "Redistribution transfer rate in [0,1]");
  cmd.add_option_function<double>(
      "--rf", [&flags](double v) { flags.rf = v; }, "Free-rider commitment factor in (0,1]");
  cmd.add_option_function<std::string>(
      "--init", [&flags](const std::string& v) { flags.init = v; },
      "Initial distribution: equal or uniform");
  cmd.add_option_function<double>(
      "--bin-width", [&flags](double v) { flags.bin_width = v; }, "Histogram bin width");
  cmd.add_option("--band", band, "Snapshot band lo,hi")->delimiter(',')->expected(1, 2);
  cmd.add_option("--sample-times", sample_times, "Sample times, comma separated")->delimiter(',');
  cmd.add_option_function<std::string>(
      "--out", [&flags](const std::string& v) { flags.out = v; }, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agent-based wealth exchange simulator"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Run one model and write CSV/JSON outputs");
  std::string run_config_path;
  ConfigOverrides run_flags;
  std::vector<double> run_band;
  std::vector<std::int64_t> run_sample_times;
  run_cmd->add_option("--config", run_config_path, "JSON config file");
  add_param_flags(*run_cmd, run_flags, run_band, run_sample_times);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid of models x seeds");
  std::string sweep_config_path;
  std::string sweep_out;
  std::vector<std::uint64_t> sweep_seeds;
  int sweep_threads = -1;
  sweep_cmd->add_option("--config", sweep_config_path, "JSON sweep config file")->required();
  sweep_cmd->add_option("--out", sweep_out, "Output directory (overrides config)");
  sweep_cmd->add_option("--seeds", sweep_seeds, "Replicate seeds (override config)")
      ->delimiter(',');
  sweep_cmd->add_option("--threads", sweep_threads, "Worker threads (0 = all cores)");

  // reproduce
  auto* repro_cmd = app.add_subcommand("reproduce", "Run a built-in figure experiment");
  wexsim::cli::ReproduceOptions repro;
  int repro_agents = -1;
  std::int64_t repro_steps = -1;
  repro_cmd->add_option("figure", repro.figure, "fig1..fig6")->required();
  repro_cmd->add_option("--out", repro.out_dir, "Output directory")->required();
  repro_cmd->add_option("--seeds", repro.seeds, "Replicate seeds, comma separated")
      ->delimiter(',');
  repro_cmd->add_option("--threads", repro.threads, "Worker threads (0 = all cores)");
  repro_cmd->add_option("--agents", repro_agents, "Override number of agents");
  repro_cmd->add_option("--steps", repro_steps, "Override total steps");

  // list-models
  auto* list_cmd = app.add_subcommand("list-models", "List the built-in model presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) {
      if (!run_band.empty()) {
        if (run_band.size() != 2) throw std::invalid_argument("--band expects lo,hi");
        run_flags.band = std::make_pair(run_band[0], run_band[1]);
      }
      if (!run_sample_times.empty()) run_flags.sample_times = run_sample_times;
      ConfigOverrides file;
      if (!run_config_path.empty()) file = wexsim::cli::load_run_config(run_config_path);
      wexsim::cli::cmd_run(wexsim::cli::resolve_run_config(file, run_flags));
    } else if (*sweep_cmd) {
      wexsim::cli::SweepConfig config = wexsim::cli::load_sweep_config(sweep_config_path);
      if (!sweep_out.empty()) config.out_dir = sweep_out;
      if (!sweep_seeds.empty()) config.seeds = sweep_seeds;
      if (sweep_threads >= 0) config.threads = sweep_threads;
      if (!wexsim::cli::cmd_sweep(config)) {
        std::cerr << "sweep: all cells failed (see failures.csv)\n";
        return 2;
      }
    } else if (*repro_cmd) {
      if (repro_agents > 0) repro.agents = repro_agents;
      if (repro_steps >= 0) repro.steps = repro_steps;
      wexsim::cli::cmd_reproduce(repro);
    } else if (*list_cmd) {
      wexsim::cli::cmd_list_models(std::cout);
    }
  } catch (const wexsim::SimulationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
