#include "wexsim/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wexsim/cli/outputs.hpp"
#include "wexsim/csv.hpp"

namespace wexsim::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void require_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) {
    throw std::invalid_argument("output directory required (--out or config 'out')");
  }
}

void write_text_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path.string());
  }
  out << body;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

// Index-addressed parallel loop; results land in caller-owned slots, so
// output order never depends on scheduling.
template <typename Fn>
void for_each_index(std::size_t count, int n_threads, Fn&& fn) {
  std::size_t workers = n_threads > 0 ? static_cast<std::size_t>(n_threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(k);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

void cmd_run(const RunConfig& config) {
  require_out_dir(config.out_dir);
  const FactorTable table = compute_factors(config.params.n_agents);
  const RunResult result = run_with_factors(config.params, table, config.obs);
  write_run_outputs(config.out_dir, result, table, config.obs);
}

bool cmd_sweep(const SweepConfig& config) {
  require_out_dir(config.out_dir);
  const std::vector<SweepCellPlan> plans = plan_sweep_cells(config);

  struct CellOutcome {
    bool ok = false;
    std::string error;
    RunConfig resolved;   // valid when resolvable
    bool resolvable = false;
    double final_g = 0.0;
    double mean_m = 0.0;
    double band_fraction = 0.0;
    std::int64_t resolved_samples = 0;
  };
  std::vector<CellOutcome> outcomes(plans.size());

  // Resolve sequentially (cheap, deterministic error text), run in parallel.
  for (std::size_t k = 0; k < plans.size(); ++k) {
    try {
      outcomes[k].resolved = resolve_run_config(config.shared, plans[k].overrides);
      outcomes[k].resolvable = true;
    } catch (const std::exception& e) {
      outcomes[k].error = e.what();
    }
  }

  for_each_index(plans.size(), config.threads, [&](std::size_t k) {
    if (!outcomes[k].resolvable) return;
    try {
      RunResult result = run(outcomes[k].resolved.params, outcomes[k].resolved.obs);
      outcomes[k].resolved.params = result.params;  // sample_times now resolved
      outcomes[k].final_g = result.final_gini();
      const Snapshot& last = result.snapshots.rbegin()->second;
      outcomes[k].mean_m = last.stats.mean;
      outcomes[k].band_fraction = last.stats.band_fraction;
      outcomes[k].ok = true;
    } catch (const std::exception& e) {
      outcomes[k].error = e.what();
    }
  });

  fs::create_directories(config.out_dir);

  std::string sweep_csv = "model,seed,final_g,mean_m,band_fraction\n";
  std::string failures_csv = "model,seed,error\n";
  bool any_ok = false;
  for (std::size_t k = 0; k < plans.size(); ++k) {
    const CellOutcome& outcome = outcomes[k];
    if (outcome.ok) {
      any_ok = true;
      sweep_csv += outcome.resolved.params.model.name;
      sweep_csv += ',';
      sweep_csv += format_int(static_cast<std::int64_t>(plans[k].seed));
      sweep_csv += ',';
      sweep_csv += format_double(outcome.final_g);
      sweep_csv += ',';
      sweep_csv += format_double(outcome.mean_m);
      sweep_csv += ',';
      sweep_csv += format_double(outcome.band_fraction);
      sweep_csv += '\n';
    } else {
      std::string error = outcome.error;
      std::replace(error.begin(), error.end(), ',', ';');
      std::replace(error.begin(), error.end(), '\n', ' ');
      failures_csv += plans[k].model_label;
      failures_csv += ',';
      failures_csv += format_int(static_cast<std::int64_t>(plans[k].seed));
      failures_csv += ',';
      failures_csv += error;
      failures_csv += '\n';
    }

    std::string provenance;
    if (outcome.resolvable) {
      provenance = run_provenance_json(outcome.resolved.params, outcome.resolved.obs);
    } else {
      json j;
      j["model"] = plans[k].model_label;
      j["seed"] = plans[k].seed;
      j["error"] = outcome.error;
      provenance = j.dump(2) + "\n";
    }
    write_text_file(fs::path(config.out_dir) / ("run_cell" + std::to_string(k) + ".json"),
                    provenance);
  }

  write_text_file(fs::path(config.out_dir) / "sweep.csv", sweep_csv);
  write_text_file(fs::path(config.out_dir) / "failures.csv", failures_csv);
  return any_ok;
}

const std::vector<std::string>& figure_models(const std::string& figure) {
  static const std::map<std::string, std::vector<std::string>> sets = {
      {"fig1", {"JV-B", "JV-M", "WE-M-M"}},
      {"fig2", {"JV-M-M", "JV-M-R", "JV-M-MR"}},
      {"fig3", {"WE-M-M", "WE-M-R", "WE-M-MR"}},
      {"fig4", {"JV-M-M-IR", "WE-M-M-IR"}},
      {"fig5", {"JV-M-M-FR", "WE-M-M-FR"}},
      {"fig6",
       {"JV-M", "JV-M-M", "JV-M-R", "JV-M-MR", "WE-M-M", "WE-M-R", "WE-M-MR", "JV-M-M-IR",
        "JV-M-M-FR", "WE-M-M-IR", "WE-M-M-FR"}},
  };
  const auto it = sets.find(figure);
  if (it == sets.end()) {
    std::string valid;
    for (const auto& [key, models] : sets) {
      valid += ' ';
      valid += key;
    }
    throw std::invalid_argument("unknown figure '" + figure + "'; valid figures:" + valid);
  }
  return it->second;
}

void cmd_reproduce(const ReproduceOptions& options) {
  require_out_dir(options.out_dir);
  const std::vector<std::string>& models = figure_models(options.figure);
  const bool wealth_outputs = options.figure != "fig6";

  std::vector<std::uint64_t> seeds = options.seeds;
  if (seeds.empty()) seeds = {1, 2, 3, 4, 5};

  struct Cell {
    std::string model;
    std::uint64_t seed;
    SimParams params;
    RunResult result;
  };
  std::vector<Cell> cells;
  for (const std::string& model : models) {
    for (std::uint64_t seed : seeds) {
      Cell cell;
      cell.model = model;
      cell.seed = seed;
      const ModelPreset preset = named_preset(model);
      cell.params.model = preset.model;
      if (preset.init_override) cell.params.init = *preset.init_override;
      if (options.agents) cell.params.n_agents = *options.agents;
      if (options.steps) cell.params.total_steps = *options.steps;
      cell.params.seed = seed;
      validate(cell.params);
      cells.push_back(std::move(cell));
    }
  }

  const ObservationSpec obs;
  for_each_index(cells.size(), options.threads,
                 [&](std::size_t k) { cells[k].result = run(cells[k].params, obs); });

  const fs::path dir = fs::path(options.out_dir) / options.figure;
  fs::create_directories(dir);

  std::string gini_csv = "model,seed,t,g\n";
  for (const Cell& cell : cells) {
    for (const GiniSample& sample : cell.result.gini_series) {
      gini_csv += cell.model;
      gini_csv += ',';
      gini_csv += format_int(static_cast<std::int64_t>(cell.seed));
      gini_csv += ',';
      gini_csv += format_int(sample.t);
      gini_csv += ',';
      gini_csv += format_double(sample.g);
      gini_csv += '\n';
    }
  }
  write_text_file(dir / "gini.csv", gini_csv);

  if (wealth_outputs) {
    std::string hist_csv = "model,seed,t,bin_lo,bin_hi,count\n";
    std::string wealth_csv = "model,seed,agent_id,m\n";
    for (const Cell& cell : cells) {
      for (const auto& [t, snap] : cell.result.snapshots) {
        if (t < 10'000) continue;  // figures show t = 1e4, 1e5, 1e6
        for (std::size_t b = 0; b < snap.hist.counts.size(); ++b) {
          hist_csv += cell.model;
          hist_csv += ',';
          hist_csv += format_int(static_cast<std::int64_t>(cell.seed));
          hist_csv += ',';
          hist_csv += format_int(t);
          hist_csv += ',';
          hist_csv += format_double(snap.hist.bin_edges[b]);
          hist_csv += ',';
          hist_csv += format_double(snap.hist.bin_edges[b + 1]);
          hist_csv += ',';
          hist_csv += format_int(snap.hist.counts[b]);
          hist_csv += '\n';
        }
      }
      const Snapshot& last = cell.result.snapshots.rbegin()->second;
      for (std::size_t a = 0; a < last.m.size(); ++a) {
        wealth_csv += cell.model;
        wealth_csv += ',';
        wealth_csv += format_int(static_cast<std::int64_t>(cell.seed));
        wealth_csv += ',';
        wealth_csv += format_int(static_cast<std::int64_t>(a + 1));
        wealth_csv += ',';
        wealth_csv += format_double(last.m[a]);
        wealth_csv += '\n';
      }
    }
    write_text_file(dir / "histograms.csv", hist_csv);
    write_text_file(dir / "wealth.csv", wealth_csv);
  }

  std::string summary_csv = "model,median_final_g,min_final_g,max_final_g\n";
  for (const std::string& model : models) {
    std::vector<double> finals;
    for (const Cell& cell : cells) {
      if (cell.model == model) finals.push_back(cell.result.final_gini());
    }
    summary_csv += model;
    summary_csv += ',';
    summary_csv += format_double(median_of(finals));
    summary_csv += ',';
    summary_csv += format_double(*std::min_element(finals.begin(), finals.end()));
    summary_csv += ',';
    summary_csv += format_double(*std::max_element(finals.begin(), finals.end()));
    summary_csv += '\n';
  }
  write_text_file(dir / "summary.csv", summary_csv);

  json provenance;
  provenance["figure"] = options.figure;
  provenance["models"] = models;
  provenance["seeds"] = seeds;
  provenance["rng"] = Rng::kAlgorithm;
  if (!cells.empty()) {
    provenance["params"] =
        json::parse(run_provenance_json(cells.front().result.params, obs));
  }
  write_text_file(dir / "reproduce.json", provenance.dump(2) + "\n");
}

void cmd_list_models(std::ostream& out) {
  const auto& names = model_names();
  const auto& descriptions = model_descriptions();
  std::size_t width = 0;
  for (const std::string& name : names) width = std::max(width, name.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    out << names[k] << std::string(width - names[k].size() + 2, ' ') << descriptions[k] << '\n';
  }
}

}  // namespace wexsim::cli
