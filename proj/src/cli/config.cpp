#include "wexsim/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wexsim::cli {

namespace {

using nlohmann::json;

const std::set<std::string>& run_config_keys() {
  static const std::set<std::string> keys = {
      "model", "agents", "steps", "lambda", "delta_lo", "delta_hi", "tp", "xi",
      "rf", "seed", "init", "sample_times", "bin_width", "band", "out"};
  return keys;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known, const char* what) {
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument(std::string(what) + ": unknown key '" + item.key() + "'");
    }
  }
}

json parse_document(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": not a JSON object");
  }
  return j;
}

ConfigOverrides overrides_from_json(const json& j, const char* what) {
  reject_unknown_keys(j, run_config_keys(), what);
  ConfigOverrides o;
  try {
    if (j.contains("model")) o.model = j.at("model").get<std::string>();
    if (j.contains("agents")) o.agents = j.at("agents").get<int>();
    if (j.contains("steps")) o.steps = j.at("steps").get<std::int64_t>();
    if (j.contains("lambda")) o.lambda = j.at("lambda").get<double>();
    if (j.contains("delta_lo")) o.delta_lo = j.at("delta_lo").get<double>();
    if (j.contains("delta_hi")) o.delta_hi = j.at("delta_hi").get<double>();
    if (j.contains("tp")) o.tp = j.at("tp").get<std::int64_t>();
    if (j.contains("xi")) o.xi = j.at("xi").get<double>();
    if (j.contains("rf")) o.rf = j.at("rf").get<double>();
    if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("init")) o.init = j.at("init").get<std::string>();
    if (j.contains("sample_times")) o.sample_times = j.at("sample_times").get<std::vector<std::int64_t>>();
    if (j.contains("bin_width")) o.bin_width = j.at("bin_width").get<double>();
    if (j.contains("band")) {
      const auto band = j.at("band").get<std::vector<double>>();
      if (band.size() != 2) {
        throw std::invalid_argument(std::string(what) + ": band must be [lo, hi]");
      }
      o.band = std::make_pair(band[0], band[1]);
    }
    if (j.contains("out")) o.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
  return o;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void apply(const ConfigOverrides& layer, ConfigOverrides& into) {
  if (layer.model) into.model = layer.model;
  if (layer.agents) into.agents = layer.agents;
  if (layer.steps) into.steps = layer.steps;
  if (layer.lambda) into.lambda = layer.lambda;
  if (layer.delta_lo) into.delta_lo = layer.delta_lo;
  if (layer.delta_hi) into.delta_hi = layer.delta_hi;
  if (layer.tp) into.tp = layer.tp;
  if (layer.xi) into.xi = layer.xi;
  if (layer.rf) into.rf = layer.rf;
  if (layer.seed) into.seed = layer.seed;
  if (layer.init) into.init = layer.init;
  if (layer.sample_times) into.sample_times = layer.sample_times;
  if (layer.bin_width) into.bin_width = layer.bin_width;
  if (layer.band) into.band = layer.band;
  if (layer.out) into.out = layer.out;
}

}  // namespace

ConfigOverrides parse_run_config(const std::string& json_text) {
  return overrides_from_json(parse_document(json_text, "run config"), "run config");
}

ConfigOverrides load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path));
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  const json j = parse_document(json_text, "sweep config");

  std::set<std::string> known = run_config_keys();
  known.insert("models");
  known.insert("seeds");
  known.insert("cells");
  known.insert("threads");
  reject_unknown_keys(j, known, "sweep config");

  SweepConfig config;
  try {
    if (j.contains("models")) config.models = j.at("models").get<std::vector<std::string>>();
    if (j.contains("seeds")) config.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("threads")) config.threads = j.at("threads").get<int>();
    if (j.contains("cells")) {
      for (const auto& cell : j.at("cells")) {
        if (!cell.is_object()) {
          throw std::invalid_argument("sweep config: cells entries must be objects");
        }
        config.cells.push_back(overrides_from_json(cell, "sweep cell"));
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }

  json shared = j;
  shared.erase("models");
  shared.erase("seeds");
  shared.erase("cells");
  shared.erase("threads");
  config.shared = overrides_from_json(shared, "sweep config");
  if (config.shared.out) config.out_dir = *config.shared.out;

  if (config.cells.empty() && (config.models.empty() || config.seeds.empty())) {
    throw std::invalid_argument("sweep config: need models and seeds, or an explicit cells list");
  }
  return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  return parse_sweep_config(read_file(path));
}

RunConfig resolve_run_config(const ConfigOverrides& file, const ConfigOverrides& flags) {
  ConfigOverrides merged;
  apply(file, merged);
  apply(flags, merged);

  if (!merged.model) {
    throw std::invalid_argument("no model specified (use --model or the config file)");
  }
  const ModelPreset preset = named_preset(*merged.model);

  RunConfig config;
  config.params.model = preset.model;
  if (merged.agents) config.params.n_agents = *merged.agents;
  if (merged.steps) config.params.total_steps = *merged.steps;
  if (merged.lambda) config.params.lambda = *merged.lambda;
  if (merged.delta_lo) config.params.delta_lo = *merged.delta_lo;
  if (merged.delta_hi) config.params.delta_hi = *merged.delta_hi;
  if (merged.tp) config.params.t_p = *merged.tp;
  if (merged.xi) config.params.xi = *merged.xi;
  if (merged.rf) config.params.r_f = *merged.rf;
  if (merged.seed) config.params.seed = *merged.seed;
  if (merged.sample_times) config.params.sample_times = *merged.sample_times;

  // Init precedence: explicit flag, then the preset's override (the -IR
  // models), then a config-file value, then equal shares.
  if (flags.init) {
    config.params.init = init_from_string(*flags.init);
  } else if (preset.init_override) {
    config.params.init = *preset.init_override;
  } else if (file.init) {
    config.params.init = init_from_string(*file.init);
  }

  if (merged.bin_width) {
    if (!(*merged.bin_width > 0.0)) {
      throw std::invalid_argument("bin_width must be positive");
    }
    config.obs.hist_bin_width = *merged.bin_width;
  }
  if (merged.band) {
    if (!(merged.band->first <= merged.band->second)) {
      throw std::invalid_argument("band must satisfy lo <= hi");
    }
    config.obs.band_lo = merged.band->first;
    config.obs.band_hi = merged.band->second;
  }
  if (merged.out) config.out_dir = *merged.out;

  validate(config.params);
  return config;
}

std::vector<SweepCellPlan> plan_sweep_cells(const SweepConfig& config) {
  std::vector<SweepCellPlan> plans;
  if (!config.cells.empty()) {
    for (const ConfigOverrides& cell : config.cells) {
      SweepCellPlan plan;
      plan.overrides = cell;
      if (cell.model) {
        plan.model_label = *cell.model;
      } else if (config.shared.model) {
        plan.model_label = *config.shared.model;
      } else {
        plan.model_label = "?";
      }
      plan.seed = cell.seed ? *cell.seed
                            : (config.shared.seed ? *config.shared.seed : SimParams{}.seed);
      plan.overrides.seed = plan.seed;
      plans.push_back(std::move(plan));
    }
    return plans;
  }
  for (const std::string& model : config.models) {
    for (std::uint64_t seed : config.seeds) {
      SweepCellPlan plan;
      plan.model_label = model;
      plan.seed = seed;
      plan.overrides.model = model;
      plan.overrides.seed = seed;
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

}  // namespace wexsim::cli
