#include "wexsim/cli/outputs.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "wexsim/csv.hpp"

namespace wexsim::cli {

namespace {

using nlohmann::json;

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path.string());
  }
  out << body;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

json model_json(const ModelSpec& model) {
  json j;
  j["name"] = model.name;
  switch (model.exchange.kind) {
    case ExchangeRule::Kind::JVBasic:
      j["exchange"] = "jv_basic";
      break;
    case ExchangeRule::Kind::JVResponsibility:
      j["exchange"] = "jv_responsibility";
      break;
    case ExchangeRule::Kind::WEPooled:
      j["exchange"] = "we_pooled";
      j["distribution_key"] = to_string(model.exchange.distribution_key);
      break;
  }
  if (model.redistribution.enabled) {
    j["redistribution_key"] = to_string(model.redistribution.key);
  } else {
    j["redistribution_key"] = nullptr;
  }
  j["free_rider"] = model.free_rider_enabled;
  return j;
}

}  // namespace

std::string run_provenance_json(const SimParams& params, const ObservationSpec& obs) {
  json j;
  j["rng"] = Rng::kAlgorithm;
  j["model"] = model_json(params.model);
  j["agents"] = params.n_agents;
  j["steps"] = params.total_steps;
  j["lambda"] = params.lambda;
  j["delta_lo"] = params.delta_lo;
  j["delta_hi"] = params.delta_hi;
  j["tp"] = params.t_p;
  j["xi"] = params.xi;
  j["rf"] = params.r_f;
  j["seed"] = params.seed;
  j["init"] = to_string(params.init);
  j["sample_times"] = params.sample_times;
  j["bin_width"] = obs.hist_bin_width;
  j["band"] = {obs.band_lo, obs.band_hi};
  return j.dump(2) + "\n";
}

void write_run_outputs(const std::filesystem::path& dir, const RunResult& result,
                       const FactorTable& table, const ObservationSpec& obs) {
  std::filesystem::create_directories(dir);

  std::string gini_csv = "t,g\n";
  for (const GiniSample& sample : result.gini_series) {
    gini_csv += format_int(sample.t);
    gini_csv += ',';
    gini_csv += format_double(sample.g);
    gini_csv += '\n';
  }
  write_text_file(dir / "gini.csv", gini_csv);

  for (const auto& [t, snap] : result.snapshots) {
    std::string snapshot_csv = "agent_id,rho_m,rho_r,rho,m\n";
    for (int i = 1; i <= table.n_agents(); ++i) {
      snapshot_csv += format_int(i);
      snapshot_csv += ',';
      snapshot_csv += format_double(table.rho_m_at(i));
      snapshot_csv += ',';
      snapshot_csv += format_double(table.rho_r_at(i));
      snapshot_csv += ',';
      snapshot_csv += format_double(table.rho_at(i));
      snapshot_csv += ',';
      snapshot_csv += format_double(snap.m[static_cast<std::size_t>(i - 1)]);
      snapshot_csv += '\n';
    }
    write_text_file(dir / ("snapshot_" + format_int(t) + ".csv"), snapshot_csv);

    std::string hist_csv = "bin_lo,bin_hi,count\n";
    for (std::size_t k = 0; k < snap.hist.counts.size(); ++k) {
      hist_csv += format_double(snap.hist.bin_edges[k]);
      hist_csv += ',';
      hist_csv += format_double(snap.hist.bin_edges[k + 1]);
      hist_csv += ',';
      hist_csv += format_int(snap.hist.counts[k]);
      hist_csv += '\n';
    }
    write_text_file(dir / ("histogram_" + format_int(t) + ".csv"), hist_csv);
  }

  write_text_file(dir / "run.json", run_provenance_json(result.params, obs));
}

}  // namespace wexsim::cli
