#pragma once

#include <filesystem>
#include <string>

#include "wexsim/cli/config.hpp"
#include "wexsim/engine.hpp"

namespace wexsim::cli {

// Provenance document for one run: the fully resolved parameters plus the
// RNG identifier. Sufficient to reproduce every output file byte for byte.
std::string run_provenance_json(const SimParams& params, const ObservationSpec& obs);

// gini.csv, snapshot_<t>.csv and histogram_<t>.csv per sample time, and
// run.json, all under dir (created if missing).
void write_run_outputs(const std::filesystem::path& dir, const RunResult& result,
                       const FactorTable& table, const ObservationSpec& obs);

}  // namespace wexsim::cli
