#include "wexsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "wexsim/exchange.hpp"
#include "wexsim/redistribution.hpp"

namespace wexsim {

SimulationError::SimulationError(std::int64_t step, const std::string& message)
    : std::runtime_error(message), step_(step) {}

void validate(const SimParams& p) {
  if (p.n_agents < 2) {
    throw std::invalid_argument("n_agents must be at least 2");
  }
  if (p.total_steps < 0) {
    throw std::invalid_argument("total_steps must be nonnegative");
  }
  if (!std::isfinite(p.lambda) || p.lambda < 0.0 || p.lambda >= 1.0) {
    throw std::invalid_argument("lambda must lie in [0, 1)");
  }
  if (!std::isfinite(p.delta_lo) || !std::isfinite(p.delta_hi) || p.delta_lo > p.delta_hi) {
    throw std::invalid_argument("delta bounds must be finite with delta_lo <= delta_hi");
  }
  if (p.delta_lo <= -1.0) {
    throw std::invalid_argument("delta_lo must be greater than -1");
  }
  if (p.t_p < 1) {
    throw std::invalid_argument("t_p must be at least 1");
  }
  if (!std::isfinite(p.xi) || p.xi < 0.0 || p.xi > 1.0) {
    throw std::invalid_argument("xi must lie in [0, 1]");
  }
  if (!std::isfinite(p.r_f) || !(p.r_f > 0.0) || p.r_f > 1.0) {
    throw std::invalid_argument("r_f must lie in (0, 1]");
  }
  if (p.model.free_rider_enabled && p.model.exchange.kind == ExchangeRule::Kind::JVBasic) {
    throw std::invalid_argument("free riding requires a responsibility-weighted exchange rule");
  }
  std::int64_t prev = -1;
  for (std::int64_t t : p.sample_times) {
    if (t < 0 || t > p.total_steps) {
      throw std::invalid_argument("sample_times must lie in [0, total_steps]");
    }
    if (t <= prev) {
      throw std::invalid_argument("sample_times must be strictly ascending");
    }
    prev = t;
  }
}

std::vector<std::int64_t> default_sample_times(std::int64_t total_steps) {
  std::vector<std::int64_t> times{0};
  for (std::int64_t t = 100; t <= total_steps && t > 0; t *= 10) {
    times.push_back(t);
  }
  if (times.back() != total_steps) {
    times.push_back(total_steps);
  }
  return times;
}

WealthState init_state(const SimParams& params, Rng& rng) {
  WealthState state;
  state.t = 0;
  state.m.assign(static_cast<std::size_t>(params.n_agents), 1.0);
  if (params.init == InitDistribution::UniformOpen02) {
    for (double& v : state.m) {
      double u;
      do {
        u = rng.next_double();
      } while (u == 0.0);  // keep the interval open at both ends
      v = 2.0 * u;
    }
  }
  return state;
}

void apply_pair_exchange(WealthState& state, const ModelSpec& model, const FactorTable& table,
                         std::size_t i, std::size_t j, double lambda, double delta, double rf_j) {
  const double m_i = state.m[i];
  const double m_j = state.m[j];
  PairUpdate up{};
  switch (model.exchange.kind) {
    case ExchangeRule::Kind::JVBasic:
      up = step_jv_basic(m_i, m_j, lambda, delta);
      break;
    case ExchangeRule::Kind::JVResponsibility:
      up = step_jv_responsibility(m_i, m_j, table.rho_m()[i], table.rho_m()[j], lambda, delta, rf_j);
      break;
    case ExchangeRule::Kind::WEPooled: {
      const std::span<const double> w = table.by_key(model.exchange.distribution_key);
      up = step_we_pooled(m_i, m_j, table.rho_m()[i], table.rho_m()[j], w[i], w[j], lambda, delta,
                          rf_j);
      break;
    }
  }
  state.m[i] = up.m_i_next;
  state.m[j] = up.m_j_next;
}

void step(WealthState& state, const SimParams& params, const FactorTable& table, Rng& rng) {
  if (state.t >= params.total_steps) {
    throw std::invalid_argument("step called past total_steps");
  }
  const auto n = static_cast<std::size_t>(params.n_agents);

  // Fixed draw order: agent i over N, agent j over the N-1 others, then
  // delta. Replays depend on this order.
  const std::size_t i = rng.uniform_index(n);
  std::size_t j = rng.uniform_index(n - 1);
  if (j >= i) ++j;
  const double delta = rng.uniform(params.delta_lo, params.delta_hi);
  const double rf_j = params.model.free_rider_enabled ? params.r_f : 1.0;

  apply_pair_exchange(state, params.model, table, i, j, params.lambda, delta, rf_j);
  ++state.t;

  if (!std::isfinite(state.m[i]) || !std::isfinite(state.m[j])) {
    throw SimulationError(state.t, "non-finite wealth after exchange at step " +
                                       std::to_string(state.t));
  }

  if (params.model.redistribution.enabled && state.t % params.t_p == 0) {
    state.m = redistribute(state.m, table, params.model.redistribution.key, params.xi);
    for (double v : state.m) {
      if (!std::isfinite(v)) {
        throw SimulationError(state.t, "non-finite wealth after redistribution at step " +
                                           std::to_string(state.t));
      }
    }
  }
}

namespace {

Snapshot make_snapshot(const WealthState& state, const ObservationSpec& obs) {
  Snapshot snap;
  snap.m = state.m;
  snap.hist = histogram(state.m, obs.hist_bin_width);
  snap.stats = snapshot_stats(state.m, obs.band_lo, obs.band_hi);
  return snap;
}

}  // namespace

RunResult run_with_factors(const SimParams& params, const FactorTable& table,
                           const ObservationSpec& obs) {
  validate(params);
  if (table.n_agents() != params.n_agents) {
    throw std::invalid_argument("factor table size does not match n_agents");
  }

  SimParams resolved = params;
  if (resolved.sample_times.empty()) {
    resolved.sample_times = default_sample_times(resolved.total_steps);
  }

  Rng rng(resolved.seed);
  WealthState state = init_state(resolved, rng);

  RunResult result;
  result.params = resolved;

  auto record = [&] {
    result.gini_series.push_back({state.t, gini(state.m)});
    result.snapshots.emplace(state.t, make_snapshot(state, obs));
  };

  std::size_t next_sample = 0;
  if (next_sample < resolved.sample_times.size() && resolved.sample_times[next_sample] == 0) {
    record();
    ++next_sample;
  }
  while (state.t < resolved.total_steps) {
    step(state, resolved, table, rng);
    if (next_sample < resolved.sample_times.size() &&
        resolved.sample_times[next_sample] == state.t) {
      record();
      ++next_sample;
    }
  }
  return result;
}

RunResult run(const SimParams& params, const ObservationSpec& obs) {
  validate(params);
  return run_with_factors(params, compute_factors(params.n_agents), obs);
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

SweepCell run_cell(const SimParams& params, std::uint64_t seed, const ObservationSpec& obs) {
  SweepCell cell;
  cell.model = params.model.name;
  cell.seed = seed;
  try {
    SimParams cell_params = params;
    cell_params.seed = seed;
    const RunResult result = run(cell_params, obs);
    cell.final_g = result.final_gini();
    const Snapshot& last = result.snapshots.rbegin()->second;
    cell.mean_m = last.stats.mean;
    cell.band_fraction = last.stats.band_fraction;
    cell.ok = true;
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

SweepResult sweep(const std::vector<SimParams>& grid, const std::vector<std::uint64_t>& seeds,
                  int n_threads, const ObservationSpec& obs) {
  if (grid.empty() || seeds.empty()) {
    throw std::invalid_argument("sweep needs a nonempty grid and at least one seed");
  }

  struct CellJob {
    const SimParams* params;
    std::uint64_t seed;
  };
  std::vector<CellJob> jobs;
  jobs.reserve(grid.size() * seeds.size());
  for (const SimParams& params : grid) {
    for (std::uint64_t seed : seeds) {
      jobs.push_back({&params, seed});
    }
  }

  SweepResult result;
  result.cells.resize(jobs.size());

  std::size_t workers = n_threads > 0 ? static_cast<std::size_t>(n_threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());

  if (workers <= 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      result.cells[k] = run_cell(*jobs[k].params, jobs[k].seed, obs);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1)) {
        result.cells[k] = run_cell(*jobs[k].params, jobs[k].seed, obs);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Per-model aggregation over successful cells, in first-appearance order.
  std::vector<std::string> order;
  for (const SweepCell& cell : result.cells) {
    if (std::find(order.begin(), order.end(), cell.model) == order.end()) {
      order.push_back(cell.model);
    }
  }
  for (const std::string& model : order) {
    SweepSummaryRow row;
    row.model = model;
    std::vector<double> finals;
    for (const SweepCell& cell : result.cells) {
      if (cell.model != model) continue;
      if (cell.ok) {
        finals.push_back(cell.final_g);
        ++row.n_ok;
      } else {
        ++row.n_failed;
      }
    }
    if (!finals.empty()) {
      row.median_final_g = median_of(finals);
      row.min_final_g = *std::min_element(finals.begin(), finals.end());
      row.max_final_g = *std::max_element(finals.begin(), finals.end());
    }
    result.summary.push_back(row);
  }
  return result;
}

}  // namespace wexsim
