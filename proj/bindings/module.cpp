#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wexsim/engine.hpp"
#include "wexsim/exchange.hpp"
#include "wexsim/factors.hpp"
#include "wexsim/metrics.hpp"
#include "wexsim/model.hpp"
#include "wexsim/redistribution.hpp"

namespace py = pybind11;
using namespace wexsim;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Agent-based wealth exchange simulator core";
  m.attr("RNG_ALGORITHM") = Rng::kAlgorithm;

  py::enum_<FactorKey>(m, "FactorKey")
      .value("M", FactorKey::M)
      .value("R", FactorKey::R)
      .value("MR", FactorKey::MR);

  py::enum_<InitDistribution>(m, "InitDistribution")
      .value("EQUAL_UNIT", InitDistribution::EqualUnit)
      .value("UNIFORM_OPEN_0_2", InitDistribution::UniformOpen02);

  py::class_<FactorTable>(m, "FactorTable")
      .def_static("from_arrays", &FactorTable::from_arrays, py::arg("rho_m"), py::arg("rho_r"))
      .def_property_readonly("n_agents", &FactorTable::n_agents)
      .def("rho_m_at", &FactorTable::rho_m_at, py::arg("i"))
      .def("rho_r_at", &FactorTable::rho_r_at, py::arg("i"))
      .def("rho_at", &FactorTable::rho_at, py::arg("i"))
      .def("rho_m", [](const FactorTable& t) {
        return std::vector<double>(t.rho_m().begin(), t.rho_m().end());
      })
      .def("rho_r", [](const FactorTable& t) {
        return std::vector<double>(t.rho_r().begin(), t.rho_r().end());
      })
      .def("rho", [](const FactorTable& t) {
        return std::vector<double>(t.rho().begin(), t.rho().end());
      });

  m.def("compute_factors", &compute_factors, py::arg("n_agents"));
  m.def("factor_weight", &factor_weight, py::arg("table"), py::arg("key"), py::arg("i"));

  m.def(
      "step_jv_basic",
      [](double m_i, double m_j, double lam, double delta) {
        const PairUpdate up = step_jv_basic(m_i, m_j, lam, delta);
        return py::make_tuple(up.m_i_next, up.m_j_next);
      },
      py::arg("m_i"), py::arg("m_j"), py::arg("lambda"), py::arg("delta"));
  m.def(
      "step_jv_responsibility",
      [](double m_i, double m_j, double rho_mi, double rho_mj, double lam, double delta,
         double rf_j) {
        const PairUpdate up =
            step_jv_responsibility(m_i, m_j, rho_mi, rho_mj, lam, delta, rf_j);
        return py::make_tuple(up.m_i_next, up.m_j_next);
      },
      py::arg("m_i"), py::arg("m_j"), py::arg("rho_mi"), py::arg("rho_mj"), py::arg("lambda"),
      py::arg("delta"), py::arg("rf_j") = 1.0);
  m.def(
      "step_we_pooled",
      [](double m_i, double m_j, double rho_mi, double rho_mj, double w_i, double w_j,
         double lam, double delta, double rf_j) {
        const PairUpdate up =
            step_we_pooled(m_i, m_j, rho_mi, rho_mj, w_i, w_j, lam, delta, rf_j);
        return py::make_tuple(up.m_i_next, up.m_j_next);
      },
      py::arg("m_i"), py::arg("m_j"), py::arg("rho_mi"), py::arg("rho_mj"), py::arg("w_i"),
      py::arg("w_j"), py::arg("lambda"), py::arg("delta"), py::arg("rf_j") = 1.0);

  m.def(
      "redistribute",
      [](const std::vector<double>& m, const std::vector<double>& rho_m,
         const std::vector<double>& weights, double xi) {
        return redistribute(m, rho_m, weights, xi);
      },
      py::arg("m"), py::arg("rho_m"), py::arg("payout_weights"), py::arg("xi"));
  m.def(
      "redistribute_keyed",
      [](const std::vector<double>& m, const FactorTable& table, FactorKey key, double xi) {
        return redistribute(m, table, key, xi);
      },
      py::arg("m"), py::arg("table"), py::arg("key"), py::arg("xi"));

  m.def(
      "gini", [](const std::vector<double>& m) { return gini(m); }, py::arg("m"));
  m.def(
      "lorenz",
      [](const std::vector<double>& m) {
        std::vector<std::pair<double, double>> points;
        for (const LorenzPoint& p : lorenz(m)) {
          points.emplace_back(p.population_share, p.wealth_share);
        }
        return points;
      },
      py::arg("m"));

  py::class_<Histogram>(m, "Histogram")
      .def_readonly("bin_width", &Histogram::bin_width)
      .def_readonly("bin_edges", &Histogram::bin_edges)
      .def_readonly("counts", &Histogram::counts);
  m.def(
      "histogram", [](const std::vector<double>& m, double w) { return histogram(m, w); },
      py::arg("m"), py::arg("bin_width"));

  py::class_<SnapshotStats>(m, "SnapshotStats")
      .def_readonly("mean", &SnapshotStats::mean)
      .def_readonly("min", &SnapshotStats::min)
      .def_readonly("max", &SnapshotStats::max)
      .def_readonly("band_lo", &SnapshotStats::band_lo)
      .def_readonly("band_hi", &SnapshotStats::band_hi)
      .def_readonly("band_fraction", &SnapshotStats::band_fraction);
  m.def(
      "snapshot_stats",
      [](const std::vector<double>& m, double lo, double hi) {
        return snapshot_stats(m, lo, hi);
      },
      py::arg("m"), py::arg("band_lo") = 0.5, py::arg("band_hi") = 1.5);

  py::class_<ExchangeRule>(m, "ExchangeRule")
      .def_readonly("distribution_key", &ExchangeRule::distribution_key);
  py::class_<RedistributionRule>(m, "RedistributionRule")
      .def_readonly("enabled", &RedistributionRule::enabled)
      .def_readonly("key", &RedistributionRule::key);
  py::class_<ModelSpec>(m, "ModelSpec")
      .def_readonly("name", &ModelSpec::name)
      .def_readonly("exchange", &ModelSpec::exchange)
      .def_readonly("redistribution", &ModelSpec::redistribution)
      .def_readonly("free_rider_enabled", &ModelSpec::free_rider_enabled);

  m.def("model_names", [] { return model_names(); });
  m.def(
      "named_preset",
      [](const std::string& name) {
        const ModelPreset preset = named_preset(name);
        return py::make_tuple(preset.model,
                              preset.init_override
                                  ? py::cast(*preset.init_override)
                                  : py::none());
      },
      py::arg("name"));

  py::class_<SimParams>(m, "SimParams")
      .def(py::init([](const std::string& model) {
             SimParams params;
             const ModelPreset preset = named_preset(model);
             params.model = preset.model;
             if (preset.init_override) params.init = *preset.init_override;
             return params;
           }),
           py::arg("model"))
      .def_readwrite("n_agents", &SimParams::n_agents)
      .def_readwrite("total_steps", &SimParams::total_steps)
      .def_readwrite("lambda_", &SimParams::lambda)
      .def_readwrite("delta_lo", &SimParams::delta_lo)
      .def_readwrite("delta_hi", &SimParams::delta_hi)
      .def_readwrite("t_p", &SimParams::t_p)
      .def_readwrite("xi", &SimParams::xi)
      .def_readwrite("r_f", &SimParams::r_f)
      .def_readwrite("seed", &SimParams::seed)
      .def_readwrite("sample_times", &SimParams::sample_times)
      .def_readwrite("init", &SimParams::init)
      .def_property_readonly("model", [](const SimParams& p) { return p.model; });

  m.def("validate", &validate, py::arg("params"));
  m.def("default_sample_times", &default_sample_times, py::arg("total_steps"));

  py::class_<ObservationSpec>(m, "ObservationSpec")
      .def(py::init<>())
      .def_readwrite("hist_bin_width", &ObservationSpec::hist_bin_width)
      .def_readwrite("band_lo", &ObservationSpec::band_lo)
      .def_readwrite("band_hi", &ObservationSpec::band_hi);

  py::class_<Snapshot>(m, "Snapshot")
      .def_readonly("m", &Snapshot::m)
      .def_readonly("hist", &Snapshot::hist)
      .def_readonly("stats", &Snapshot::stats);

  py::class_<RunResult>(m, "RunResult")
      .def_property_readonly("params", [](const RunResult& r) { return r.params; })
      .def_property_readonly("gini_series",
                             [](const RunResult& r) {
                               std::vector<std::pair<std::int64_t, double>> series;
                               for (const GiniSample& s : r.gini_series) {
                                 series.emplace_back(s.t, s.g);
                               }
                               return series;
                             })
      .def_property_readonly("snapshots", [](const RunResult& r) { return r.snapshots; })
      .def_property_readonly("final_gini", &RunResult::final_gini);

  m.def("run", &run, py::arg("params"), py::arg("obs") = ObservationSpec{},
        py::call_guard<py::gil_scoped_release>());

  py::class_<SweepCell>(m, "SweepCell")
      .def_readonly("model", &SweepCell::model)
      .def_readonly("seed", &SweepCell::seed)
      .def_readonly("ok", &SweepCell::ok)
      .def_readonly("error", &SweepCell::error)
      .def_readonly("final_g", &SweepCell::final_g)
      .def_readonly("mean_m", &SweepCell::mean_m)
      .def_readonly("band_fraction", &SweepCell::band_fraction);
  py::class_<SweepSummaryRow>(m, "SweepSummaryRow")
      .def_readonly("model", &SweepSummaryRow::model)
      .def_readonly("n_ok", &SweepSummaryRow::n_ok)
      .def_readonly("n_failed", &SweepSummaryRow::n_failed)
      .def_readonly("median_final_g", &SweepSummaryRow::median_final_g)
      .def_readonly("min_final_g", &SweepSummaryRow::min_final_g)
      .def_readonly("max_final_g", &SweepSummaryRow::max_final_g);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("cells", &SweepResult::cells)
      .def_readonly("summary", &SweepResult::summary);

  m.def("sweep", &sweep, py::arg("grid"), py::arg("seeds"), py::arg("n_threads") = 0,
        py::arg("obs") = ObservationSpec{}, py::call_guard<py::gil_scoped_release>());

  py::register_exception<SimulationError>(m, "SimulationError", PyExc_RuntimeError);
}
