#include "wexsim/exchange.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wexsim {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

void require_wealth(double m, const char* name) {
  require_finite(m, name);
  if (m < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be nonnegative");
  }
}

void require_rates(double lambda, double delta) {
  require_finite(lambda, "lambda");
  require_finite(delta, "delta");
  if (lambda < 0.0 || lambda >= 1.0) {
    throw std::invalid_argument("lambda must lie in [0, 1)");
  }
  if (delta < -1.0) {
    throw std::invalid_argument("delta must be at least -1");
  }
}

void require_unit_factor(double v, const char* name) {
  require_finite(v, name);
  if (!(v > 0.0) || !(v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
  }
}

// m' = lambda*m + (1-lambda)*(1-rho)*m + (1+delta)*(1-lambda)*rho*m, with
// the association fixed so that rho = 1 collapses bitwise onto the basic
// rule and rho = rf*rho_m covers the free-riding agent.
double jv_agent_next(double m, double rho_eff, double lambda, double delta) {
  const double committed = (1.0 - lambda) * (rho_eff * m);
  return lambda * m + (1.0 - lambda) * ((1.0 - rho_eff) * m) + (1.0 + delta) * committed;
}

}  // namespace

PairUpdate step_jv_basic(double m_i, double m_j, double lambda, double delta) {
  require_wealth(m_i, "m_i");
  require_wealth(m_j, "m_j");
  require_rates(lambda, delta);
  return {jv_agent_next(m_i, 1.0, lambda, delta), jv_agent_next(m_j, 1.0, lambda, delta)};
}

PairUpdate step_jv_responsibility(double m_i, double m_j, double rho_mi, double rho_mj,
                                  double lambda, double delta, double rf_j) {
  require_wealth(m_i, "m_i");
  require_wealth(m_j, "m_j");
  require_rates(lambda, delta);
  require_unit_factor(rho_mi, "rho_mi");
  require_unit_factor(rho_mj, "rho_mj");
  require_unit_factor(rf_j, "rf_j");
  return {jv_agent_next(m_i, rho_mi, lambda, delta),
          jv_agent_next(m_j, rf_j * rho_mj, lambda, delta)};
}

PairUpdate step_we_pooled(double m_i, double m_j, double rho_mi, double rho_mj,
                          double w_i, double w_j, double lambda, double delta, double rf_j) {
  require_wealth(m_i, "m_i");
  require_wealth(m_j, "m_j");
  require_rates(lambda, delta);
  require_unit_factor(rho_mi, "rho_mi");
  require_unit_factor(rho_mj, "rho_mj");
  require_unit_factor(rf_j, "rf_j");
  require_finite(w_i, "w_i");
  require_finite(w_j, "w_j");
  if (!(w_i > 0.0) || !(w_j > 0.0)) {
    throw std::invalid_argument("distribution weights must be positive");
  }

  const double rho_j_eff = rf_j * rho_mj;
  const double pool = (1.0 - lambda) * (rho_mi * m_i + rho_j_eff * m_j);
  const double share_i = w_i / (w_i + w_j);
  const double share_j = w_j / (w_i + w_j);

  const double next_i =
      lambda * m_i + (1.0 - lambda) * ((1.0 - rho_mi) * m_i) + (1.0 + delta) * (share_i * pool);
  const double next_j =
      lambda * m_j + (1.0 - lambda) * ((1.0 - rho_j_eff) * m_j) + (1.0 + delta) * (share_j * pool);
  return {next_i, next_j};
}

}  // namespace wexsim
