#include "wexsim/factors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace wexsim {

const char* to_string(FactorKey key) {
  switch (key) {
    case FactorKey::M:
      return "M";
    case FactorKey::R:
      return "R";
    case FactorKey::MR:
      return "MR";
  }
  throw std::logic_error("unreachable FactorKey");
}

FactorKey factor_key_from_string(std::string_view text) {
  if (text == "M") return FactorKey::M;
  if (text == "R") return FactorKey::R;
  if (text == "MR") return FactorKey::MR;
  throw std::invalid_argument("unknown factor key '" + std::string(text) + "' (expected M, R, or MR)");
}

FactorTable::FactorTable(std::vector<double> rho_m, std::vector<double> rho_r, std::vector<double> rho)
    : rho_m_(std::move(rho_m)), rho_r_(std::move(rho_r)), rho_(std::move(rho)) {}

FactorTable FactorTable::linear_profile(int n_agents) {
  if (n_agents < 2) {
    throw std::invalid_argument("n_agents must be at least 2, got " + std::to_string(n_agents));
  }
  const auto n = static_cast<double>(n_agents);
  std::vector<double> rho_m(n_agents), rho_r(n_agents), rho(n_agents);
  for (int i = 1; i <= n_agents; ++i) {
    // i/N first so that the top agent lands exactly on 1.0 and 0.8.
    const double u = static_cast<double>(i) / n;
    rho_m[i - 1] = 0.2 + 0.8 * u;
    rho_r[i - 1] = 1.0 - 0.2 * u;
    rho[i - 1] = rho_m[i - 1] * rho_r[i - 1];
  }
  return FactorTable(std::move(rho_m), std::move(rho_r), std::move(rho));
}

FactorTable FactorTable::from_arrays(std::vector<double> rho_m, std::vector<double> rho_r) {
  if (rho_m.size() != rho_r.size()) {
    throw std::invalid_argument("factor arrays must have equal length");
  }
  if (rho_m.size() < 2) {
    throw std::invalid_argument("factor arrays need at least 2 agents");
  }
  for (std::size_t k = 0; k < rho_m.size(); ++k) {
    if (!(rho_m[k] > 0.0) || !(rho_m[k] <= 1.0) || !(rho_r[k] > 0.0) || !(rho_r[k] <= 1.0)) {
      throw std::invalid_argument("factor entries must lie in (0, 1]");
    }
  }
  std::vector<double> rho(rho_m.size());
  for (std::size_t k = 0; k < rho_m.size(); ++k) rho[k] = rho_m[k] * rho_r[k];
  return FactorTable(std::move(rho_m), std::move(rho_r), std::move(rho));
}

namespace {

std::size_t checked_index(int i, int n) {
  if (i < 1 || i > n) {
    throw std::out_of_range("agent index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

double FactorTable::rho_m_at(int i) const { return rho_m_[checked_index(i, n_agents())]; }
double FactorTable::rho_r_at(int i) const { return rho_r_[checked_index(i, n_agents())]; }
double FactorTable::rho_at(int i) const { return rho_[checked_index(i, n_agents())]; }

std::span<const double> FactorTable::by_key(FactorKey key) const {
  switch (key) {
    case FactorKey::M:
      return rho_m();
    case FactorKey::R:
      return rho_r();
    case FactorKey::MR:
      return rho();
  }
  throw std::logic_error("unreachable FactorKey");
}

FactorTable compute_factors(int n_agents) { return FactorTable::linear_profile(n_agents); }

double factor_weight(const FactorTable& table, FactorKey key, int i) {
  switch (key) {
    case FactorKey::M:
      return table.rho_m_at(i);
    case FactorKey::R:
      return table.rho_r_at(i);
    case FactorKey::MR:
      return table.rho_at(i);
  }
  throw std::logic_error("unreachable FactorKey");
}

}  // namespace wexsim
