#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace wexsim {

// Selects which per-agent factor acts as a distribution or redistribution
// weight: responsibility (M), vulnerability (R), or their product (MR).
enum class FactorKey { M, R, MR };

const char* to_string(FactorKey key);
FactorKey factor_key_from_string(std::string_view text);

// Per-agent moral-responsibility and risk-vulnerability factors.
//
// Agents are addressed 1-based through the *_at accessors; the raw spans are
// 0-based storage for bulk loops. Immutable after construction, so one table
// can be shared across concurrent runs.
class FactorTable {
 public:
  // rho_m[i] = 0.2 + 0.8*(i/N), rho_r[i] = 1 - 0.2*(i/N), rho = rho_m*rho_r.
  static FactorTable linear_profile(int n_agents);

  // Arbitrary factor arrays (entries must lie in (0, 1]); rho is derived.
  static FactorTable from_arrays(std::vector<double> rho_m, std::vector<double> rho_r);

  int n_agents() const { return static_cast<int>(rho_m_.size()); }

  // 1-based, bounds-checked.
  double rho_m_at(int i) const;
  double rho_r_at(int i) const;
  double rho_at(int i) const;

  std::span<const double> rho_m() const { return rho_m_; }
  std::span<const double> rho_r() const { return rho_r_; }
  std::span<const double> rho() const { return rho_; }

  std::span<const double> by_key(FactorKey key) const;

 private:
  FactorTable(std::vector<double> rho_m, std::vector<double> rho_r, std::vector<double> rho);

  std::vector<double> rho_m_;
  std::vector<double> rho_r_;
  std::vector<double> rho_;
};

// Factor table for n_agents on the linear responsibility/vulnerability
// profile. Deterministic; rejects n_agents < 2 (pairwise exchange needs two).
FactorTable compute_factors(int n_agents);

// Uniform accessor over the M/R/MR variants, 1-based agent index.
double factor_weight(const FactorTable& table, FactorKey key, int i);

}  // namespace wexsim
