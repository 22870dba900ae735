#include "wexsim/redistribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wexsim {

std::vector<double> redistribute(std::span<const double> m, std::span<const double> rho_m,
                                 std::span<const double> payout_weights, double xi) {
  const std::size_t n = m.size();
  if (rho_m.size() != n || payout_weights.size() != n) {
    throw std::invalid_argument("redistribute: array lengths differ");
  }
  if (n == 0) {
    throw std::invalid_argument("redistribute: empty population");
  }
  if (!std::isfinite(xi) || xi < 0.0 || xi > 1.0) {
    throw std::invalid_argument("xi must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(m[k]) || m[k] < 0.0) {
      throw std::invalid_argument("wealth entries must be finite and nonnegative");
    }
    if (!(rho_m[k] > 0.0) || !(rho_m[k] <= 1.0)) {
      throw std::invalid_argument("rho_m entries must lie in (0, 1]");
    }
    if (!(payout_weights[k] > 0.0) || !std::isfinite(payout_weights[k])) {
      throw std::invalid_argument("payout weights must be positive and finite");
    }
  }

  // Sequential sums in index order; the summation order is part of the
  // replay contract.
  double weight_sum = 0.0;
  double pot = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weight_sum += payout_weights[k];
    pot += rho_m[k] * m[k];
  }

  std::vector<double> next(n);
  for (std::size_t k = 0; k < n; ++k) {
    next[k] = (1.0 - xi * rho_m[k]) * m[k] + xi * (payout_weights[k] / weight_sum) * pot;
  }
  return next;
}

std::vector<double> redistribute(std::span<const double> m, const FactorTable& table,
                                 FactorKey key, double xi) {
  return redistribute(m, table.rho_m(), table.by_key(key), xi);
}

}  // namespace wexsim
