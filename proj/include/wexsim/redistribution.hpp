#pragma once

#include <span>
#include <vector>

#include "wexsim/factors.hpp"

namespace wexsim {

// Population-wide redistribution: every agent contributes xi*rho_m[i]*m[i]
// to a common pot, and the pot is paid back in proportion to the payout
// weights. Collection is always responsibility-weighted; only the payout key
// varies, so a vulnerability-keyed payout is deliberately imbalanced against
// the collection side.
//
// Returns a fresh array (the payout depends on the whole pre-transfer
// state). Total wealth is conserved up to accumulation error; payout weights
// are normalized internally.
std::vector<double> redistribute(std::span<const double> m,
                                 std::span<const double> rho_m,
                                 std::span<const double> payout_weights,
                                 double xi);

std::vector<double> redistribute(std::span<const double> m, const FactorTable& table,
                                 FactorKey key, double xi);

}  // namespace wexsim
