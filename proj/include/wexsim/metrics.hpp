#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wexsim {

struct LorenzPoint {
  double population_share;
  double wealth_share;
};

struct Histogram {
  double bin_width = 0.0;
  std::vector<double> bin_edges;   // n_bins + 1, ascending multiples of bin_width
  std::vector<std::int64_t> counts;
};

struct SnapshotStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  double band_fraction = 0.0;  // fraction of agents with band_lo <= m <= band_hi
};

// Gini index of a nonnegative wealth array with positive total:
// sort ascending to mu_1..mu_N, then
//   g = 2*sum(k*mu_k) / (N*sum(mu_k)) - (N+1)/N.
// g = 0 for an equal distribution and (N-1)/N when one agent holds
// everything. Rejects all-zero input.
double gini(std::span<const double> m);

// Lorenz curve points (k/N, cumulative wealth share), k = 0..N. Starts at
// (0,0), ends at (1,1), lies on or below the diagonal.
std::vector<LorenzPoint> lorenz(std::span<const double> m);

// Counts into half-open bins [k*w, (k+1)*w) covering [0, max(m)]; a value on
// the top edge lands in the final bin.
Histogram histogram(std::span<const double> m, double bin_width);

SnapshotStats snapshot_stats(std::span<const double> m, double band_lo, double band_hi);

}  // namespace wexsim
