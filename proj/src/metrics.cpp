#include "wexsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wexsim {

namespace {

std::vector<double> sorted_nonnegative(std::span<const double> m, const char* caller) {
  if (m.empty()) {
    throw std::invalid_argument(std::string(caller) + ": empty wealth array");
  }
  double total = 0.0;
  for (double v : m) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(caller) + ": wealth must be finite and nonnegative");
    }
    total += v;
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument(std::string(caller) + ": total wealth must be positive");
  }
  std::vector<double> mu(m.begin(), m.end());
  std::stable_sort(mu.begin(), mu.end());
  return mu;
}

}  // namespace

double gini(std::span<const double> m) {
  const std::vector<double> mu = sorted_nonnegative(m, "gini");
  const auto n = static_cast<double>(mu.size());
  double sum = 0.0;
  double rank_weighted = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    sum += mu[k];
    rank_weighted += static_cast<double>(k + 1) * mu[k];
  }
  return 2.0 * rank_weighted / (n * sum) - (n + 1.0) / n;
}

std::vector<LorenzPoint> lorenz(std::span<const double> m) {
  const std::vector<double> mu = sorted_nonnegative(m, "lorenz");
  const auto n = static_cast<double>(mu.size());

  double total = 0.0;
  for (double v : mu) total += v;

  std::vector<LorenzPoint> points;
  points.reserve(mu.size() + 1);
  points.push_back({0.0, 0.0});
  double cumulative = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    cumulative += mu[k];
    points.push_back({static_cast<double>(k + 1) / n, cumulative / total});
  }
  return points;
}

Histogram histogram(std::span<const double> m, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::invalid_argument("histogram: bin_width must be positive and finite");
  }
  if (m.empty()) {
    throw std::invalid_argument("histogram: empty wealth array");
  }

  std::int64_t max_bin = 0;
  for (double v : m) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("histogram: wealth must be finite and nonnegative");
    }
    max_bin = std::max(max_bin, static_cast<std::int64_t>(std::floor(v / bin_width)));
  }

  Histogram h;
  h.bin_width = bin_width;
  h.counts.assign(static_cast<std::size_t>(max_bin) + 1, 0);
  for (double v : m) {
    ++h.counts[static_cast<std::size_t>(std::floor(v / bin_width))];
  }
  h.bin_edges.resize(h.counts.size() + 1);
  for (std::size_t k = 0; k < h.bin_edges.size(); ++k) {
    h.bin_edges[k] = static_cast<double>(k) * bin_width;
  }
  return h;
}

SnapshotStats snapshot_stats(std::span<const double> m, double band_lo, double band_hi) {
  if (m.empty()) {
    throw std::invalid_argument("snapshot_stats: empty wealth array");
  }
  if (!std::isfinite(band_lo) || !std::isfinite(band_hi) || band_lo > band_hi) {
    throw std::invalid_argument("snapshot_stats: invalid band");
  }

  SnapshotStats s;
  s.band_lo = band_lo;
  s.band_hi = band_hi;
  s.min = m[0];
  s.max = m[0];
  double total = 0.0;
  std::int64_t in_band = 0;
  for (double v : m) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("snapshot_stats: wealth must be finite");
    }
    total += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    if (v >= band_lo && v <= band_hi) ++in_band;
  }
  s.mean = total / static_cast<double>(m.size());
  s.band_fraction = static_cast<double>(in_band) / static_cast<double>(m.size());
  return s;
}

}  // namespace wexsim
