#pragma once

#include <cmath>
#include <cstddef>
#include <span>

// Test-only reference implementations, kept independent of the library's
// computation paths.

// Gini as the mean absolute difference over all ordered pairs, divided by
// twice the mean. O(N^2); use only on small arrays.
inline double gini_pairwise(std::span<const double> m) {
  const std::size_t n = m.size();
  double total = 0.0;
  for (double v : m) total += v;
  const double mean = total / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc += std::abs(m[i] - m[j]);
    }
  }
  return acc / (2.0 * static_cast<double>(n) * static_cast<double>(n) * mean);
}
