#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "wexsim/metrics.hpp"
#include "wexsim/rng.hpp"

using namespace wexsim;

TEST_CASE("gini worked values") {
  CHECK(gini(std::vector<double>{1.0, 1.0, 1.0, 1.0}) == 0.0);
  CHECK(gini(std::vector<double>{0.0, 1.0}) == 0.5);
  CHECK(gini(std::vector<double>{0.0, 0.0, 0.0, 4.0}) == 0.75);  // (N-1)/N
}

TEST_CASE("gini is scale and permutation invariant") {
  Rng rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_index(64));
    std::vector<double> m(n);
    for (double& v : m) v = rng.uniform(0.0, 10.0);
    m[rng.uniform_index(m.size())] += 1.0;  // guarantee a positive total

    const double g = gini(m);
    CHECK(g >= 0.0);
    CHECK(g <= (n - 1.0) / n + 1e-15);

    const double c = std::exp(rng.uniform(-8.0, 8.0));
    std::vector<double> scaled = m;
    for (double& v : scaled) v *= c;
    CHECK(std::abs(gini(scaled) - g) <= 1e-12);

    std::vector<double> shuffled = m;
    for (std::size_t k = shuffled.size(); k > 1; --k) {
      std::swap(shuffled[k - 1], shuffled[rng.uniform_index(k)]);
    }
    CHECK(gini(shuffled) == g);
  }
}

TEST_CASE("gini agrees with the pairwise oracle") {
  Rng rng(43);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_index(64));
    std::vector<double> m(n);
    for (double& v : m) v = rng.next_double() < 0.15 ? 0.0 : rng.uniform(0.0, 5.0);
    m[rng.uniform_index(m.size())] += 0.5;
    CHECK(std::abs(gini(m) - gini_pairwise(m)) <= 1e-10);
  }
}

TEST_CASE("lorenz worked values") {
  const auto equal = lorenz(std::vector<double>{1.0, 1.0});
  REQUIRE(equal.size() == 3);
  CHECK(equal[0].population_share == 0.0);
  CHECK(equal[0].wealth_share == 0.0);
  CHECK(equal[1].population_share == 0.5);
  CHECK(equal[1].wealth_share == 0.5);
  CHECK(equal[2].population_share == 1.0);
  CHECK(equal[2].wealth_share == 1.0);

  const auto skew = lorenz(std::vector<double>{0.0, 1.0});
  CHECK(skew[1].wealth_share == 0.0);
  CHECK(skew[2].wealth_share == 1.0);

  const auto pair = lorenz(std::vector<double>{1.0, 3.0});
  CHECK(pair[1].wealth_share == 0.25);
}

TEST_CASE("lorenz curve shape and consistency with gini") {
  Rng rng(47);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_index(64));
    std::vector<double> m(n);
    for (double& v : m) v = rng.uniform(0.0, 3.0);
    m[rng.uniform_index(m.size())] += 0.25;

    const auto points = lorenz(m);
    REQUIRE(points.size() == m.size() + 1);
    CHECK(points.front().population_share == 0.0);
    CHECK(points.front().wealth_share == 0.0);
    CHECK(points.back().population_share == 1.0);
    CHECK(points.back().wealth_share == 1.0);
    for (std::size_t k = 1; k < points.size(); ++k) {
      CHECK(points[k].population_share >= points[k - 1].population_share);
      CHECK(points[k].wealth_share >= points[k - 1].wealth_share - 1e-15);
      CHECK(points[k].wealth_share <= points[k].population_share + 1e-12);
    }

    // trapezoidal area under the curve reproduces the sort-based index
    double area = 0.0;
    for (std::size_t k = 1; k < points.size(); ++k) {
      area += 0.5 * (points[k].wealth_share + points[k - 1].wealth_share) /
              static_cast<double>(m.size());
    }
    CHECK(std::abs((1.0 - 2.0 * area) - gini(m)) <= 1e-10);
  }
}

TEST_CASE("histogram worked values") {
  const Histogram h = histogram(std::vector<double>{0.1, 0.1, 1.9}, 1.0);
  REQUIRE(h.counts.size() == 2);
  CHECK(h.bin_edges == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(h.counts == std::vector<std::int64_t>{2, 1});

  const Histogram half = histogram(std::vector<double>{1.0, 1.0, 1.0}, 0.5);
  std::int64_t total = 0;
  for (std::int64_t c : half.counts) total += c;
  CHECK(total == 3);

  // a value on the top edge lands in the final half-open bin
  const Histogram edge = histogram(std::vector<double>{2.0}, 1.0);
  REQUIRE(edge.counts.size() == 3);
  CHECK(edge.counts == std::vector<std::int64_t>{0, 0, 1});
  CHECK(edge.bin_edges.back() == 3.0);
}

TEST_CASE("histogram counts every agent once") {
  Rng rng(53);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng.uniform_index(500));
    std::vector<double> m(n);
    for (double& v : m) v = rng.uniform(0.0, 20.0);
    const double width = rng.uniform(0.01, 2.0);
    const Histogram h = histogram(m, width);
    std::int64_t total = 0;
    for (std::int64_t c : h.counts) total += c;
    CHECK(total == n);
    REQUIRE(h.bin_edges.size() == h.counts.size() + 1);
    CHECK(std::is_sorted(h.bin_edges.begin(), h.bin_edges.end()));
    CHECK(h.bin_edges.back() > *std::max_element(m.begin(), m.end()));
  }
}

TEST_CASE("snapshot stats worked values") {
  const SnapshotStats all_in = snapshot_stats(std::vector<double>{1.0, 1.0, 1.0}, 0.5, 1.5);
  CHECK(all_in.band_fraction == 1.0);

  const SnapshotStats third = snapshot_stats(std::vector<double>{0.1, 1.0, 10.0}, 0.5, 1.5);
  CHECK(third.band_fraction == doctest::Approx(1.0 / 3.0));
  CHECK(third.min == 0.1);
  CHECK(third.max == 10.0);

  const SnapshotStats single = snapshot_stats(std::vector<double>{2.0}, 0.5, 1.5);
  CHECK(single.mean == 2.0);
  CHECK(single.min == 2.0);
  CHECK(single.max == 2.0);
  CHECK(single.band_fraction == 0.0);
}

TEST_CASE("band is closed at both ends") {
  const SnapshotStats s = snapshot_stats(std::vector<double>{0.5, 1.5, 1.6}, 0.5, 1.5);
  CHECK(s.band_fraction == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("metrics error paths") {
  const double nan = std::numeric_limits<double>::quiet_NaN();

  CHECK_THROWS_AS(gini(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(gini(std::vector<double>{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gini(std::vector<double>{-1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(gini(std::vector<double>{nan, 1.0}), std::invalid_argument);

  CHECK_THROWS_AS(lorenz(std::vector<double>{0.0}), std::invalid_argument);

  CHECK_THROWS_AS(histogram(std::vector<double>{1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram(std::vector<double>{1.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram(std::vector<double>{nan}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 1.0), std::invalid_argument);

  CHECK_THROWS_AS(snapshot_stats(std::vector<double>{}, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(snapshot_stats(std::vector<double>{1.0}, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(snapshot_stats(std::vector<double>{nan}, 0.0, 1.0), std::invalid_argument);
}
