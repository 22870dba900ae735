#include <doctest.h>

#include <stdexcept>

#include "wexsim/factors.hpp"

using namespace wexsim;

TEST_CASE("factor endpoints land exactly on 1.0 and 0.8") {
  const FactorTable table = compute_factors(1000);
  CHECK(table.rho_m_at(1000) == 1.0);
  CHECK(table.rho_r_at(1000) == 0.8);
  CHECK(table.rho_at(1000) == 0.8);
}

TEST_CASE("interior factors match direct evaluation") {
  const FactorTable table = compute_factors(1000);
  CHECK(table.rho_m_at(500) == 0.2 + 0.8 * (500.0 / 1000.0));
  CHECK(table.rho_r_at(500) == 1.0 - 0.2 * (500.0 / 1000.0));
  CHECK(table.rho_at(500) == table.rho_m_at(500) * table.rho_r_at(500));
  CHECK(table.rho_m_at(500) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(table.rho_r_at(500) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(table.rho_at(500) == doctest::Approx(0.54).epsilon(1e-12));

  const FactorTable tiny = compute_factors(2);
  CHECK(tiny.rho_m_at(1) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(tiny.rho_r_at(1) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(tiny.rho_at(1) == doctest::Approx(0.54).epsilon(1e-12));
}

TEST_CASE("factor monotonicity and bounds") {
  for (int n : {2, 3, 10, 1000, 4097}) {
    CAPTURE(n);
    const FactorTable table = compute_factors(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(table.rho_m_at(i) > 0.2);
      CHECK(table.rho_m_at(i) <= 1.0);
      CHECK(table.rho_r_at(i) >= 0.8);
      CHECK(table.rho_r_at(i) < 1.0);
      CHECK(table.rho_at(i) > 0.18);
      CHECK(table.rho_at(i) <= 0.8);
      if (i > 1) {
        CHECK(table.rho_m_at(i) > table.rho_m_at(i - 1));
        CHECK(table.rho_r_at(i) < table.rho_r_at(i - 1));
      }
    }
  }
}

TEST_CASE("factor tables are deterministic") {
  const FactorTable a = compute_factors(777);
  const FactorTable b = compute_factors(777);
  REQUIRE(a.n_agents() == b.n_agents());
  for (int i = 1; i <= a.n_agents(); ++i) {
    CHECK(a.rho_m_at(i) == b.rho_m_at(i));
    CHECK(a.rho_r_at(i) == b.rho_r_at(i));
    CHECK(a.rho_at(i) == b.rho_at(i));
  }
}

TEST_CASE("factor_weight selects the keyed array") {
  const FactorTable table = compute_factors(1000);
  CHECK(factor_weight(table, FactorKey::M, 1000) == 1.0);
  CHECK(factor_weight(table, FactorKey::R, 1000) == 0.8);
  CHECK(factor_weight(table, FactorKey::MR, 500) == table.rho_at(500));
}

TEST_CASE("factor error paths") {
  CHECK_THROWS_AS(compute_factors(1), std::invalid_argument);
  CHECK_THROWS_AS(compute_factors(0), std::invalid_argument);
  CHECK_THROWS_AS(compute_factors(-5), std::invalid_argument);

  const FactorTable table = compute_factors(10);
  CHECK_THROWS_AS(factor_weight(table, FactorKey::M, 0), std::out_of_range);
  CHECK_THROWS_AS(factor_weight(table, FactorKey::M, 11), std::out_of_range);

  CHECK_THROWS_AS(FactorTable::from_arrays({0.5, 0.5}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FactorTable::from_arrays({0.0, 0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(FactorTable::from_arrays({0.5, 1.5}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("custom factor arrays derive the product") {
  const FactorTable table = FactorTable::from_arrays({0.5, 1.0}, {1.0, 0.5});
  CHECK(table.rho_at(1) == 0.5);
  CHECK(table.rho_at(2) == 0.5);
  CHECK(table.by_key(FactorKey::R)[1] == 0.5);
}
