#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flatkit/constants.hpp"
#include "flatkit/harness.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/polynomial.hpp"

using namespace flatkit;

TEST_CASE("dirichlet asymptotics at p = 2 are exact") {
  const auto table = dirichlet_asymptotics(2.0, {16, 64, 256, 1024});
  for (const auto& row : table.rows) {
    CHECK(row[1] == 1.0);  // ratio, exactly
    CHECK(row[2] == 0.0);  // deviation, exactly
  }
  CHECK(!table.fit.has_value());
}

TEST_CASE("dirichlet asymptotics at p = 4") {
  const auto table =
      dirichlet_asymptotics(4.0, {256, 512, 1024, 2048, 4096, 8192});
  // ||D_N||_4^4 = (2N^3 + N)/3, so the ratio is 2/3 + 1/(3N^2)
  for (const auto& row : table.rows) {
    const double n = row[0];
    CHECK(row[1] == doctest::Approx(2.0 / 3.0 + 1.0 / (3.0 * n * n)).epsilon(1e-12));
    CHECK(row[2] == doctest::Approx(1.0 / (3.0 * n * n)).epsilon(1e-6));
  }
  REQUIRE(table.fit.has_value());
  CHECK(table.fit->slope == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(table.fit->predicted == -2.0);
}

TEST_CASE("dirichlet asymptotics at p = 3 stay in the log regime") {
  const auto table = dirichlet_asymptotics(3.0, {256, 512, 1024, 2048});
  for (const auto& row : table.rows) {
    const double n = row[0];
    const double scaled = row[2] * n * n / std::log(n);
    CHECK(scaled > 0.05);
    CHECK(scaled < 0.5);
  }
}

TEST_CASE("dirichlet asymptotics validation") {
  CHECK_THROWS_AS(dirichlet_asymptotics(1.0, {16, 32, 64, 128}), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_asymptotics(4.0, {16, 32, 64}), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_asymptotics(4.0, {16, 32, 32, 64}), std::invalid_argument);
}

TEST_CASE("density growth for the all-ones family") {
  const auto table = density_growth(1.0, 4.0, {128, 256, 512, 1024, 2048, 4096}, 1, 7);
  for (const auto& row : table.rows) {
    const double q = row[0];
    // ||D_q/sqrt(q)||_4^4 = (2q^3 + q)/(3q^2)
    CHECK(row[1] == doctest::Approx((2.0 * q * q * q + q) / (3.0 * q * q)).epsilon(1e-12));
  }
  REQUIRE(table.fit.has_value());
  CHECK(table.fit->predicted == doctest::Approx(1.0));
  CHECK(std::abs(table.fit->slope - 1.0) < 0.05);
}

TEST_CASE("density growth for random supports") {
  const auto table = density_growth(0.5, 4.0, {128, 256, 512, 1024, 2048}, 6, 11);
  REQUIRE(table.fit.has_value());
  CHECK(std::abs(table.fit->slope - 1.0) < 0.15);
  CHECK(table.fit->predicted == doctest::Approx(1.0));
}

TEST_CASE("density growth validation") {
  CHECK_THROWS_AS(density_growth(0.5, 2.0, {16, 32, 64, 128}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(density_growth(1.5, 4.0, {16, 32, 64, 128}, 2, 1), std::invalid_argument);
  // q so small and d so thin that every draw is all-zero
  CHECK_THROWS_AS(density_growth(1e-12, 4.0, {2, 4, 8, 16}, 1, 1), std::invalid_argument);
}

TEST_CASE("single-node bound records") {
  SUBCASE("all-ones support diverges") {
    const auto ones = BinarySequence(std::vector<int>(64, 1));
    const auto record = zero_density_bound(ones, 4.0);
    CHECK(record.density == 1.0);
    CHECK(record.single_node_term == doctest::Approx(64.0).epsilon(1e-12));
    CHECK(record.norm_power ==
          doctest::Approx((2.0 * 64.0 * 64.0 * 64.0 + 64.0) / (3.0 * 64.0 * 64.0)).epsilon(1e-12));
    CHECK(record.norm_power >= record.single_node_term / 64.0);
  }
  SUBCASE("sqrt-size support shrinks like 1/q") {
    const std::int64_t q = 256;
    std::vector<int> bits(static_cast<std::size_t>(q), 0);
    for (int j = 0; j < 16; ++j) bits[static_cast<std::size_t>(j)] = 1;
    const auto record = zero_density_bound(BinarySequence(bits), 4.0);
    CHECK(record.single_node_term == doctest::Approx(1.0 / 256.0).epsilon(1e-12));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(zero_density_bound(BinarySequence(std::vector<int>{0, 0}), 4.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(zero_density_bound(BinarySequence(std::vector<int>{1, 0}), 2.0),
                    std::invalid_argument);
  }
}

TEST_CASE("witness panel for the all-plus family") {
  FamilySpec spec;
  spec.kind = FamilyKind::dirichlet;
  const auto panel = flatness_witness(spec, 2, 0.05, {64, 256, 1024});
  CHECK(panel.concentration_lower == 0.495);
  CHECK(panel.concentration_upper == 0.5);
  REQUIRE(panel.rows.size() == 3);
  for (const auto& row : panel.rows) {
    CHECK(row.density == 1.0);
    CHECK(row.norm_ratio == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(row.decomposition_gap == 0.0);
    CHECK(row.tail_value <= row.tail_bound_printed);
    CHECK(row.tail_value <= row.tail_bound_direct * (1.0 + 1e-3));
  }
  // mass piles up near z = 1 and the deviation grows with q
  CHECK(panel.rows.back().arc_mass > 0.95);
  CHECK(panel.rows.back().arc_mass >= panel.rows.front().arc_mass - 1e-6);
  CHECK(panel.rows.back().deviation > panel.rows.front().deviation);
}

TEST_CASE("witness panel for the rudin-shapiro family") {
  FamilySpec spec;
  spec.kind = FamilyKind::rudin_shapiro;
  const auto panel = flatness_witness(spec, 2, 0.05, {6, 8, 10});
  for (std::size_t i = 0; i < panel.rows.size(); ++i) {
    const auto& row = panel.rows[i];
    const int k = static_cast<int>(std::vector<std::int64_t>{6, 8, 10}[i]);
    const auto s = rudin_shapiro(k);
    std::int64_t plus = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] > 0) ++plus;
    CHECK(row.density == doctest::Approx(static_cast<double>(plus) / s.size()).epsilon(1e-15));
    CHECK(std::abs(row.density - 0.5) < std::pow(2.0, -k / 2.0));
    CHECK(row.deviation > 0.05);
    CHECK(std::isfinite(row.newman_ratio));
    CHECK(row.decomposition_gap == 0.0);
  }
  // the deviation settles at a strictly positive level
  CHECK(std::abs(panel.rows[2].deviation - panel.rows[1].deviation) < 0.02);
}

TEST_CASE("witness panel for random signs") {
  FamilySpec spec;
  spec.kind = FamilyKind::random_sign;
  spec.seed = 5;
  const auto panel = flatness_witness(spec, 2, 0.05, {128, 512});
  for (const auto& row : panel.rows) {
    CHECK(row.arc_mass >= 0.0);
    CHECK(row.arc_mass <= 1.0);
    CHECK(row.norm_ratio > 0.0);
    CHECK(row.norm_ratio < 2.5);
    CHECK(std::abs(row.density - 0.5) < 0.2);
    CHECK(row.decomposition_gap == 0.0);
  }
}

TEST_CASE("witness panel validation") {
  FamilySpec spec;
  spec.kind = FamilyKind::dirichlet;
  CHECK_THROWS_AS(flatness_witness(spec, 1, 0.05, {16}), std::invalid_argument);
  CHECK_THROWS_AS(flatness_witness(spec, 2, 0.3, {16}), std::invalid_argument);
  CHECK_THROWS_AS(flatness_witness(spec, 2, 0.05, {}), std::invalid_argument);
}

TEST_CASE("tail bound sweep holds everywhere") {
  const auto rows = dirichlet_tail_sweep({16, 64, 256, 1024}, {4.0, 6.0}, {0.05, 0.1, 0.2});
  CHECK(rows.size() == 4 * 2 * 3);
  for (const auto& row : rows) {
    CHECK(row.holds);
    CHECK(row.tail_value <= row.bound_printed);
    CHECK(row.tail_value <= row.bound_direct * (1.0 + 1e-3));
    CHECK(row.bound_direct < row.bound_printed);  // the printed bound is the weak one
  }
}
