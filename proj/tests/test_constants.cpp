#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flatkit/constants.hpp"
#include "oracles.hpp"

using namespace flatkit;

constexpr double kPi = std::numbers::pi;

TEST_CASE("sinc-power constant at the analytic anchors") {
  CHECK(std::abs(delta_p(2.0) - 1.0) < 1e-10);
  CHECK(std::abs(delta_p(4.0) - 2.0 / 3.0) < 1e-8);
  CHECK_THROWS_AS(delta_p(1.0), std::invalid_argument);
  CHECK_THROWS_AS(delta_p(0.5), std::invalid_argument);
}

TEST_CASE("sinc-power constant against an independent quadrature") {
  CHECK(std::abs(delta_p(3.0) - oracles::sinc_power_integral_oracle(3, 100000)) < 1e-8);
  CHECK(std::abs(delta_p(4.0) - oracles::sinc_power_integral_oracle(4, 20000)) < 1e-10);
}

TEST_CASE("closed forms for even exponents") {
  CHECK(delta_even_exact(2) == 1.0);
  CHECK(delta_even_exact(4) == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
  CHECK(delta_even_exact(6) == doctest::Approx(11.0 / 20.0).epsilon(1e-15));
  CHECK(delta_even_exact(8) == doctest::Approx(151.0 / 315.0).epsilon(1e-15));
  CHECK_THROWS_AS(delta_even_exact(3), std::invalid_argument);
  // quadrature should land on the same values
  for (int n : {2, 4, 6, 8}) CHECK(std::abs(delta_p(n) - delta_even_exact(n)) < 1e-10);
}

TEST_CASE("sinc-power constant decreases in p") {
  double previous = 2.0;
  for (int i = 0; i < 25; ++i) {
    const double p = 2.0 + 6.0 * i / 24.0;
    const double value = delta_p(p, 1e-9);
    CHECK(value > 0.0);
    CHECK(value < previous);
    previous = value;
  }
}

TEST_CASE("remainder growth classes") {
  CHECK(remainder_regime(4.0) == "N^(p-3)");
  CHECK(remainder_regime(3.0) == "ln N");
  CHECK(remainder_regime(2.0) == "constant");
  CHECK(remainder_regime(1.0) == "constant");
  CHECK(remainder_regime(3.5) == "N^(p-3)");
  CHECK_THROWS_AS(remainder_regime(0.5), std::invalid_argument);
}

TEST_CASE("conjugate-function constant") {
  CHECK(pichorides(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pichorides(4.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pichorides(1.5) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  // both branches meet at alpha = 2
  CHECK(pichorides(2.0 - 1e-9) == doctest::Approx(pichorides(2.0 + 1e-9)).epsilon(1e-7));
  CHECK_THROWS_AS(pichorides(1.0), std::invalid_argument);
  CHECK_THROWS_AS(pichorides(0.5), std::invalid_argument);
}

TEST_CASE("supremum constant A and A'") {
  const auto& ac = a_constants();
  CHECK(std::abs(ac.a - (kPi + 1.0)) < 1e-9);
  CHECK(ac.a_prime == doctest::Approx(2.0 * (kPi + 1.0) + 1.0).epsilon(1e-9));
  CHECK(ac.note.find("boundary") != std::string::npos);

  // independent dense scan over (1, 64]
  auto f = [](double alpha) { return std::pow(kPi * alpha + 1.0, 1.0 / alpha); };
  double scan_best = 0.0;
  for (double alpha = 1.000001; alpha <= 64.0; alpha *= 1.01)
    scan_best = std::max(scan_best, f(alpha));
  for (double eps = 1e-2; eps >= 1e-12; eps *= 0.1) scan_best = std::max(scan_best, f(1.0 + eps));
  CHECK(std::abs(ac.a - scan_best) < 1e-9);

  // the map decreases away from the boundary
  CHECK(f(2.0) == doctest::Approx(std::sqrt(2.0 * kPi + 1.0)).epsilon(1e-15));
  CHECK(f(2.0) < f(1.01));
}

TEST_CASE("level-two concentration maximizer") {
  const auto& c2 = c2_maximizer();
  CHECK(std::abs(std::tan(c2.x_star) - 2.0 * c2.x_star) < 1e-8);
  CHECK(c2.value * kPi * c2.x_star == doctest::Approx(std::sin(c2.x_star) * std::sin(c2.x_star))
                                          .epsilon(1e-14));
  // 10^7-point scan of sin(x)^2/(pi x) over (0, pi)
  double best = 0.0;
  const int n = 10'000'000;
  for (int i = 1; i <= n; ++i) {
    const double x = kPi * i / (n + 1.0);
    best = std::max(best, std::sin(x) * std::sin(x) / (kPi * x));
  }
  CHECK(std::abs(c2.value - best) < 1e-10);
}

TEST_CASE("even concentration level intervals") {
  CHECK(even_concentration_bounds(4) == std::pair{0.495, 0.5});
  CHECK(even_concentration_bounds(6) == std::pair{0.483, 0.5});
  CHECK(even_concentration_bounds(10) == std::pair{0.483, 0.5});
  CHECK_THROWS_AS(even_concentration_bounds(2), std::invalid_argument);
  CHECK_THROWS_AS(even_concentration_bounds(5), std::invalid_argument);
  CHECK_THROWS_AS(even_concentration_bounds(3), std::invalid_argument);
}

TEST_CASE("assembled constants report") {
  const auto report = constants_report(4.0, 4.0);
  CHECK(report.delta_p > 0.0);
  CHECK(report.a > 0.0);
  CHECK(report.a_prime > report.a);
  CHECK(report.a_prime_alpha == doctest::Approx(2.0 * report.pichorides_a_alpha + 1.0));
  CHECK(report.even_bounds_4.first < report.even_bounds_4.second);
  CHECK(report.even_bounds_6_plus.first < report.even_bounds_6_plus.second);
  CHECK(std::isfinite(report.c2.value));
  CHECK(report.c2.value > 0.0);
}
