#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "flatkit/families.hpp"
#include "flatkit/grid.hpp"
#include "flatkit/polynomial.hpp"
#include "flatkit/rng.hpp"
#include "flatkit/sequences.hpp"
#include "oracles.hpp"

using namespace flatkit;

TEST_CASE("sign string parsing") {
  CHECK(SignSequence::from_string("+-+").entries() == std::vector<int>{1, -1, 1});
  CHECK(SignSequence::from_string("+").entries() == std::vector<int>{1});
  CHECK(SignSequence::from_string("++").entries() == std::vector<int>{1, 1});
  // U+2212 minus accepted as '-'
  CHECK(SignSequence::from_string("+\xE2\x88\x92+").entries() == std::vector<int>{1, -1, 1});
  CHECK_THROWS_AS(SignSequence::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(SignSequence::from_string("+x"), std::invalid_argument);
}

TEST_CASE("from_signs transcribes coefficients") {
  const auto p = from_signs(SignSequence::from_string("+-+"));
  CHECK(p.coeffs() == std::vector<std::int64_t>{1, -1, 1});
  const auto d2 = from_signs(SignSequence::from_string("++"));
  CHECK(d2 == dirichlet(2));
}

TEST_CASE("dirichlet kernel") {
  CHECK(dirichlet(3).coeffs() == std::vector<std::int64_t>{1, 1, 1});
  CHECK(dirichlet(1).coeffs() == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(dirichlet(0), std::invalid_argument);
  for (std::int64_t n : {1, 5, 17}) CHECK(dirichlet(n).evaluate({1.0, 0.0}).real() == doctest::Approx(n));
}

TEST_CASE("split reconstruction identities") {
  SUBCASE("two-term example") {
    const auto s = SignSequence::from_string("+-");
    const auto [eta, eta_prime] = split_littlewood(s);
    CHECK(eta.entries() == std::vector<int>{1, 0});
    CHECK(eta_prime.entries() == std::vector<int>{0, 1});
    const auto recon = linear_combination(2, from_bits(eta), -1, dirichlet(2));
    CHECK(recon.coeffs() == std::vector<std::int64_t>{1, -1});
  }
  SUBCASE("all-plus") {
    const auto s = SignSequence(std::vector<int>(7, +1));
    const auto [eta, eta_prime] = split_littlewood(s);
    CHECK(eta.support_size() == 7);
    CHECK(eta_prime.support_size() == 0);
  }
  SUBCASE("all-minus") {
    const auto s = SignSequence::from_string("---");
    const auto [eta, eta_prime] = split_littlewood(s);
    CHECK(eta.entries() == std::vector<int>{0, 0, 0});
    CHECK(eta_prime.entries() == std::vector<int>{1, 1, 1});
  }
  SUBCASE("reconstruction over random draws") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const auto q = 1 + static_cast<std::int64_t>(rng.next_below(60));
      const auto s = random_littlewood(q, rng.next());
      const auto [eta, eta_prime] = split_littlewood(s);
      for (std::size_t j = 0; j < s.size(); ++j) {
        CHECK(2 * eta[j] - 1 == s[j]);
        CHECK(1 - 2 * eta_prime[j] == s[j]);
        CHECK(eta[j] + eta_prime[j] == 1);
      }
      const auto recon = linear_combination(2, from_bits(eta), -1, dirichlet(q));
      CHECK(recon == from_signs(s));
      const auto recon2 = linear_combination(1, dirichlet(q), -2, from_bits(eta_prime));
      CHECK(recon2 == from_signs(s));
    }
  }
}

TEST_CASE("grid evaluation examples") {
  SUBCASE("D_3 on its own grid") {
    const auto samples = evaluate_on_grid(dirichlet(3), 3);
    CHECK(std::abs(samples.values[0] - std::complex<double>{3.0, 0.0}) < 1e-12);
    CHECK(std::abs(samples.values[1]) < 1e-12);
    CHECK(std::abs(samples.values[2]) < 1e-12);
  }
  SUBCASE("constant on m=4") {
    const auto samples = evaluate_on_grid(IntPolynomial({1}), 4);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(samples.values[j] - 1.0) < 1e-14);
  }
  SUBCASE("1 - z on m=2") {
    const auto samples = evaluate_on_grid(IntPolynomial({1, -1}), 2);
    CHECK(std::abs(samples.values[0]) < 1e-14);
    CHECK(std::abs(samples.values[1] - 2.0) < 1e-14);
  }
}

TEST_CASE("grid evaluation against the direct transform") {
  SplitMix64 rng(3);
  // Mix of smooth and large-prime grid sizes; the latter exercise the
  // chirp fallback.
  for (std::int64_t m : {1, 2, 7, 12, 16, 97, 241, 509}) {
    const auto q = 1 + static_cast<std::int64_t>(rng.next_below(40));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    const auto fast = evaluate_on_grid(poly, m);
    const auto direct = oracles::direct_dft(poly.coeffs(), m);
    for (std::int64_t j = 0; j < m; ++j)
      CHECK(std::abs(fast.values[j] - direct[static_cast<std::size_t>(j)]) <
            1e-9 * std::max<double>(1.0, static_cast<double>(q)));
  }
}

TEST_CASE("grid value at index zero is the coefficient sum") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = 1 + static_cast<std::int64_t>(rng.next_below(100));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    const auto m = 1 + static_cast<std::int64_t>(rng.next_below(300));
    const auto samples = evaluate_on_grid(poly, m);
    CHECK(samples.values[0].real() ==
          doctest::Approx(static_cast<double>(poly.sum())).epsilon(1e-12));
  }
}

TEST_CASE("parseval at roots of unity") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto q = 2 + static_cast<std::int64_t>(rng.next_below(120));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    const auto m = q + static_cast<std::int64_t>(rng.next_below(64));
    const auto samples = evaluate_on_grid(poly, m);
    const double mean = samples.values.abs2().mean();
    const double expect = big_to_double(sum_of_squared_coeffs(poly));
    CHECK(mean == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("autocorrelation examples and oracle") {
  CHECK(autocorrelation(dirichlet(3)) == std::vector<std::int64_t>{3, 2, 1});
  CHECK(autocorrelation(IntPolynomial({1, -1})) == std::vector<std::int64_t>{2, -1});
  // Rudin-Shapiro length 4
  CHECK(autocorrelation(IntPolynomial({1, 1, 1, -1})) == std::vector<std::int64_t>{4, 1, 0, -1});

  SplitMix64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto q = 1 + static_cast<std::int64_t>(rng.next_below(80));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    CHECK(autocorrelation(poly) == oracles::naive_autocorrelation(poly.coeffs()));
  }
}

TEST_CASE("power coefficients examples and oracle") {
  CHECK(power_coefficients(IntPolynomial({1, 1}), 2).coeffs() ==
        std::vector<BigInt>{1, 2, 1});
  CHECK(power_coefficients(dirichlet(3), 2).coeffs() == std::vector<BigInt>{1, 2, 3, 2, 1});
  CHECK(power_coefficients(IntPolynomial({1, -1, 1}), 3).coeffs() ==
        std::vector<BigInt>{1, -3, 6, -7, 6, -3, 1});

  SplitMix64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const auto q = 1 + static_cast<std::int64_t>(rng.next_below(24));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    const int p = 1 + static_cast<int>(rng.next_below(4));
    CHECK(power_coefficients(poly, p).coeffs() == oracles::naive_power(poly.coeffs(), p));
  }
}

TEST_CASE("power escalates past int64 losslessly") {
  // 3037000500^2 exceeds int64, so squaring forces the wide path.
  const IntPolynomial big({3037000500, 3037000500, -3037000500});
  for (int p : {2, 3}) {
    const auto fast = power_coefficients(big, p);
    CHECK(fast.coeffs() == oracles::naive_power(big.coeffs(), p));
  }
  // Sum of squared coefficients past 64 bits, reached via the narrow path.
  const BigInt s = sum_of_squared_coeffs(power_coefficients(dirichlet(64), 6));
  CHECK(s > BigInt("9223372036854775807"));
}

TEST_CASE("autocorrelation square sum matches squared-power parseval") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = 2 + static_cast<std::int64_t>(rng.next_below(64));
    const auto poly = from_signs(random_littlewood(q, rng.next()));
    const BigInt lhs = autocorrelation_square_sum(autocorrelation(poly));
    const BigInt rhs = sum_of_squared_coeffs(power_coefficients(poly, 2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dilation places coefficients at strides") {
  const auto p = dilate(dirichlet(3), 4);
  CHECK(p.degree() == 8);
  CHECK(p[0] == 1);
  CHECK(p[4] == 1);
  CHECK(p[8] == 1);
  CHECK(p[1] == 0);
  CHECK(p[5] == 0);
}
