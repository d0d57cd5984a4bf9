#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "flatkit/families.hpp"
#include "flatkit/grid.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/rng.hpp"

using namespace flatkit;

TEST_CASE("random sign sequences are deterministic per seed") {
  const auto a = random_littlewood(257, 42);
  const auto b = random_littlewood(257, 42);
  CHECK(a == b);
  const auto c = random_littlewood(257, 43);
  CHECK(!(a == c));
  CHECK(random_littlewood(1, 7).size() == 1);
}

TEST_CASE("random sign empirical mean") {
  const std::int64_t q = 100000;
  for (std::uint64_t seed : {1ULL, 999ULL, 123456789ULL}) {
    const auto s = random_littlewood(q, seed);
    double mean = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) mean += s[j];
    mean /= static_cast<double>(q);
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(q)));
  }
}

TEST_CASE("rudin-shapiro recurrence") {
  CHECK(rudin_shapiro(0).to_string() == "+");
  CHECK(rudin_shapiro(1).to_string() == "++");
  CHECK(rudin_shapiro(2).to_string() == "+++-");
  CHECK(rudin_shapiro(3).to_string() == "+++-++-+");
  CHECK(rudin_shapiro(12).size() == 4096);
  CHECK_THROWS_AS(rudin_shapiro(25), std::invalid_argument);
}

TEST_CASE("rudin-shapiro normalized sup bound") {
  for (int k : {4, 8, 12}) {
    const auto poly = from_signs(rudin_shapiro(k));
    const double scale = std::pow(2.0, -k / 2.0);
    const auto samples = evaluate_on_grid(poly, 1 << 14);
    const double grid_max = samples.values.abs().maxCoeff() * scale;
    CHECK(grid_max <= std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("fekete sequences") {
  CHECK(fekete(7).to_string() == "+++-+--");
  CHECK(fekete(5).to_string() == "++--+");
  CHECK(fekete(3).to_string() == "++-");
  CHECK_THROWS_AS(fekete(9), std::invalid_argument);
  CHECK_THROWS_AS(fekete(2), std::invalid_argument);
  CHECK_THROWS_AS(fekete(1), std::invalid_argument);
}

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(2147483647));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(!is_prime(561));  // Carmichael
}

TEST_CASE("support extraction from signs") {
  const auto s = SignSequence::from_string("+-+");
  CHECK(newman_from_signs(s, NewmanVariant::plus).entries() == std::vector<int>{1, 0, 1});
  CHECK(newman_from_signs(s, NewmanVariant::minus).entries() == std::vector<int>{0, 1, 0});
  SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_littlewood(1 + static_cast<std::int64_t>(rng.next_below(50)), rng.next());
    const auto plus = newman_from_signs(t, NewmanVariant::plus);
    const auto minus = newman_from_signs(t, NewmanVariant::minus);
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(plus[j] + minus[j] == 1);
  }
}

TEST_CASE("random binary sequences") {
  const std::int64_t q = 65536;
  const auto b = random_binary(q, 0.5, 5);
  CHECK(b == random_binary(q, 0.5, 5));
  CHECK(std::abs(b.density() - 0.5) < 4.0 / std::sqrt(static_cast<double>(q)));
  CHECK_THROWS_AS(random_binary(16, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_binary(16, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_binary(16, -0.2, 1), std::invalid_argument);
}

TEST_CASE("class enumeration basics") {
  SUBCASE("single entry") {
    std::vector<SignSequence> reps;
    const auto summary = enumerate_signs(1, [&](const SignSequence& s) { reps.push_back(s); });
    CHECK(summary.classes == 1);
    CHECK(summary.total == 2);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].to_string() == "+");
  }
  SUBCASE("two entries cover the four sequences") {
    std::vector<SignSequence> reps;
    enumerate_signs(2, [&](const SignSequence& s) { reps.push_back(s); });
    std::set<std::string> covered;
    for (const auto& rep : reps)
      for (const auto& member : symmetry_orbit(rep)) covered.insert(member.to_string());
    CHECK(covered.size() == 4);
  }
  SUBCASE("stream is stable across runs") {
    std::vector<std::string> first, second;
    enumerate_signs(9, [&](const SignSequence& s) { first.push_back(s.to_string()); });
    enumerate_signs(9, [&](const SignSequence& s) { second.push_back(s.to_string()); });
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(enumerate_signs(29, [](const SignSequence&) {}), std::invalid_argument);
  }
}

TEST_CASE("every sequence reachable from exactly one representative") {
  const int q = 12;
  std::vector<int> hits(1 << q, 0);
  auto index_of = [q](const SignSequence& s) {
    int x = 0;
    for (int j = 0; j < q; ++j)
      if (s[static_cast<std::size_t>(j)] < 0) x |= 1 << (q - 1 - j);
    return x;
  };
  std::int64_t classes = 0;
  enumerate_signs(q, [&](const SignSequence& rep) {
    ++classes;
    for (const auto& member : symmetry_orbit(rep)) ++hits[static_cast<std::size_t>(index_of(member))];
  });
  for (int x = 0; x < (1 << q); ++x) CHECK(hits[static_cast<std::size_t>(x)] == 1);
  CHECK(classes > 0);
}

TEST_CASE("canonical representative properties") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = 1 + static_cast<std::int64_t>(rng.next_below(16));
    const auto s = random_littlewood(q, rng.next());
    const auto canon = canonical_representative(s);
    CHECK(canon[0] == +1);
    const auto orbit = symmetry_orbit(s);
    CHECK(std::find(orbit.begin(), orbit.end(), canon) != orbit.end());
    for (const auto& member : orbit) {
      CHECK(canonical_representative(member) == canon);
      if (member[0] == +1) CHECK(!(member < canon));
    }
  }
}

TEST_CASE("norms are invariant under the three symmetries") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    const auto q = 4 + static_cast<std::int64_t>(rng.next_below(28));
    const auto s = random_littlewood(q, rng.next());
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const NormQuery query{3.0, scale, 4096};
    const double base_norm = grid_norm(from_signs(s), query).value;
    const double base_dev =
        flatness_deviation(from_signs(s), 1.0, NormQuery{4.0, scale, 4096}).value;
    for (const auto& member : symmetry_orbit(s)) {
      CHECK(grid_norm(from_signs(member), query).value ==
            doctest::Approx(base_norm).epsilon(1e-9));
      CHECK(flatness_deviation(from_signs(member), 1.0, NormQuery{4.0, scale, 4096}).value ==
            doctest::Approx(base_dev).epsilon(1e-9));
    }
  }
}

TEST_CASE("sign family dispatcher") {
  FamilySpec spec;
  spec.kind = FamilyKind::dirichlet;
  CHECK(make_sign_family(spec, 5).to_string() == "+++++");
  spec.kind = FamilyKind::rudin_shapiro;
  CHECK(make_sign_family(spec, 2).to_string() == "+++-");
  spec.kind = FamilyKind::fekete;
  CHECK(make_sign_family(spec, 7).to_string() == "+++-+--");
  spec.kind = FamilyKind::random_sign;
  CHECK_THROWS_AS(make_sign_family(spec, 8), std::invalid_argument);
  spec.seed = 3;
  CHECK(make_sign_family(spec, 8) == random_littlewood(8, 3));
  spec.kind = FamilyKind::binary_random;
  CHECK_THROWS_AS(make_sign_family(spec, 8), std::invalid_argument);
}
