#include "flatkit/search.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "flatkit/families.hpp"
#include "flatkit/grid.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/polynomial.hpp"
#include "flatkit/rng.hpp"

namespace flatkit {

namespace {

__int128 offpeak_square_sum(const std::vector<std::int64_t>& a) {
  __int128 s = 0;
  for (std::size_t tau = 1; tau < a.size(); ++tau)
    s += static_cast<__int128>(a[tau]) * a[tau];
  return s;
}

double surrogate_from_offpeak(__int128 offpeak, std::int64_t q) {
  // ||P/sqrt(q)||_4^4 - 1 = 2 * sum_{tau>=1} a_tau^2 / q^2 = 1/F.
  return 2.0 * static_cast<double>(offpeak) / (static_cast<double>(q) * static_cast<double>(q));
}

// Objective evaluated directly on the given sequence; callers pass the
// canonical representative when invariance matters.
double raw_objective(const SignSequence& s, double alpha, double c, SearchObjective objective) {
  const auto q = static_cast<std::int64_t>(s.size());
  if (objective == SearchObjective::l4_surrogate) {
    const auto a = autocorrelation(from_signs(s));
    return surrogate_from_offpeak(offpeak_square_sum(a), q);
  }
  const IntPolynomial poly = from_signs(s);
  const std::int64_t m = default_dense_grid(alpha, poly.degree());
  const ComplexSamples samples = evaluate_on_grid(poly, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  return std::pow(detail::mean_abs_dev_power(samples.values, scale, c, alpha), 1.0 / alpha);
}

}  // namespace

namespace detail {

std::int64_t acf_flip_delta(const std::vector<int>& signs, std::int64_t i, std::int64_t tau) {
  const auto q = static_cast<std::int64_t>(signs.size());
  std::int64_t neighbors = 0;
  if (i - tau >= 0) neighbors += signs[static_cast<std::size_t>(i - tau)];
  if (i + tau < q) neighbors += signs[static_cast<std::size_t>(i + tau)];
  return -2 * signs[static_cast<std::size_t>(i)] * neighbors;
}

void apply_sign_flip(std::vector<int>& signs, std::vector<std::int64_t>& acf, std::int64_t i) {
  const auto q = static_cast<std::int64_t>(signs.size());
  for (std::int64_t tau = 1; tau < q; ++tau)
    acf[static_cast<std::size_t>(tau)] += acf_flip_delta(signs, i, tau);
  signs[static_cast<std::size_t>(i)] = -signs[static_cast<std::size_t>(i)];
}

}  // namespace detail

double merit_factor(const SignSequence& s) {
  if (s.size() < 2) throw std::invalid_argument("merit_factor: q must be >= 2");
  const auto a = autocorrelation(from_signs(s));
  const __int128 offpeak = offpeak_square_sum(a);
  if (offpeak == 0) return std::numeric_limits<double>::infinity();
  const double q = static_cast<double>(s.size());
  return q * q / (2.0 * static_cast<double>(offpeak));
}

std::string objective_name(SearchObjective objective) {
  return objective == SearchObjective::flatness_deviation ? "flatness_deviation" : "l4_surrogate";
}

double search_objective_value(const SignSequence& s, double alpha, double c,
                              SearchObjective objective) {
  return raw_objective(canonical_representative(s), alpha, c, objective);
}

SearchResult flattest_exhaustive(int q, double alpha, double c, SearchObjective objective) {
  if (q < 1) throw std::invalid_argument("flattest_exhaustive: q must be >= 1");
  if (q > 24)
    throw std::invalid_argument("flattest_exhaustive: q > 24 exceeds the budget; use anneal");

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.q = q;
  result.alpha = alpha;
  result.c = c;
  result.objective = objective_name(objective);
  result.method = "exhaustive";
  result.value = std::numeric_limits<double>::infinity();

  // Representatives stream in increasing lexicographic order, so keeping
  // strict improvements makes the reported minimizer the lex-smallest.
  const EnumerationSummary summary = enumerate_signs(q, [&](const SignSequence& rep) {
    const double value = raw_objective(rep, alpha, c, objective);
    ++result.evaluations;
    if (value < result.value) {
      result.value = value;
      result.best = rep;
    }
  });
  result.classes = summary.classes;
  result.total = summary.total;
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SearchResult anneal(int q, double alpha, double c, const AnnealSchedule& schedule,
                    std::uint64_t seed, SearchObjective objective) {
  if (q < 2) throw std::invalid_argument("anneal: q must be >= 2");
  if (!(schedule.initial_temperature > 0.0))
    throw std::invalid_argument("anneal: initial temperature must be > 0");
  if (!(schedule.cooling > 0.0 && schedule.cooling < 1.0))
    throw std::invalid_argument("anneal: cooling factor must lie in (0,1)");
  if (schedule.steps < 0) throw std::invalid_argument("anneal: steps must be >= 0");

  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(seed);
  std::vector<int> signs(static_cast<std::size_t>(q));
  for (auto& e : signs) e = rng.next_sign();

  SearchResult result;
  result.q = q;
  result.alpha = alpha;
  result.c = c;
  result.objective = objective_name(objective);
  result.method = "anneal";
  result.seed = seed;
  result.schedule = schedule;

  SignSequence best(signs);
  double temperature = schedule.initial_temperature;

  if (objective == SearchObjective::l4_surrogate) {
    std::vector<std::int64_t> acf = autocorrelation(from_signs(SignSequence(signs)));
    __int128 offpeak = offpeak_square_sum(acf);
    __int128 best_offpeak = offpeak;
    std::vector<std::int64_t> delta(static_cast<std::size_t>(q), 0);

    for (std::int64_t step = 0; step < schedule.steps; ++step) {
      const auto i = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(q)));
      __int128 candidate = offpeak;
      for (std::int64_t tau = 1; tau < q; ++tau) {
        const std::int64_t d = detail::acf_flip_delta(signs, i, tau);
        delta[static_cast<std::size_t>(tau)] = d;
        const std::int64_t a_new = acf[static_cast<std::size_t>(tau)] + d;
        candidate += static_cast<__int128>(a_new) * a_new -
                     static_cast<__int128>(acf[static_cast<std::size_t>(tau)]) *
                         acf[static_cast<std::size_t>(tau)];
      }
      const double diff = surrogate_from_offpeak(candidate, q) - surrogate_from_offpeak(offpeak, q);
      const bool accept = diff <= 0.0 || rng.next_double() < std::exp(-diff / temperature);
      if (accept) {
        for (std::int64_t tau = 1; tau < q; ++tau)
          acf[static_cast<std::size_t>(tau)] += delta[static_cast<std::size_t>(tau)];
        signs[static_cast<std::size_t>(i)] = -signs[static_cast<std::size_t>(i)];
        offpeak = candidate;
        if (offpeak < best_offpeak) {
          best_offpeak = offpeak;
          best = SignSequence(signs);
        }
      }
      temperature *= schedule.cooling;
    }
  } else {
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const std::int64_t m = default_dense_grid(alpha, q - 1);
    Eigen::ArrayXcd roots(m);
    for (std::int64_t j = 0; j < m; ++j)
      roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));

    Eigen::ArrayXcd samples = evaluate_on_grid(from_signs(SignSequence(signs)), m).values;
    double current =
        std::pow(detail::mean_abs_dev_power(samples, scale, c, alpha), 1.0 / alpha);
    double best_value = current;
    Eigen::ArrayXcd proposal(m);
    std::int64_t accepted_since_resync = 0;

    for (std::int64_t step = 0; step < schedule.steps; ++step) {
      const auto i = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(q)));
      const double delta_coeff = -2.0 * signs[static_cast<std::size_t>(i)];
      std::int64_t t = 0;
      for (std::int64_t j = 0; j < m; ++j) {
        proposal[j] = samples[j] + delta_coeff * roots[t];
        t += i;
        if (t >= m) t -= m;
      }
      const double candidate =
          std::pow(detail::mean_abs_dev_power(proposal, scale, c, alpha), 1.0 / alpha);
      const double diff = candidate - current;
      const bool accept = diff <= 0.0 || rng.next_double() < std::exp(-diff / temperature);
      if (accept) {
        samples.swap(proposal);
        signs[static_cast<std::size_t>(i)] = -signs[static_cast<std::size_t>(i)];
        current = candidate;
        // Incremental updates drift in floating point; rebuild periodically.
        if (++accepted_since_resync == 2048) {
          samples = evaluate_on_grid(from_signs(SignSequence(signs)), m).values;
          current = std::pow(detail::mean_abs_dev_power(samples, scale, c, alpha), 1.0 / alpha);
          accepted_since_resync = 0;
        }
        if (current < best_value) {
          best_value = current;
          best = SignSequence(signs);
        }
      }
      temperature *= schedule.cooling;
    }
  }

  result.best = best;
  result.evaluations = schedule.steps;
  // Fresh canonical evaluation so the report reproduces bit-for-bit.
  result.value = search_objective_value(best, alpha, c, objective);
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace flatkit
