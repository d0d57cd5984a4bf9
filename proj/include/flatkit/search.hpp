#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "flatkit/sequences.hpp"

namespace flatkit {

// F = q^2 / (2 sum_{tau>=1} a_tau^2) with exact integer autocorrelations;
// the normalized fourth-power norm satisfies ||P/sqrt(q)||_4^4 = 1 + 1/F.
// All off-peak correlations zero reports +infinity.
double merit_factor(const SignSequence& s);

enum class SearchObjective { flatness_deviation, l4_surrogate };

std::string objective_name(SearchObjective objective);

struct AnnealSchedule {
  double initial_temperature = 1.0;
  double cooling = 0.995;  // geometric factor in (0,1)
  std::int64_t steps = 0;
};

struct SearchResult {
  SignSequence best;
  std::string objective;
  double value = 0.0;
  std::int64_t q = 0;
  double alpha = 0.0;
  double c = 1.0;
  std::int64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
  std::optional<AnnealSchedule> schedule;
  std::string method;       // "exhaustive" or "anneal"
  double wall_seconds = 0;  // informational; kept out of the canonical JSON
  std::int64_t classes = 0; // exhaustive only
  std::int64_t total = 0;   // exhaustive only: 2^q
};

// Objective of a sequence, evaluated on its canonical symmetry-class
// representative so the value is bit-for-bit invariant under negation,
// reversal and the half-turn twist.
double search_objective_value(const SignSequence& s, double alpha, double c,
                              SearchObjective objective);

// Minimum over one representative per symmetry class; ties go to the
// lexicographically smallest sign string. q <= 24.
SearchResult flattest_exhaustive(int q, double alpha, double c = 1.0,
                                 SearchObjective objective = SearchObjective::flatness_deviation);

// Single-bit-flip annealing; exact incremental autocorrelation updates for
// the surrogate, incremental grid updates otherwise. Deterministic per seed.
SearchResult anneal(int q, double alpha, double c, const AnnealSchedule& schedule,
                    std::uint64_t seed,
                    SearchObjective objective = SearchObjective::flatness_deviation);

namespace detail {
// Change in a_tau caused by flipping sign i: -2 s_i (s_{i-tau} + s_{i+tau}).
std::int64_t acf_flip_delta(const std::vector<int>& signs, std::int64_t i, std::int64_t tau);
// Applies the flip to both the sign vector and its autocorrelations.
void apply_sign_flip(std::vector<int>& signs, std::vector<std::int64_t>& acf, std::int64_t i);
}  // namespace detail

}  // namespace flatkit
