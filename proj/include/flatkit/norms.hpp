#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "flatkit/grid.hpp"
#include "flatkit/polynomial.hpp"
#include "flatkit/sequences.hpp"

namespace flatkit {

// Norm request: exponent alpha > 0, a scalar multiplier applied to the
// polynomial (e.g. 1/sqrt(q)), and an optional explicit grid size.
struct NormQuery {
  double alpha = 2.0;
  double scale = 1.0;
  std::optional<std::int64_t> grid;  // nullopt = auto
};

struct NormReport {
  double alpha = 0.0;
  double value = 0.0;
  bool exact = false;
  std::int64_t grid_size = 0;
  std::int64_t fft_size = 0;
  std::optional<double> alias_error_bound;  // nullopt encodes "exact"
  double scale = 1.0;
};

struct MZInequality {
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // rhs - lhs
};

struct MZReport {
  double alpha = 0.0;
  std::int64_t n = 0;  // sample count = degree + 1
  double a_prime = 0.0;
  double a_prime_alpha = 0.0;  // 2*A_alpha + 1; NaN when alpha <= 1
  MZInequality sampled_le_norm;  // sampled mean^(1/alpha) <= A' * norm
  MZInequality norm_le_sampled;  // norm <= (A'_alpha * sampled mean)^(1/alpha)
};

// Default dense grid for non-even exponents: the modulus is smooth away
// from zeros, and one grid doubling gives an honest alias estimate.
std::int64_t default_dense_grid(double alpha, std::int64_t degree);

// ||scale*P||_{2p}^{2p} as scale^(2p) * sum of squared coefficients of P^p;
// the integer part is exact, scaling happens once at the end. Note the
// returned value is the 2p-th power of the norm.
NormReport exact_even_norm(const IntPolynomial& poly, int p, double scale);

// ((1/m) sum_j |scale*P(xi_{m,j})|^alpha)^(1/alpha). Even alpha = 2p with
// m >= p*degree+1 is alias-free and flagged exact; otherwise the report
// carries the delta from one grid doubling.
NormReport grid_norm(const IntPolynomial& poly, const NormQuery& query);

// || |scale*P| - c ||_alpha on the dense grid; the modulus kink breaks the
// polynomial structure, so this path is never flagged exact.
NormReport flatness_deviation(const IntPolynomial& poly, double c, const NormQuery& query);

// ||A||_alpha / ||B||_alpha; exact coefficient route for even alpha.
double norm_ratio(const IntPolynomial& a, const IntPolynomial& b, double alpha);

// ||Q||_4 / ||Q||_2 from exact autocorrelations and the support count.
double newman_ratio(const BinarySequence& q);

// Both interpolation inequalities at the n = degree+1 roots of unity,
// with A' = 2A+1 and A'_alpha = 2*A_alpha+1.
MZReport mz_check(const IntPolynomial& poly, double alpha, double scale);

namespace detail {
// Mean of |scale*v|^alpha over samples; integer exponents avoid pow().
double mean_abs_power(const Eigen::ArrayXcd& values, double scale, double alpha);
// Mean of ||scale*v| - c|^alpha.
double mean_abs_dev_power(const Eigen::ArrayXcd& values, double scale, double c, double alpha);
// True when alpha is an even integer >= 2; sets p = alpha/2.
bool even_integer_alpha(double alpha, int& p);
}  // namespace detail

}  // namespace flatkit
