#include "flatkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flatkit/constants.hpp"

namespace flatkit {

namespace detail {

bool even_integer_alpha(double alpha, int& p) {
  if (alpha < 2.0 || alpha != std::nearbyint(alpha)) return false;
  const auto a = static_cast<std::int64_t>(alpha);
  if (a % 2 != 0 || a > 1'000'000) return false;
  p = static_cast<int>(a / 2);
  return true;
}

double mean_abs_power(const Eigen::ArrayXcd& values, double scale, double alpha) {
  const Eigen::ArrayXd sq = values.abs2() * (scale * scale);
  const double n = static_cast<double>(values.size());
  if (alpha == 2.0) return sq.sum() / n;
  int p = 0;
  if (even_integer_alpha(alpha, p)) {
    Eigen::ArrayXd acc = sq;
    for (int i = 1; i < p; ++i) acc *= sq;
    return acc.sum() / n;
  }
  return sq.unaryExpr([alpha](double s) { return s > 0.0 ? std::pow(s, alpha / 2.0) : 0.0; }).sum() / n;
}

double mean_abs_dev_power(const Eigen::ArrayXcd& values, double scale, double c, double alpha) {
  const Eigen::ArrayXd dev = (values.abs() * scale - c).abs();
  const double n = static_cast<double>(values.size());
  if (alpha == 2.0) return dev.square().sum() / n;
  int p = 0;
  if (even_integer_alpha(alpha, p)) {
    const Eigen::ArrayXd sq = dev.square();
    Eigen::ArrayXd acc = sq;
    for (int i = 1; i < p; ++i) acc *= sq;
    return acc.sum() / n;
  }
  return dev.unaryExpr([alpha](double d) { return d > 0.0 ? std::pow(d, alpha) : 0.0; }).sum() / n;
}

}  // namespace detail

std::int64_t default_dense_grid(double alpha, std::int64_t degree) {
  const auto per_degree = static_cast<std::int64_t>(8.0 * std::ceil(alpha)) * (degree + 1);
  return std::max<std::int64_t>(4096, per_degree);
}

NormReport exact_even_norm(const IntPolynomial& poly, int p, double scale) {
  if (p < 1) throw std::invalid_argument("exact_even_norm: p must be >= 1");
  const BigPolynomial power = power_coefficients(poly, p);
  const BigInt parseval = sum_of_squared_coeffs(power);
  NormReport report;
  report.alpha = 2.0 * p;
  report.scale = scale;
  report.value = std::pow(scale, 2.0 * p) * big_to_double(parseval);
  report.exact = true;
  report.grid_size = 0;
  report.fft_size = 0;
  report.alias_error_bound = std::nullopt;
  return report;
}

NormReport grid_norm(const IntPolynomial& poly, const NormQuery& query) {
  if (query.alpha <= 0.0) throw std::invalid_argument("grid_norm: alpha must be > 0");

  int p = 0;
  const bool even = detail::even_integer_alpha(query.alpha, p);
  const std::int64_t degree = poly.degree();

  NormReport report;
  report.alpha = query.alpha;
  report.scale = query.scale;

  std::int64_t m;
  if (query.grid) {
    m = *query.grid;
    if (m < 1) throw std::invalid_argument("grid_norm: grid size must be >= 1");
  } else {
    m = even ? p * degree + 1 : default_dense_grid(query.alpha, degree);
  }

  const ComplexSamples samples = evaluate_on_grid(poly, m);
  const double mean = detail::mean_abs_power(samples.values, query.scale, query.alpha);
  report.value = std::pow(mean, 1.0 / query.alpha);
  report.grid_size = m;
  report.fft_size = samples.fft_size;
  report.exact = even && m >= p * degree + 1;

  if (report.exact) {
    report.alias_error_bound = std::nullopt;
  } else {
    const ComplexSamples refined = evaluate_on_grid(poly, 2 * m);
    const double mean2 = detail::mean_abs_power(refined.values, query.scale, query.alpha);
    report.alias_error_bound = std::abs(std::pow(mean2, 1.0 / query.alpha) - report.value);
  }
  return report;
}

NormReport flatness_deviation(const IntPolynomial& poly, double c, const NormQuery& query) {
  if (query.alpha <= 0.0) throw std::invalid_argument("flatness_deviation: alpha must be > 0");
  if (c < 0.0) throw std::invalid_argument("flatness_deviation: c must be >= 0");

  const std::int64_t m =
      query.grid ? *query.grid : default_dense_grid(query.alpha, poly.degree());
  if (m < 1) throw std::invalid_argument("flatness_deviation: grid size must be >= 1");

  NormReport report;
  report.alpha = query.alpha;
  report.scale = query.scale;
  report.grid_size = m;

  const ComplexSamples samples = evaluate_on_grid(poly, m);
  report.fft_size = samples.fft_size;
  const double mean = detail::mean_abs_dev_power(samples.values, query.scale, c, query.alpha);
  report.value = std::pow(mean, 1.0 / query.alpha);
  report.exact = false;

  const ComplexSamples refined = evaluate_on_grid(poly, 2 * m);
  const double mean2 = detail::mean_abs_dev_power(refined.values, query.scale, c, query.alpha);
  report.alias_error_bound = std::abs(std::pow(mean2, 1.0 / query.alpha) - report.value);
  return report;
}

double norm_ratio(const IntPolynomial& a, const IntPolynomial& b, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("norm_ratio: alpha must be > 0");
  if (b.is_zero()) throw std::invalid_argument("norm_ratio: denominator polynomial is zero");

  int p = 0;
  if (detail::even_integer_alpha(alpha, p)) {
    const BigInt num = sum_of_squared_coeffs(power_coefficients(a, p));
    const BigInt den = sum_of_squared_coeffs(power_coefficients(b, p));
    if (num == 0) return 0.0;
    // Ratio via log2 keeps huge exact sums out of double range.
    return std::exp2((big_log2(num) - big_log2(den)) / alpha);
  }

  const std::int64_t m = std::max(default_dense_grid(alpha, a.degree()),
                                  default_dense_grid(alpha, b.degree()));
  NormQuery q{alpha, 1.0, m};
  return grid_norm(a, q).value / grid_norm(b, q).value;
}

double newman_ratio(const BinarySequence& q) {
  const std::int64_t support = q.support_size();
  if (support == 0) throw std::invalid_argument("newman_ratio: zero sequence");
  const BigInt fourth = autocorrelation_square_sum(autocorrelation(from_bits(q)));
  // ||Q||_4 = fourth^(1/4), ||Q||_2 = support^(1/2).
  return std::exp2(big_log2(fourth) / 4.0 - std::log2(static_cast<double>(support)) / 2.0);
}

MZReport mz_check(const IntPolynomial& poly, double alpha, double scale) {
  MZReport report;
  report.alpha = alpha;
  report.n = poly.degree() + 1;
  report.a_prime = 2.0 * a_constants().a + 1.0;
  report.a_prime_alpha = alpha > 1.0 ? 2.0 * pichorides(alpha) + 1.0
                                     : std::numeric_limits<double>::quiet_NaN();

  const ComplexSamples nodes = evaluate_on_grid(poly, report.n);
  const double sampled_mean = detail::mean_abs_power(nodes.values, scale, alpha);

  double norm;
  int p = 0;
  if (detail::even_integer_alpha(alpha, p)) {
    norm = std::pow(exact_even_norm(poly, p, scale).value, 1.0 / alpha);
  } else {
    const std::int64_t m = default_dense_grid(alpha, poly.degree());
    const ComplexSamples dense = evaluate_on_grid(poly, m);
    norm = std::pow(detail::mean_abs_power(dense.values, scale, alpha), 1.0 / alpha);
  }

  if (alpha >= 1.0) {
    auto& ineq = report.sampled_le_norm;
    ineq.applicable = true;
    ineq.lhs = std::pow(sampled_mean, 1.0 / alpha);
    ineq.rhs = report.a_prime * norm;
    ineq.slack = ineq.rhs - ineq.lhs;
    ineq.satisfied = ineq.lhs <= ineq.rhs;
  }
  if (alpha > 1.0) {
    auto& ineq = report.norm_le_sampled;
    ineq.applicable = true;
    ineq.lhs = norm;
    ineq.rhs = std::pow(report.a_prime_alpha * sampled_mean, 1.0 / alpha);
    ineq.slack = ineq.rhs - ineq.lhs;
    ineq.satisfied = ineq.lhs <= ineq.rhs;
  }
  return report;
}

}  // namespace flatkit
