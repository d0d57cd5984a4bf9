#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "flatkit/sequences.hpp"

namespace flatkit {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial with exact integer coefficients, constant term first.
// Trailing zero coefficients are kept exactly as constructed.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Polynomial: needs at least one coefficient");
  }

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const Scalar& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Scalar sum() const {
    Scalar s{0};
    for (const Scalar& c : coeffs_) s += c;
    return s;
  }

  // Horner evaluation; reference path for tests and small cases.
  std::complex<double> evaluate(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + std::complex<double>(static_cast<double>(*it), 0.0);
    return acc;
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<std::int64_t>;
using BigPolynomial = Polynomial<BigInt>;

inline IntPolynomial from_signs(const SignSequence& s) {
  std::vector<std::int64_t> c(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) c[j] = s[j];
  return IntPolynomial(std::move(c));
}

inline IntPolynomial from_bits(const BinarySequence& b) {
  std::vector<std::int64_t> c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) c[j] = b[j];
  return IntPolynomial(std::move(c));
}

// All-ones polynomial 1 + z + ... + z^(N-1).
inline IntPolynomial dirichlet(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("dirichlet: N must be >= 1");
  return IntPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

// P(z^M): coefficient k of P moves to position k*M.
inline IntPolynomial dilate(const IntPolynomial& p, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("dilate: M must be >= 1");
  std::vector<std::int64_t> c(static_cast<std::size_t>(p.degree() * m + 1), 0);
  for (std::size_t k = 0; k < p.size(); ++k) c[k * static_cast<std::size_t>(m)] = p[k];
  return IntPolynomial(std::move(c));
}

// a*P + b*Q, exact.
inline IntPolynomial linear_combination(std::int64_t a, const IntPolynomial& p, std::int64_t b,
                                        const IntPolynomial& q) {
  std::vector<std::int64_t> c(std::max(p.size(), q.size()), 0);
  for (std::size_t k = 0; k < p.size(); ++k) c[k] += a * p[k];
  for (std::size_t k = 0; k < q.size(); ++k) c[k] += b * q[k];
  return IntPolynomial(std::move(c));
}

namespace detail {

// int64 convolution with overflow detection; false means the caller must
// redo the product in arbitrary precision.
inline bool convolve_checked(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                             std::vector<std::int64_t>& out) {
  out.assign(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(ai, b[j], &prod)) return false;
      if (__builtin_add_overflow(out[i + j], prod, &out[i + j])) return false;
    }
  }
  return true;
}

inline std::vector<BigInt> convolve_big(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<BigInt> widen(const std::vector<std::int64_t>& v) {
  std::vector<BigInt> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

}  // namespace detail

// Exact coefficients of P^p via iterated convolution. Products run in the
// int64 fast path and escalate to arbitrary precision on overflow; the
// escalation is silent and lossless.
inline BigPolynomial power_coefficients(const IntPolynomial& p, int exponent) {
  if (exponent < 1) throw std::invalid_argument("power_coefficients: p must be >= 1");
  std::vector<std::int64_t> narrow = p.coeffs();
  bool narrow_ok = true;
  std::vector<BigInt> wide;
  for (int step = 1; step < exponent; ++step) {
    if (narrow_ok) {
      std::vector<std::int64_t> next;
      if (detail::convolve_checked(narrow, p.coeffs(), next)) {
        narrow = std::move(next);
        continue;
      }
      narrow_ok = false;
      wide = detail::widen(narrow);
    }
    wide = detail::convolve_big(wide, detail::widen(p.coeffs()));
  }
  return BigPolynomial(narrow_ok ? detail::widen(narrow) : std::move(wide));
}

// Aperiodic autocorrelations a_tau = sum_j c_j c_{j+tau}, tau = 0..degree.
inline std::vector<std::int64_t> autocorrelation(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t tau = 0; tau < n; ++tau) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j + tau < n; ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(c[j], c[j + tau], &prod) ||
          __builtin_add_overflow(acc, prod, &acc))
        throw std::overflow_error("autocorrelation: coefficient range exceeds int64");
    }
    a[tau] = acc;
  }
  return a;
}

template <typename Scalar>
inline BigInt sum_of_squared_coeffs(const Polynomial<Scalar>& p) {
  BigInt s = 0;
  for (const Scalar& c : p.coeffs()) s += BigInt(c) * BigInt(c);
  return s;
}

// sum over all lags of a_tau^2 (a_0^2 + 2 sum_{tau>=1} a_tau^2); equals the
// fourth-power norm of the polynomial times its length measure.
inline BigInt autocorrelation_square_sum(const std::vector<std::int64_t>& a) {
  BigInt s = BigInt(a[0]) * a[0];
  for (std::size_t tau = 1; tau < a.size(); ++tau) s += 2 * BigInt(a[tau]) * a[tau];
  return s;
}

inline double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

// log2 of a positive BigInt, accurate to double precision.
inline double big_log2(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("big_log2: value must be positive");
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 63) return std::log2(v.convert_to<double>());
  const BigInt top = v >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

// eta_j = (1 + eps_j)/2 and eta'_j = (1 - eps_j)/2, so that
// 2*Q - D = sqrt(q)*P = D - 2*Q' holds exactly in the coefficients.
inline std::pair<BinarySequence, BinarySequence> split_littlewood(const SignSequence& s) {
  std::vector<int> eta(s.size()), eta_prime(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    eta[j] = (1 + s[j]) / 2;
    eta_prime[j] = (1 - s[j]) / 2;
  }
  return {BinarySequence(std::move(eta)), BinarySequence(std::move(eta_prime))};
}

}  // namespace flatkit
