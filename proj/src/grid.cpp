#include "flatkit/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace flatkit {

namespace {

// kissfft degrades to an O(m*p) generic stage for a prime factor p; beyond
// this threshold a Bluestein chirp transform over power-of-two FFTs wins.
constexpr std::int64_t kMaxDirectPrimeFactor = 43;

std::int64_t largest_prime_factor(std::int64_t n) {
  std::int64_t largest = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    while (n % f == 0) {
      largest = f;
      n /= f;
    }
  }
  return std::max(largest, n);
}

std::int64_t next_power_of_two(std::int64_t n) {
  std::int64_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

using CVec = std::vector<std::complex<double>>;

// One engine per thread; it caches twiddle plans per transform size.
Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

// Forward DFT X_k = sum_n x_n exp(-2*pi*i*n*k/m) of arbitrary length m,
// via the chirp factorization n*k = (n^2 + k^2 - (k-n)^2)/2. Chirp phases
// use n^2 mod 2m so the trig arguments stay small and exact.
CVec bluestein_forward(const CVec& x) {
  const std::int64_t m = static_cast<std::int64_t>(x.size());
  const std::int64_t big = next_power_of_two(2 * m - 1);
  const double pi = std::numbers::pi;

  CVec chirp(static_cast<std::size_t>(m));
  for (std::int64_t n = 0; n < m; ++n) {
    const std::int64_t n2 = (n * n) % (2 * m);
    chirp[static_cast<std::size_t>(n)] =
        std::polar(1.0, -pi * static_cast<double>(n2) / static_cast<double>(m));
  }

  CVec a(static_cast<std::size_t>(big), {0.0, 0.0});
  CVec b(static_cast<std::size_t>(big), {0.0, 0.0});
  for (std::int64_t n = 0; n < m; ++n) {
    a[static_cast<std::size_t>(n)] = x[static_cast<std::size_t>(n)] * chirp[static_cast<std::size_t>(n)];
    const auto conj_chirp = std::conj(chirp[static_cast<std::size_t>(n)]);
    b[static_cast<std::size_t>(n)] = conj_chirp;
    if (n > 0) b[static_cast<std::size_t>(big - n)] = conj_chirp;
  }

  Eigen::FFT<double>& fft = fft_engine();
  CVec fa, fb;
  fft.fwd(fa, a);
  fft.fwd(fb, b);
  for (std::int64_t i = 0; i < big; ++i)
    fa[static_cast<std::size_t>(i)] *= fb[static_cast<std::size_t>(i)];
  CVec conv;
  fft.inv(conv, fa);

  CVec out(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k)
    out[static_cast<std::size_t>(k)] = conv[static_cast<std::size_t>(k)] * chirp[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace

ComplexSamples evaluate_on_grid(const IntPolynomial& poly, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("evaluate_on_grid: m must be >= 1");

  // Fold coefficients mod m: exp(2*pi*i*j*k/m) only sees k mod m.
  CVec folded(static_cast<std::size_t>(m), {0.0, 0.0});
  const auto& coeffs = poly.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    folded[k % static_cast<std::size_t>(m)] += static_cast<double>(coeffs[k]);

  std::int64_t fft_size = m;
  CVec spectrum;
  if (m <= 4) {
    spectrum.resize(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (std::int64_t k = 0; k < m; ++k)
        acc += folded[static_cast<std::size_t>(k)] *
               std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                   static_cast<double>(m));
      spectrum[static_cast<std::size_t>(j)] = acc;
    }
  } else if (largest_prime_factor(m) <= kMaxDirectPrimeFactor) {
    fft_engine().fwd(spectrum, folded);
  } else {
    spectrum = bluestein_forward(folded);
    fft_size = next_power_of_two(2 * m - 1);
  }

  // The forward transform uses exp(-2*pi*i*j*k/m); our grid wants the
  // conjugate exponent, which is index reversal j -> (m - j) mod m.
  ComplexSamples out;
  out.grid.size = m;
  out.fft_size = fft_size;
  out.values.resize(m);
  out.values[0] = spectrum[0];
  for (std::int64_t j = 1; j < m; ++j)
    out.values[j] = spectrum[static_cast<std::size_t>(m - j)];
  return out;
}

}  // namespace flatkit
