#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>

#include "flatkit/polynomial.hpp"

namespace flatkit {

// m equispaced points exp(2*pi*i*j/m) on the torus; Haar measure is
// normalized to total mass 1, so grid means approximate torus integrals.
struct SampleGrid {
  std::int64_t size = 0;
};

struct ComplexSamples {
  Eigen::ArrayXcd values;
  SampleGrid grid;
  std::int64_t fft_size = 0;  // transform length actually used internally
};

// values[j] = sum_k coeffs[k] * exp(2*pi*i*j*k/m). Zero-pads when
// m > degree+1 and folds coefficients mod m otherwise; both are exact.
ComplexSamples evaluate_on_grid(const IntPolynomial& poly, std::int64_t m);

}  // namespace flatkit
