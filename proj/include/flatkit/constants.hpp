#pragma once

#include <string>
#include <utility>

namespace flatkit {

struct AConstants {
  double a = 0.0;        // sup over alpha > 1 of (pi*alpha + 1)^(1/alpha)
  double a_prime = 0.0;  // 2A + 1
  std::string note;      // the supremum sits at the boundary alpha -> 1+
};

struct C2Maximizer {
  double x_star = 0.0;  // argmax of sin(x)^2/x, root of tan(x) = 2x
  double value = 0.0;   // sin(x*)^2 / (pi * x*)
};

struct ConstantsReport {
  double p = 0.0;
  double delta_p = 0.0;
  std::string remainder_regime;
  double alpha = 0.0;
  double pichorides_a_alpha = 0.0;
  double a = 0.0;
  double a_prime = 0.0;
  double a_prime_alpha = 0.0;
  C2Maximizer c2;
  std::pair<double, double> even_bounds_4{0.0, 0.0};
  std::pair<double, double> even_bounds_6_plus{0.0, 0.0};
  double quadrature_tolerance = 0.0;
  std::string a_note;
};

// (2/pi) * integral of |sin(x)/x|^p over (0, inf). Head panels aligned to
// multiples of pi are integrated adaptively; the tail series of panel
// integrals is summed analytically by Euler-Maclaurin.
double delta_p(double p, double tol = 1e-10);

// Exact rational value of delta_p for even integer p, via the closed-form
// sinc-power integral; used as an oracle reference.
double delta_even_exact(int even_p);

// Growth class of the remainder in ||D_N||_p^p = delta_p N^(p-1) + R_p(N):
// "N^(p-3)" for p > 3, "ln N" at p = 3, "constant" for 1 <= p < 3.
std::string remainder_regime(double p);

// Sharp conjugate-function constant: tan(pi/(2*alpha)) on 1 < alpha <= 2,
// cot(pi/(2*alpha)) on alpha >= 2.
double pichorides(double alpha);

// A = sup_{alpha>1} (pi*alpha + 1)^(1/alpha) by a monotone scan with
// offsets shrinking toward the boundary, and A' = 2A + 1.
const AConstants& a_constants();

// Maximizer of sin(x)^2/x on (0, pi), golden-section bracket plus a few
// Newton steps on the stationarity equation tan(x) = 2x.
const C2Maximizer& c2_maximizer();

// Published interval endpoints for the even concentration levels:
// (0.495, 0.5) at 2k = 4 and (0.483, 0.5) for even 2k >= 6.
std::pair<double, double> even_concentration_bounds(int two_k);

ConstantsReport constants_report(double p, double alpha, double tol = 1e-10);

}  // namespace flatkit
