#include "flatkit/constants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "flatkit/quadrature.hpp"

namespace flatkit {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_power(double x, double p) {
  if (x == 0.0) return 1.0;
  const double s = std::abs(std::sin(x) / x);
  return s > 0.0 ? std::pow(s, p) : 0.0;
}

// integral over (0, pi) of sin(t)^p * (k*pi + t)^(-p - shift) dt
double panel_moment(double p, double k, double shift, double tol) {
  return adaptive_simpson(
      [p, k, shift](double t) {
        const double s = std::sin(t);
        const double base = s > 0.0 ? std::pow(s, p) : 0.0;
        return base * std::pow(k * kPi + t, -p - shift);
      },
      0.0, kPi, tol);
}

}  // namespace

double delta_p(double p, double tol) {
  if (p <= 1.0) throw std::invalid_argument("delta_p: integral diverges for p <= 1");
  if (tol <= 0.0) throw std::invalid_argument("delta_p: tolerance must be > 0");

  const int head_panels = 64;
  const double panel_tol = tol / (8.0 * (head_panels + 4));

  // Head: panels aligned to the integrand zeros at multiples of pi.
  double head = 0.0;
  for (int k = 0; k < head_panels; ++k)
    head += adaptive_simpson([p](double x) { return sinc_power(x, p); }, k * kPi, (k + 1) * kPi,
                             panel_tol);

  // Tail: with u(k) = integral over (0,pi) of sin^p(t) (k*pi+t)^(-p) dt the
  // remainder is sum_{k>=K} u(k); Euler-Maclaurin needs u, u', u''' only.
  const double big_k = head_panels;
  const double integral_term = panel_moment(p, big_k, -1.0, panel_tol) / (kPi * (p - 1.0));
  const double u0 = panel_moment(p, big_k, 0.0, panel_tol);
  const double u1 = -p * kPi * panel_moment(p, big_k, 1.0, panel_tol);
  const double u3 = -p * (p + 1.0) * (p + 2.0) * kPi * kPi * kPi *
                    panel_moment(p, big_k, 3.0, panel_tol);
  const double tail = integral_term + u0 / 2.0 - u1 / 12.0 + u3 / 720.0;

  return (2.0 / kPi) * (head + tail);
}

double delta_even_exact(int even_p) {
  using boost::multiprecision::cpp_int;
  if (even_p < 2 || even_p % 2 != 0)
    throw std::invalid_argument("delta_even_exact: needs an even integer >= 2");
  const int n = even_p;
  // integral of (sin x / x)^n over (0, inf) equals
  // pi / (2^n (n-1)!) * sum_k (-1)^k C(n,k) (n-2k)^(n-1), so
  // delta_n = sum_k (-1)^k C(n,k) (n-2k)^(n-1) / (2^(n-1) (n-1)!).
  cpp_int numer = 0;
  cpp_int binom = 1;
  for (int k = 0; 2 * k <= n; ++k) {
    cpp_int term = binom;
    const int base = n - 2 * k;
    for (int e = 0; e < n - 1; ++e) term *= base;
    numer += (k % 2 == 0) ? term : -term;
    binom = binom * (n - k) / (k + 1);
  }
  cpp_int denom = 1;
  for (int i = 2; i < n; ++i) denom *= i;
  denom <<= (n - 1);
  return numer.convert_to<double>() / denom.convert_to<double>();
}

std::string remainder_regime(double p) {
  if (p < 1.0) throw std::invalid_argument("remainder_regime: p must be >= 1");
  if (p > 3.0) return "N^(p-3)";
  if (p == 3.0) return "ln N";
  return "constant";
}

double pichorides(double alpha) {
  if (alpha <= 1.0) throw std::invalid_argument("pichorides: alpha must be > 1");
  const double t = std::tan(kPi / (2.0 * alpha));
  return alpha <= 2.0 ? t : 1.0 / t;
}

const AConstants& a_constants() {
  static const AConstants cached = [] {
    auto f = [](double alpha) { return std::pow(kPi * alpha + 1.0, 1.0 / alpha); };
    double best = 0.0;
    // Coarse scan confirms the map decreases away from 1; offsets shrinking
    // toward the excluded endpoint approach the supremum.
    for (double alpha = 1.5; alpha <= 64.0; alpha *= 2.0) best = std::max(best, f(alpha));
    for (double eps = 1e-1; eps >= 1e-13; eps /= 10.0) best = std::max(best, f(1.0 + eps));
    AConstants out;
    out.a = best;
    out.a_prime = 2.0 * best + 1.0;
    out.note = "supremum at boundary alpha -> 1+, not attained";
    return out;
  }();
  return cached;
}

const C2Maximizer& c2_maximizer() {
  static const C2Maximizer cached = [] {
    auto g = [](double x) { return std::sin(x) * std::sin(x) / x; };
    // Golden-section on (0, pi/2); the function is unimodal there.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.1, b = 0.5 * kPi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    while (b - a > 1e-12) {
      if (g(c) > g(d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - phi * (b - a);
      d = a + phi * (b - a);
    }
    double x = 0.5 * (a + b);
    // Flatness of g near the top limits golden-section to ~sqrt(eps);
    // Newton on the stationarity residual h(x) = 2x cos x - sin x fixes it.
    for (int i = 0; i < 8; ++i) {
      const double h = 2.0 * x * std::cos(x) - std::sin(x);
      const double hp = std::cos(x) - 2.0 * x * std::sin(x);
      x -= h / hp;
    }
    C2Maximizer out;
    out.x_star = x;
    out.value = std::sin(x) * std::sin(x) / (kPi * x);
    return out;
  }();
  return cached;
}

std::pair<double, double> even_concentration_bounds(int two_k) {
  if (two_k < 4 || two_k % 2 != 0)
    throw std::invalid_argument("even_concentration_bounds: needs an even integer >= 4");
  return two_k == 4 ? std::pair{0.495, 0.5} : std::pair{0.483, 0.5};
}

ConstantsReport constants_report(double p, double alpha, double tol) {
  ConstantsReport report;
  report.p = p;
  report.delta_p = delta_p(p, tol);
  report.remainder_regime = remainder_regime(p);
  report.alpha = alpha;
  report.pichorides_a_alpha = pichorides(alpha);
  const AConstants& ac = a_constants();
  report.a = ac.a;
  report.a_prime = ac.a_prime;
  report.a_prime_alpha = 2.0 * report.pichorides_a_alpha + 1.0;
  report.c2 = c2_maximizer();
  report.even_bounds_4 = even_concentration_bounds(4);
  report.even_bounds_6_plus = even_concentration_bounds(6);
  report.quadrature_tolerance = tol;
  report.a_note = ac.note;
  return report;
}

}  // namespace flatkit
