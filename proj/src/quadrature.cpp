#include "flatkit/quadrature.hpp"

#include <cmath>

namespace flatkit {

namespace {

double simpson(double h, double fa, double fc, double fb) {
  return (fa + 4.0 * fc + fb) * (h / 6.0);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double c, double b,
                       double fa, double fc, double fb, double whole, double tol, int depth) {
  const double ca = 0.5 * (a + c);
  const double cb = 0.5 * (c + b);
  const double fca = f(ca);
  const double fcb = f(cb);
  const double left = simpson(c - a, fa, fca, fc);
  const double right = simpson(b - c, fc, fcb, fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) return left + right + err;
  return simpson_recurse(f, a, ca, c, fa, fca, fc, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, c, cb, b, fc, fcb, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  const double c = 0.5 * (a + b);
  const double fa = f(a);
  const double fc = f(c);
  const double fb = f(b);
  const double whole = simpson(b - a, fa, fc, fb);
  return simpson_recurse(f, a, c, b, fa, fc, fb, whole, tol, max_depth);
}

}  // namespace flatkit
