#include "flatkit/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flatkit/constants.hpp"
#include "flatkit/families.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/rng.hpp"

namespace flatkit {

namespace {

double wrap_unit(double x) {
  double y = x - std::floor(x);
  if (y >= 1.0) y -= 1.0;
  return y;
}

Eigen::ArrayXd abs_power(const Eigen::ArrayXcd& values, double alpha) {
  const Eigen::ArrayXd sq = values.abs2();
  if (alpha == 2.0) return sq;
  int p = 0;
  if (detail::even_integer_alpha(alpha, p)) {
    Eigen::ArrayXd acc = sq;
    for (int i = 1; i < p; ++i) acc *= sq;
    return acc;
  }
  return sq.unaryExpr([alpha](double s) { return s > 0.0 ? std::pow(s, alpha / 2.0) : 0.0; });
}

struct IndexRange {
  std::int64_t begin = 0;
  std::int64_t end = 0;  // half-open
};

// Grid points j/m falling in [lo, hi), both in [0, 1].
IndexRange range_for(double lo, double hi, std::int64_t m) {
  IndexRange r;
  r.begin = static_cast<std::int64_t>(std::ceil(lo * static_cast<double>(m)));
  r.end = static_cast<std::int64_t>(std::ceil(hi * static_cast<double>(m)));
  r.begin = std::clamp<std::int64_t>(r.begin, 0, m);
  r.end = std::clamp<std::int64_t>(r.end, 0, m);
  return r;
}

double mass_on_grid(const Eigen::ArrayXd& weights, const std::vector<Arc::Interval>& intervals,
                    std::int64_t m, std::int64_t min_points_per_interval) {
  double numer = 0.0;
  for (const auto& iv : intervals) {
    const IndexRange r = range_for(iv.lo, iv.hi, m);
    if (r.end - r.begin < min_points_per_interval)
      throw std::invalid_argument(
          "arc_mass: grid too coarse to place >= 10 points inside the smallest interval; "
          "increase m");
    numer += weights.segment(r.begin, r.end - r.begin).sum();
  }
  const double denom = weights.sum();
  return denom > 0.0 ? numer / denom : 0.0;
}

}  // namespace

double Arc::measure() const {
  double total = 0.0;
  for (const auto& iv : intervals) total += iv.hi - iv.lo;
  return total;
}

std::vector<Arc::Interval> Arc::normalized() const {
  std::vector<Interval> out;
  for (const auto& iv : intervals) {
    if (!(iv.hi > iv.lo)) throw std::invalid_argument("Arc: interval needs hi > lo");
    if (iv.hi - iv.lo >= 1.0) {
      out.push_back({0.0, 1.0});
      continue;
    }
    const double lo = wrap_unit(iv.lo);
    const double len = iv.hi - iv.lo;
    if (lo + len <= 1.0) {
      out.push_back({lo, lo + len});
    } else {
      out.push_back({lo, 1.0});
      out.push_back({0.0, lo + len - 1.0});
    }
  }
  return out;
}

void Arc::validate() const {
  if (intervals.empty()) throw std::invalid_argument("Arc: needs at least one interval");
  const double total = measure();
  if (!(total > 0.0) || total > 1.0 + 1e-12)
    throw std::invalid_argument("Arc: total measure must lie in (0, 1]");

  auto pieces = normalized();
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].lo < pieces[i - 1].hi - 1e-12)
      throw std::invalid_argument("Arc: intervals must be disjoint");

  if (symmetric && total < 1.0) {
    // Mirror each piece through x -> -x and compare the normalized sets.
    Arc mirror;
    for (const auto& iv : intervals) mirror.intervals.push_back({-iv.hi, -iv.lo});
    auto mirrored = mirror.normalized();
    std::sort(mirrored.begin(), mirrored.end(),
              [](const auto& a, const auto& b) { return a.lo < b.lo; });
    if (mirrored.size() != pieces.size())
      throw std::invalid_argument("Arc: symmetric flag set but the set is not mirror-closed");
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (std::abs(mirrored[i].lo - pieces[i].lo) > 1e-12 ||
          std::abs(mirrored[i].hi - pieces[i].hi) > 1e-12)
        throw std::invalid_argument("Arc: symmetric flag set but the set is not mirror-closed");
  }
}

Arc Arc::full_torus() {
  Arc arc;
  arc.intervals.push_back({0.0, 1.0});
  arc.symmetric = true;
  return arc;
}

Arc Arc::symmetric_pair(double center, double half_width) {
  if (!(half_width > 0.0) || half_width >= 0.25)
    throw std::invalid_argument("Arc: half-width must lie in (0, 0.25)");
  Arc arc;
  arc.symmetric = true;
  const double c = wrap_unit(center);
  const double mirror = wrap_unit(-center);
  arc.intervals.push_back({c - half_width, c + half_width});
  if (std::abs(mirror - c) > 1e-15 && std::abs(std::abs(mirror - c) - 1.0) > 1e-15)
    arc.intervals.push_back({mirror - half_width, mirror + half_width});
  return arc;
}

ConcentrationReport arc_mass(const IntPolynomial& poly, double alpha, const Arc& arc,
                             std::int64_t m, const std::string& polynomial_id) {
  if (alpha <= 0.0) throw std::invalid_argument("arc_mass: alpha must be > 0");
  arc.validate();
  if (m < 1) throw std::invalid_argument("arc_mass: m must be >= 1");

  const auto pieces = arc.normalized();
  const ComplexSamples samples = evaluate_on_grid(poly, m);
  const Eigen::ArrayXd weights = abs_power(samples.values, alpha);
  const double ratio = mass_on_grid(weights, pieces, m, 10);

  const ComplexSamples refined = evaluate_on_grid(poly, 2 * m);
  const Eigen::ArrayXd weights2 = abs_power(refined.values, alpha);
  const double ratio2 = mass_on_grid(weights2, pieces, 2 * m, 10);

  ConcentrationReport report;
  report.arc = arc;
  report.alpha = alpha;
  report.mass_ratio = ratio;
  report.polynomial_id = polynomial_id;
  report.grid_size = m;
  report.boundary_error = std::abs(ratio2 - ratio);
  int p = 0;
  if (detail::even_integer_alpha(alpha, p) && 2 * p >= 4)
    report.even_bounds = even_concentration_bounds(2 * p);
  return report;
}

ConcentrationReport dilated_dirichlet_witness(std::int64_t dilation, std::int64_t n,
                                              double half_width, double alpha,
                                              std::optional<std::int64_t> grid) {
  if (dilation < 2) throw std::invalid_argument("dilated_dirichlet_witness: M must be >= 2");
  if (n < 2) throw std::invalid_argument("dilated_dirichlet_witness: N must be >= 2");
  if (1.0 / static_cast<double>(n) >= half_width)
    throw std::invalid_argument(
        "dilated_dirichlet_witness: spike half-width 1/N must be below the interval half-width");

  const Arc arc = Arc::symmetric_pair(1.0 / static_cast<double>(dilation), half_width);
  const IntPolynomial poly = dilate(dirichlet(n), dilation);
  std::int64_t m = grid ? *grid : default_dense_grid(alpha, poly.degree());
  m = std::max(m, static_cast<std::int64_t>(std::ceil(32.0 / (2.0 * half_width))));
  const std::string id =
      "dilated-dirichlet M=" + std::to_string(dilation) + " N=" + std::to_string(n);
  return arc_mass(poly, alpha, arc, m, id);
}

ConcentrationReport concentration_search(const Arc& arc, double alpha, std::int64_t budget,
                                         std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("concentration_search: budget must be >= 1");
  arc.validate();

  double min_len = 1.0;
  for (const auto& iv : arc.normalized()) min_len = std::min(min_len, iv.hi - iv.lo);

  struct Candidate {
    IntPolynomial poly;
    std::string id;
  };
  std::vector<Candidate> catalog;

  // Dilated kernels: mass in M spikes at the M-th roots of unity.
  for (std::int64_t m_dil = 2; m_dil <= 12; ++m_dil)
    for (std::int64_t n : {512, 4096})
      catalog.push_back({dilate(dirichlet(n), m_dil),
                         "dilated-dirichlet M=" + std::to_string(m_dil) + " N=" + std::to_string(n)});

  // Disjoint-support products (1 + z^s) * D_N(z^M), still 0/1.
  for (std::int64_t m_dil = 2; m_dil <= 12; ++m_dil) {
    for (std::int64_t s : {std::int64_t{1}, m_dil / 2}) {
      if (s < 1 || s >= m_dil) continue;
      for (std::int64_t n : {512, 2048}) {
        const IntPolynomial base = dilate(dirichlet(n), m_dil);
        const IntPolynomial shifted = [&] {
          std::vector<std::int64_t> c(base.size() + static_cast<std::size_t>(s), 0);
          for (std::size_t k = 0; k < base.size(); ++k) {
            c[k] += base[k];
            c[k + static_cast<std::size_t>(s)] += base[k];
          }
          return IntPolynomial(std::move(c));
        }();
        catalog.push_back({shifted, "dilated-product M=" + std::to_string(m_dil) +
                                        " s=" + std::to_string(s) + " N=" + std::to_string(n)});
      }
    }
  }

  // Random binary sequences, one stream per catalog slot.
  SplitMix64 rng(seed);
  for (int i = 0; i < 16; ++i)
    catalog.push_back({from_bits(random_binary(512, 0.5, rng.fork(static_cast<std::uint64_t>(i)).next())),
                       "random-binary q=512 d=0.5 i=" + std::to_string(i)});

  ConcentrationReport best;
  best.mass_ratio = -1.0;
  std::int64_t evaluated = 0;
  for (const auto& candidate : catalog) {
    if (evaluated >= budget) break;
    ++evaluated;
    std::int64_t m = default_dense_grid(alpha, candidate.poly.degree());
    m = std::max(m, static_cast<std::int64_t>(std::ceil(32.0 / min_len)));
    const ConcentrationReport report = arc_mass(candidate.poly, alpha, arc, m, candidate.id);
    if (report.mass_ratio > best.mass_ratio) best = report;
  }
  return best;
}

}  // namespace flatkit
