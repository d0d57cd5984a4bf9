#include "flatkit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "flatkit/concentration.hpp"
#include "flatkit/constants.hpp"
#include "flatkit/grid.hpp"
#include "flatkit/norms.hpp"
#include "flatkit/polynomial.hpp"
#include "flatkit/rng.hpp"

namespace flatkit {

namespace {

void require_sizes(const std::vector<std::int64_t>& sizes, const char* what) {
  if (sizes.size() < 4) throw std::invalid_argument(std::string(what) + ": needs >= 4 sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw std::invalid_argument(std::string(what) + ": sizes must be strictly increasing");
}

LogLogFit fit_loglog(const std::vector<std::pair<double, double>>& points, double predicted) {
  LogLogFit fit;
  fit.predicted = predicted;
  const auto n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

double norm_power(const IntPolynomial& poly, double alpha, double scale) {
  int p = 0;
  if (detail::even_integer_alpha(alpha, p)) return exact_even_norm(poly, p, scale).value;
  return std::pow(grid_norm(poly, NormQuery{alpha, scale, std::nullopt}).value, alpha);
}

Arc centered_arc(double delta) {
  Arc arc;
  arc.intervals.push_back({-delta, delta});
  arc.symmetric = true;
  return arc;
}

double printed_tail_bound(std::int64_t q, double alpha, double delta) {
  return std::pow(2.0 / std::sin(delta / 2.0), alpha) / std::sqrt(static_cast<double>(q));
}

double direct_tail_bound(std::int64_t q, double alpha, double delta) {
  // |D_q(e^{2 pi i t})| <= 1/sin(pi t) off the peak, measure 1 - 2*delta.
  return std::pow(static_cast<double>(q), -alpha / 2.0) * (1.0 - 2.0 * delta) /
         std::pow(std::sin(std::numbers::pi * delta), alpha);
}

struct TailParts {
  double tail_value = 0.0;
  double full_power = 0.0;
};

TailParts dirichlet_tail(std::int64_t q, double alpha, double delta) {
  const IntPolynomial d = dirichlet(q);
  const std::int64_t m = default_dense_grid(alpha, d.degree());
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  const ComplexSamples samples = evaluate_on_grid(d, m);
  const double full = detail::mean_abs_power(samples.values, scale, alpha);
  const ConcentrationReport mass = arc_mass(d, alpha, centered_arc(delta), m, "dirichlet");
  return {(1.0 - mass.mass_ratio) * full, full};
}

}  // namespace

TrendTable dirichlet_asymptotics(double p, const std::vector<std::int64_t>& n_list) {
  if (p <= 1.0) throw std::invalid_argument("dirichlet_asymptotics: p must be > 1");
  require_sizes(n_list, "dirichlet_asymptotics");

  int half = 0;
  const bool even = detail::even_integer_alpha(p, half);
  const double reference = even ? delta_even_exact(static_cast<int>(p)) : delta_p(p);

  TrendTable table;
  table.name = "dirichlet_asymptotics";
  table.columns = {"N", "norm_ratio", "deviation"};
  table.fit_metric = "deviation";

  std::vector<std::pair<double, double>> fit_points;
  for (std::int64_t n : n_list) {
    // The deviation signal decays like the remainder; the default grid is
    // too coarse to resolve it at large N for non-even p.
    const double power =
        even ? norm_power(dirichlet(n), p, 1.0)
             : std::pow(grid_norm(dirichlet(n),
                                  NormQuery{p, 1.0, 4 * default_dense_grid(p, n - 1)})
                            .value,
                        p);
    const double ratio = power / std::pow(static_cast<double>(n), p - 1.0);
    const double deviation = ratio - reference;
    table.rows.push_back({static_cast<double>(n), ratio, deviation});
    if (deviation != 0.0)
      fit_points.push_back({static_cast<double>(n), std::abs(deviation)});
  }

  if (fit_points.size() > static_cast<std::size_t>(4)) fit_points.erase(fit_points.begin());
  if (fit_points.size() >= 4) {
    const double predicted = p >= 3.0 ? -2.0 : -(p - 1.0);
    table.fit = fit_loglog(fit_points, predicted);
  }
  return table;
}

TrendTable density_growth(double density, double alpha, const std::vector<std::int64_t>& q_list,
                          int seeds, std::uint64_t seed) {
  if (alpha <= 2.0) throw std::invalid_argument("density_growth: alpha must be > 2");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("density_growth: density must lie in (0,1]");
  if (seeds < 1) throw std::invalid_argument("density_growth: needs >= 1 seeds");
  require_sizes(q_list, "density_growth");

  TrendTable table;
  table.name = "density_growth";
  table.columns = {"q", "norm_power_mean"};
  table.fit_metric = "norm_power_mean";

  SplitMix64 root(seed);
  std::vector<std::pair<double, double>> fit_points;
  for (std::int64_t q : q_list) {
    double acc = 0.0;
    const int streams = density == 1.0 ? 1 : seeds;
    for (int s = 0; s < streams; ++s) {
      const BinarySequence bits =
          density == 1.0 ? BinarySequence(std::vector<int>(static_cast<std::size_t>(q), 1))
                         : random_binary(q, density, root.next());
      const std::int64_t support = bits.support_size();
      if (support == 0)
        throw std::invalid_argument(
            "density_growth: drew an all-zero sample; rerun with a different seed");
      acc += norm_power(from_bits(bits), alpha, 1.0 / std::sqrt(static_cast<double>(support)));
    }
    const double mean = acc / static_cast<double>(streams);
    table.rows.push_back({static_cast<double>(q), mean});
    fit_points.push_back({static_cast<double>(q), mean});
  }

  if (fit_points.size() > 4) fit_points.erase(fit_points.begin());
  if (fit_points.size() >= 4) table.fit = fit_loglog(fit_points, alpha / 2.0 - 1.0);
  return table;
}

ZeroDensityRecord zero_density_bound(const BinarySequence& q, double alpha, double c) {
  if (alpha <= 2.0) throw std::invalid_argument("zero_density_bound: alpha must be > 2");
  const std::int64_t support = q.support_size();
  if (support == 0) throw std::invalid_argument("zero_density_bound: empty support");

  ZeroDensityRecord record;
  record.q = static_cast<std::int64_t>(q.size());
  record.support = support;
  record.density = q.density();
  record.alpha = alpha;
  record.c = c;
  const double qd = static_cast<double>(record.q);
  // (1/q) |Q(1)/sqrt(q)|^alpha = q^(alpha/2 - 1) * density^alpha.
  record.single_node_term = std::pow(qd, alpha / 2.0 - 1.0) * std::pow(record.density, alpha);
  record.norm_power = norm_power(from_bits(q), alpha, 1.0 / std::sqrt(qd));
  return record;
}

WitnessPanel flatness_witness(const FamilySpec& family, int p, double delta,
                              const std::vector<std::int64_t>& size_list) {
  if (p < 2) throw std::invalid_argument("flatness_witness: p must be >= 2");
  if (!(delta > 0.0 && delta < 0.25))
    throw std::invalid_argument("flatness_witness: delta must lie in (0, 1/4)");
  if (size_list.empty()) throw std::invalid_argument("flatness_witness: needs sizes");

  const double alpha = 2.0 * p;
  WitnessPanel panel;
  panel.family = family;
  panel.p = p;
  panel.delta = delta;
  const auto bounds = even_concentration_bounds(2 * p);
  panel.concentration_lower = bounds.first;
  panel.concentration_upper = bounds.second;

  const Arc arc = centered_arc(delta);
  for (std::int64_t size : size_list) {
    const SignSequence s = make_sign_family(family, size);
    const auto q = static_cast<std::int64_t>(s.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const IntPolynomial poly = from_signs(s);
    const auto [eta, eta_prime] = split_littlewood(s);
    const IntPolynomial q_poly = from_bits(eta);
    const IntPolynomial d_poly = dirichlet(q);
    const IntPolynomial two_q = linear_combination(2, q_poly, 0, q_poly);

    WitnessRow row;
    row.q = q;
    row.deviation = flatness_deviation(poly, 1.0, NormQuery{alpha, scale, std::nullopt}).value;
    row.density = eta.density();
    row.norm_ratio = norm_ratio(two_q, d_poly, alpha);
    const std::int64_t m = default_dense_grid(alpha, q - 1);
    row.arc_mass = arc_mass(q_poly, alpha, arc, m, "plus-support").mass_ratio;
    row.newman_ratio = newman_ratio(eta);
    const TailParts tail = dirichlet_tail(q, alpha, delta);
    row.tail_value = tail.tail_value;
    row.tail_bound_printed = printed_tail_bound(q, alpha, delta);
    row.tail_bound_direct = direct_tail_bound(q, alpha, delta);

    // 2Q - D reproduces sqrt(q) P coefficient by coefficient.
    const IntPolynomial recon = linear_combination(2, q_poly, -1, d_poly);
    const NormQuery query{alpha, scale, m};
    row.decomposition_gap = std::abs(grid_norm(poly, query).value - grid_norm(recon, query).value);

    panel.rows.push_back(row);
  }
  return panel;
}

std::vector<TailBoundRow> dirichlet_tail_sweep(const std::vector<std::int64_t>& q_list,
                                               const std::vector<double>& alphas,
                                               const std::vector<double>& deltas) {
  std::vector<TailBoundRow> rows;
  for (std::int64_t q : q_list) {
    for (double alpha : alphas) {
      for (double delta : deltas) {
        TailBoundRow row;
        row.q = q;
        row.alpha = alpha;
        row.delta = delta;
        row.tail_value = dirichlet_tail(q, alpha, delta).tail_value;
        row.bound_printed = printed_tail_bound(q, alpha, delta);
        row.bound_direct = direct_tail_bound(q, alpha, delta);
        row.holds = row.tail_value <= row.bound_printed;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace flatkit
