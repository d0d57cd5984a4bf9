#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatkit/families.hpp"
#include "flatkit/sequences.hpp"

namespace flatkit {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;   // RMS residual of the fit
  double predicted = 0.0;  // exponent expected from the growth class
};

// Rows of (size parameter, named metrics), sorted by size; the fit, when
// present, is least squares on log-log points with the smallest size
// dropped (asymptotic claims; the smallest sizes are pre-asymptotic).
struct TrendTable {
  std::string name;
  std::vector<std::string> columns;  // first column is the size parameter
  std::vector<std::vector<double>> rows;
  std::optional<LogLogFit> fit;
  std::string fit_metric;  // which column the fit tracks
};

struct WitnessRow {
  std::int64_t q = 0;
  double deviation = 0.0;        // || |P/sqrt(q)| - 1 ||_{2p}
  double density = 0.0;          // |S_q| / q
  double norm_ratio = 0.0;       // ||2Q||_{2p} / ||D_q||_{2p}
  double arc_mass = 0.0;         // mass of |2Q/sqrt(q)|^{2p} on (-delta, delta)
  double newman_ratio = 0.0;     // ||Q||_4 / ||Q||_2
  double tail_value = 0.0;       // integral of |D_q/sqrt(q)|^{2p} off (-delta, delta)
  double tail_bound_printed = 0.0;
  double tail_bound_direct = 0.0;  // sharper non-printed bound
  double decomposition_gap = 0.0;  // | ||P||-||(2Q-D)/sqrt(q)|| | on one grid
};

struct WitnessPanel {
  FamilySpec family;
  int p = 2;
  double delta = 0.05;
  double concentration_lower = 0.0;  // even-level interval for 2p, context
  double concentration_upper = 0.0;
  std::vector<WitnessRow> rows;
};

struct ZeroDensityRecord {
  std::int64_t q = 0;
  std::int64_t support = 0;
  double density = 0.0;
  double alpha = 0.0;
  double c = 1.0;
  double single_node_term = 0.0;  // (1/q) |Q(1)/sqrt(q)|^alpha
  double norm_power = 0.0;        // ||Q/sqrt(q)||_alpha^alpha
};

// ||D_N||_p^p / N^(p-1) against delta_p, with the decay rate of the
// deviation fitted and compared to the remainder growth class.
TrendTable dirichlet_asymptotics(double p, const std::vector<std::int64_t>& n_list);

// ||Q_q / sqrt(|S_q|)||_alpha^alpha for Bernoulli(d) supports, averaged
// over `seeds` streams per size; slope compared against alpha/2 - 1.
// d = 1 is accepted as the deterministic all-ones family.
TrendTable density_growth(double density, double alpha, const std::vector<std::int64_t>& q_list,
                          int seeds, std::uint64_t seed);

// The single-node lower bound at z = 1 next to the actual norm power:
// flatness forces the support density of 0/1 polynomials to zero.
ZeroDensityRecord zero_density_bound(const BinarySequence& q, double alpha, double c = 1.0);

// Per-q panel of every proof-chain observable at alpha = 2p for the given
// sign family, using the plus-variant support of the sign split.
WitnessPanel flatness_witness(const FamilySpec& family, int p, double delta,
                              const std::vector<std::int64_t>& size_list);

// Dirichlet tail mass against the printed bound, over a (q, alpha, delta)
// sweep; every computed value must sit below the bound.
struct TailBoundRow {
  std::int64_t q = 0;
  double alpha = 0.0;
  double delta = 0.0;
  double tail_value = 0.0;
  double bound_printed = 0.0;
  double bound_direct = 0.0;
  bool holds = false;
};
std::vector<TailBoundRow> dirichlet_tail_sweep(const std::vector<std::int64_t>& q_list,
                                               const std::vector<double>& alphas,
                                               const std::vector<double>& deltas);

}  // namespace flatkit
