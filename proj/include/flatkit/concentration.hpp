#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatkit/polynomial.hpp"

namespace flatkit {

// Union of disjoint open intervals on the torus, endpoints in turn units.
// Grid membership is half-open [lo, hi) so disjoint arcs add exactly.
struct Arc {
  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
  };

  std::vector<Interval> intervals;
  bool symmetric = false;

  double measure() const;
  // Intervals normalized into [0,1), wrap-around pieces split in two.
  std::vector<Interval> normalized() const;
  void validate() const;  // disjointness, measure in (0,1], symmetry flag

  static Arc full_torus();
  // (center - half_width, center + half_width) together with its mirror
  // image; collapses to one interval when the mirror coincides.
  static Arc symmetric_pair(double center, double half_width);
};

struct ConcentrationReport {
  Arc arc;
  double alpha = 0.0;
  double mass_ratio = 0.0;
  std::string polynomial_id;
  std::int64_t grid_size = 0;
  double boundary_error = 0.0;  // ratio shift under one grid refinement
  std::optional<std::pair<double, double>> even_bounds;  // context for even alpha
};

// Ratio of the grid mean of |P|^alpha over points inside E to the
// full-grid mean. Errors out when any interval holds fewer than 10 points.
ConcentrationReport arc_mass(const IntPolynomial& poly, double alpha, const Arc& arc,
                             std::int64_t m, const std::string& polynomial_id = "");

// D_N(z^M): an admissible 0/1 polynomial whose mass sits in M spikes at
// the M-th roots of unity; the arc around +/-1/M captures its share.
ConcentrationReport dilated_dirichlet_witness(std::int64_t dilation, std::int64_t n,
                                              double half_width, double alpha,
                                              std::optional<std::int64_t> grid = std::nullopt);

// Best observed mass ratio over a fixed catalog (dilated kernels, disjoint
// two-block products, random binary sequences): an empirical lower bound
// for the arc, never a claim about the true concentration level.
ConcentrationReport concentration_search(const Arc& arc, double alpha, std::int64_t budget,
                                         std::uint64_t seed);

}  // namespace flatkit
