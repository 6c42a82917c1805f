/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "delone/complex.hpp"
#include "delone/functionals.hpp"
#include "delone/window.hpp"

namespace delone {

/// lo, lo*ratio, lo*ratio^2, ... up to and including hi (hi appended when the
/// last step falls short of it by more than 1e-9 relative).
std::vector<double> geometric_grid(double lo, double hi, double ratio = 1.1);

/// Largest alpha with |z| + alpha + 2q <= W, q the interior circumradius
/// bound. Throws invalid_argument when the complex carries no window.
double max_safe_alpha(const TriangulationComplex& cx, const Point& z);

struct DensitySequence {
  Point center;
  std::vector<double> alphas;
  std::vector<std::size_t> cell_counts;  // all vertices within alpha of z
  std::vector<std::size_t> ball_counts;  // circumball inside B_alpha(z)
  std::vector<double> sums;              // F over the vertex-rule cells
  std::vector<double> ball_sums;
  std::vector<double> values;            // sums / (V_d alpha^d)
  double tail_fraction = 0.25;
  double liminf_tail = 0.0;              // min of values over the last tail_fraction
};

/// f(T, alpha) centered at z. Throws alpha_out_of_range naming the largest
/// admissible alpha when the grid reaches the window boundary, and
/// invalid_argument for an empty or non-increasing grid.
DensitySequence density_sequence(const TriangulationComplex& cx, const FunctionalSpec& F, const Point& z,
                                 const std::vector<double>& alphas);

struct GapReport {
  std::vector<double> alphas;
  std::vector<double> f_origin;
  std::vector<double> f_z;
  std::vector<double> gap;
  /// Sum of |F| over cells in B_{alpha+|z|} but not in B_{alpha-|z|}, over
  /// V_d alpha^d: both sums agree outside that annulus.
  std::vector<double> annulus_bound;
  double first_quartile_max = 0.0;
  double last_quartile_max = 0.0;
  bool decays() const noexcept { return last_quartile_max < first_quartile_max; }
};

/// Throws like density_sequence, with the window margin taken for the
/// larger ball B_{alpha+|z|}(0).
GapReport center_invariance_gap(const TriangulationComplex& cx, const FunctionalSpec& F, const Point& z,
                                const std::vector<double>& alphas);

struct NamedBound {
  std::string name;
  double value = 0.0;  // NaN when no closed form is used here
  std::string formula;
};

struct BoundsCertificate {
  int d = 2;
  double r = 0.0, R = 0.0, W = 0.0;
  double q = 0.0;  // measured over cells whose circumball lies in the window
  std::vector<NamedBound> theoretical;

  double min_cell_measure = 0.0;
  double max_cell_measure = 0.0;
  std::size_t max_vertex_degree = 0;
  std::size_t degree_bound = 0;  // S'' evaluated
  std::vector<double> alphas;
  std::vector<std::size_t> point_counts;
  std::vector<std::size_t> cell_counts;
  std::vector<std::size_t> annulus_point_counts;  // B_{alpha+1} minus B_alpha
  std::vector<std::size_t> annulus_cell_counts;
  double point_exponent = 0.0;
  double cell_exponent = 0.0;
  double annulus_point_exponent = 0.0;
  double annulus_cell_exponent = 0.0;

  bool volume_lower_ok = false;   // min cell measure >= v (d = 2)
  bool volume_upper_ok = false;   // max cell measure <= V
  bool point_counts_ok = false;   // within the packing and covering bounds at every alpha
  bool cell_counts_ok = false;
  bool degree_ok = false;
  bool exponents_ok() const noexcept;  // d +- 0.1 and (d-1) +- 0.2
  bool bounds_ok() const noexcept {
    return volume_lower_ok && volume_upper_ok && point_counts_ok && cell_counts_ok && degree_ok;
  }
};

/// Scans points and cells (cells restricted to circumballs inside the
/// window) over 36 evenly spaced radii from W/8 to W - 2q - 1.
BoundsCertificate count_certificate(const PointSetWindow& window, const TriangulationComplex& cx);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ComparisonRow {
  double alpha = 0.0;
  double f_D = 0.0;
  double f_T = 0.0;
  double sigma_T = 0.0;
  double sigma_D_prime = 0.0;  // Delaunay cells inside the underlying space of T(alpha)
  double sigma_D = 0.0;
  double first_bracket = 0.0;   // sigma_T - sigma_D_prime
  double second_bracket = 0.0;  // sigma_D_prime - sigma_D
  double slack = 0.0;           // measured annulus sum over V_d alpha^d
  double tolerance = 0.0;       // (|sigma_D| + |sigma_T| + 1) 1e-9
  bool ordered = false;         // sigma_D <= sigma_T + tolerance
  bool shrunk_in_prime = false;      // D(alpha - 2q) inside D'(alpha)
  bool shrunk_in_legalized = false;  // D(alpha - 6q) inside the legalized T(alpha)
};

struct ComparisonReport {
  FunctionalSpec functional;
  std::size_t requested_flips = 0;
  std::vector<IdTuple> reversed_edges;  // Delaunay edges that were flipped away
  double q_D = 0.0;
  double q_T = 0.0;
  std::vector<ComparisonRow> rows;
  bool all_ordered() const noexcept;
  bool brackets_nonnegative() const noexcept;
  bool containments_hold() const noexcept;
};

/// T from n seeded reverse flips of D = delaunay(window). A candidate edge is
/// locally Delaunay with a strictly convex quadrilateral of two cells of D not
/// touched by earlier flips, all four vertices at least 2q inside the window,
/// and no circle of the alpha grid leaving exactly one of them outside.
/// Throws no_reverse_flip when n > 0 and no candidate exists.
struct Perturbation {
  TriangulationComplex T;
  std::vector<IdTuple> reversed_edges;
};
Perturbation reverse_flip_perturbation(const TriangulationComplex& D, std::size_t flips, std::uint64_t seed,
                                       const std::vector<double>& alphas);

/// Densities of D and T over the grid plus the per-alpha decomposition
/// sigma_T = [sigma_T - sigma_D'] + [sigma_D' - sigma_D] + sigma_D. An empty
/// grid means geometric from 8q to the safe maximum. Planar only.
ComparisonReport main_theorem_comparison(const PointSetWindow& window, const FunctionalSpec& F, std::size_t flips,
                                         std::uint64_t seed, std::vector<double> alphas = {});

}  // namespace delone
