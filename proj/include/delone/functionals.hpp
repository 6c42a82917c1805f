/* Apache License, Version 2.0 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delone/complex.hpp"

namespace delone {

enum class FunctionalKind { F1, F2, F3, F4, F5, F6, FR, FE, AREA };

/// F1 = rho^c1, F2 = rho^c2 * vol, F3 = -inradius, F4 = sum a^2 / area,
/// F5 = sum a^2 * area, F6 = |centroid - circumcenter|^2 * area,
/// FR = vol * sum of squared edge lengths, FE = lifted volume, AREA = vol.
/// F3, F4, F6 are planar only.
struct FunctionalSpec {
  FunctionalKind kind = FunctionalKind::AREA;
  double c1 = 1.0;
  double c2 = 1.0;

  bool admits(int d) const noexcept;
  std::string to_string() const;
};

/// Grammar: "F1:c1=1.5", "F2:c2=2", "F3", "F4", "F5", "F6", "FR", "FE",
/// "AREA". Throws invalid_argument on anything else or out-of-range
/// parameters (c1 > 0, c2 >= 1).
FunctionalSpec parse_functional(std::string_view text);

/// Throws dimension_mismatch for an inadmissible dimension and
/// degenerate_simplex where the value needs a circumsphere or divides by
/// the area.
double eval(const FunctionalSpec& F, std::span<const Point> simplex);

/// Integral over the simplex of (affine interpolant of |v|^2) - |x|^2,
/// using a quadrature rule exact for quadratics.
double fe_lifted_volume(std::span<const Point> simplex);

/// Sum of F over the given cells (all cells if `cells` is empty).
double sum_over(const FunctionalSpec& F, const TriangulationComplex& cx, std::span<const int> cells = {});

struct EcalBounds {
  double e_hat = 0.0;
  double E_hat = 0.0;
  std::size_t accepted = 0;
  std::size_t attempts = 0;
};

/// Samples simplices inscribed in spheres of radius uniform in [r, q] with
/// vertices uniform on the sphere, keeping those with all edges >= 2r.
/// Throws sampler_starved when acceptances are too rare.
EcalBounds check_ecal_bounds(const FunctionalSpec& F, double r, double q, int d, std::size_t samples,
                             std::uint64_t seed);

struct InequalityCheck {
  bool pass = false;
  double left = 0.0;   // Delaunay side
  double right = 0.0;  // other side
  double margin() const noexcept { return right - left; }
  double tolerance() const noexcept;
};

/// Sum over the Delaunay half versus the other half of d+2 points.
InequalityCheck check_flip_inequality(const FunctionalSpec& F, std::vector<Point> points);

/// Sum over the Delaunay cells of Y lying in T' versus the sum over T'.
InequalityCheck check_g_inequality(const FunctionalSpec& F, const TriangulationComplex& T_prime,
                                   const std::vector<Point>& Y);

struct ClassReport {
  FunctionalSpec functional;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<std::vector<Point>> witness;
  double min_margin = 0.0;
  std::optional<double> e_hat;
  std::optional<double> E_hat;
  bool pass() const noexcept { return violations == 0; }
};

/// check_flip_inequality on `trials` seeded random generic configurations of
/// d+2 points in convex position.
ClassReport flip_class_suite(const FunctionalSpec& F, std::size_t trials, std::uint64_t seed, int d = 2);

/// check_g_inequality on seeded random planar sets with n in [n_min, n_max]
/// points: every triangulation from the exhaustive enumerator and, for each,
/// its subcomplex of non-Delaunay cells.
ClassReport g_class_suite(const FunctionalSpec& F, std::size_t trials, int n_min, int n_max, std::uint64_t seed);

/// Random points of the unit cube [0,1]^d.
std::vector<Point> random_points(int n, int d, std::uint64_t seed);

}  // namespace delone
