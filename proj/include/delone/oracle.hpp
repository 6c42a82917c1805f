/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "delone/complex.hpp"
#include "delone/functionals.hpp"

namespace delone {

/// All triangulations of a generic planar set (every point a vertex),
/// found by breadth-first search over the flip graph from the Delaunay
/// triangulation. n <= 9; throws too_large above.
std::vector<TriangulationComplex> enumerate_triangulations_2d(const std::vector<Point>& points);

using EdgeSet = std::vector<std::pair<int, int>>;

/// Independent enumeration: all sets of pairwise non-crossing segments of
/// maximum size 3n - 3 - h. n <= 7; throws too_large above.
std::set<EdgeSet> noncrossing_edge_sets(const std::vector<Point>& points);

/// Sorted edge list of a planar complex.
EdgeSet edge_set(const TriangulationComplex& cx);

struct MinSumResult {
  TriangulationComplex best;
  double best_value = 0.0;
  std::size_t ties = 0;             // triangulations within tolerance of the minimum
  std::size_t triangulations = 0;
  double delaunay_value = 0.0;
  bool delaunay_is_minimum = false;  // within (|min| + 1) * 1e-9
  std::vector<double> sums;          // in enumeration order (Delaunay first)
};

MinSumResult min_sum_triangulation(const std::vector<Point>& points, const FunctionalSpec& F);

/// Centroid rule on the s^d congruent pieces of the edgewise (Kuhn)
/// subdivision of the simplex, applied to (affine interpolant of |v|^2) - |x|^2.
double fe_quadrature(std::span<const Point> simplex, int s);

/// Delaunay cells by exhaustive emptiness: every non-degenerate (d+1)-subset
/// whose circumsphere has all other points strictly outside. O(n^{d+2}).
std::vector<IdTuple> delaunay_by_emptiness(const std::vector<Point>& points);

}  // namespace delone
