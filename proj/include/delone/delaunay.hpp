/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <vector>

#include "delone/complex.hpp"

namespace delone {

/// Delaunay triangulation as the projected lower hull of the lifted points.
/// Throws non_generic when d+2 points are cospherical across a facet and
/// degenerate_simplex when the points span less than R^d.
TriangulationComplex delaunay_2d(std::vector<Point> points);
TriangulationComplex delaunay_3d(std::vector<Point> points);
/// Dispatches on the point dimension.
TriangulationComplex delaunay(std::vector<Point> points);

/// Like delaunay(), but interior facets whose two opposite vertices are
/// cospherical with it are collected instead of rejected. The cells around
/// such a facet are one valid choice among several.
TriangulationComplex delaunay_tolerant(std::vector<Point> points, std::vector<IdTuple>& cospherical);

struct EmptinessReport {
  std::size_t cells_checked = 0;
  std::size_t violations = 0;
  bool brute_force = false;  // every point against every cell
  bool pass() const noexcept { return violations == 0; }
};

/// Checks that no point of the complex lies inside or on the circumsphere
/// of a cell it is not a vertex of. Up to `brute_force_limit` points the scan
/// is all-pairs; above it candidates come from a grid (still exhaustive).
EmptinessReport verify_empty(const TriangulationComplex& cx, std::size_t brute_force_limit = 200);

struct RadonPair {
  TriangulationComplex D;  // lower lifted facets (Delaunay)
  TriangulationComplex T;  // upper lifted facets (the other triangulation)
};

/// The two triangulations of d+2 points in convex position. Throws
/// interior_point when one point lies inside the hull of the others.
RadonPair radon_two_triangulations(std::vector<Point> points);

/// Cells of D that lie in the underlying space of `region`: each vertex, the
/// centroid, and a point near each edge midpoint must be located in region.
TriangulationComplex restrict_delaunay(const TriangulationComplex& D, const TriangulationComplex& region);

}  // namespace delone
