/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "delone/complex.hpp"

namespace delone {

struct FlipRecord {
  IdTuple facet;      // edge removed
  IdTuple new_facet;  // edge inserted
  double before_max_circumradius = 0.0;  // over the two cells involved
  double after_max_circumradius = 0.0;
};

/// True iff the vertex opposite an interior facet lies strictly outside the
/// circumsphere of the cell across it. Throws boundary_facet for a boundary
/// facet and non_generic when the vertex is cospherical.
bool is_locally_delaunay(const TriangulationComplex& cx, const IdTuple& facet);

/// Directed flip toward Delaunay of one planar edge. Throws locally_delaunay
/// if the edge already is, non_convex if its quadrilateral is not convex.
FlipRecord flip(TriangulationComplex& cx, const IdTuple& edge);

struct LegalizeResult {
  TriangulationComplex complex;
  std::vector<FlipRecord> flips;
};

/// Lawson flipping with a FIFO queue seeded by all interior edges.
LegalizeResult legalize_to_delaunay(TriangulationComplex cx);

/// Random walk in the flip graph: `steps` undirected flips of uniformly
/// chosen interior edges whose quadrilateral is strictly convex. Planar only.
TriangulationComplex random_flip_walk(TriangulationComplex cx, std::size_t steps, std::uint64_t seed);

/// Largest circumradius over all cells.
double uniform_bound_q(const TriangulationComplex& cx);

/// Cells whose circumball lies inside the window ball shrunk by `margin`.
/// Without window information every cell qualifies.
std::vector<int> interior_cells(const TriangulationComplex& cx, double margin = 0.0);

/// Largest circumradius over interior_cells(cx, 0). For a Delaunay
/// triangulation of a window these are the cells certified empty in the
/// whole point set.
double interior_bound_q(const TriangulationComplex& cx);

}  // namespace delone
