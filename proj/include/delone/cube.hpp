/* Apache License, Version 2.0 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "delone/complex.hpp"

namespace delone {

/// Delaunay tetrahedra of one distorted unit cube [i,i+1]x[j,j+1]x[k,k+1].
struct CubeCell {
  std::array<long, 3> corner{};
  std::size_t tets = 0;
  double volume = 0.0;         // sum of its tetrahedra
  double top_volume = -1.0;    // tetrahedron on the four layer-(k+1) points, -1 if absent
  double bottom_volume = -1.0; // tetrahedron on the four layer-k points
  double min_volume = 0.0;
};

struct CubeReport {
  double W = 0.0;
  std::size_t points = 0;
  std::size_t cells = 0;
  std::vector<CubeCell> cubes;  // interior cubes only, sorted by corner
  std::size_t stray_tets = 0;   // certified tetrahedra spanning more than one cube
  std::size_t cospherical_facets = 0;   // ambiguous facets, all near the window boundary
  std::size_t cospherical_interior = 0; // ambiguous facets next to an interior cube (must be 0)
  double min_volume_certified = 0.0;  // over cells whose circumball lies in the window
  double min_volume_all = 0.0;
};

/// Lattice layer index of a displaced z coordinate.
long cube_layer(double z);

/// Delaunay triangulation of distorted_cubic_window(W) grouped by unit
/// cube. A cube is interior when its center is at least 2.5 inside the
/// window, which keeps every tetrahedron near it certified.
CubeReport analyze_distorted_cubes(double W);

}  // namespace delone
