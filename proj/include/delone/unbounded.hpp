/* Apache License, Version 2.0 */

#pragma once

#include <cstddef>
#include <vector>

#include "delone/complex.hpp"
#include "delone/window.hpp"

namespace delone {

struct PrefixPhase {
  int phase = 0;
  int x = -1;  // boundary vertex the long edge starts from
  int y = -1;  // far endpoint of the long edge
  double edge_length = 0.0;
  int cone = -1;  // index of the sampled direction cone that supplied y
  std::size_t starred = 0;  // points added from outside the region
  std::size_t split = 0;    // points that subdivided existing cells
  std::size_t cells = 0;
};

struct UnboundedPrefix {
  TriangulationComplex complex;  // cells of the final phase over the window points
  std::vector<PrefixPhase> phases;
  double longest_edge = 0.0;
};

/// Finite phases of the inductive construction of a planar triangulation
/// that is not uniformly bounded: phase j attaches an edge longer than j at
/// a boundary vertex, stars in every point within distance j of the origin,
/// then subdivides cells until every covered point is a vertex. Each phase
/// result is validated as a complex. Throws window_exhausted when the window
/// cannot certify a long edge, non_generic on collinear configurations.
UnboundedPrefix build_unbounded_prefix(const PointSetWindow& window, int phases);

/// Number of sampled direction cones around the boundary vertex.
inline constexpr int kPrefixCones = 64;

}  // namespace delone
