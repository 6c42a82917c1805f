/* Apache License, Version 2.0 */

#include "delone/error.hpp"

namespace delone {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::degenerate_simplex: return "degenerate_simplex";
    case ErrorCode::non_generic: return "non_generic";
    case ErrorCode::non_manifold: return "non_manifold";
    case ErrorCode::overlapping_cells: return "overlapping_cells";
    case ErrorCode::coverage_mismatch: return "coverage_mismatch";
    case ErrorCode::missing_vertex: return "missing_vertex";
    case ErrorCode::boundary_facet: return "boundary_facet";
    case ErrorCode::locally_delaunay: return "locally_delaunay";
    case ErrorCode::non_convex: return "non_convex";
    case ErrorCode::interior_point: return "interior_point";
    case ErrorCode::window_exhausted: return "window_exhausted";
    case ErrorCode::covering_failed: return "covering_failed";
    case ErrorCode::sampler_starved: return "sampler_starved";
    case ErrorCode::degenerate_strips: return "degenerate_strips";
    case ErrorCode::alpha_out_of_range: return "alpha_out_of_range";
    case ErrorCode::too_large: return "too_large";
    case ErrorCode::no_reverse_flip: return "no_reverse_flip";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace delone
