/* Apache License, Version 2.0 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace delone {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  degenerate_simplex,
  non_generic,
  non_manifold,
  overlapping_cells,
  coverage_mismatch,
  missing_vertex,
  boundary_facet,
  locally_delaunay,
  non_convex,
  interior_point,
  window_exhausted,
  covering_failed,
  sampler_starved,
  degenerate_strips,
  alpha_out_of_range,
  too_large,
  no_reverse_flip,
  io,
};

std::string_view to_string(ErrorCode code);

/// Precondition or validity failure raised by every module. The code is
/// stable and machine readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace delone
