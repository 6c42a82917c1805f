/* Apache License, Version 2.0 */

// Robust sign predicates. Each determinant is first evaluated in double
// precision and accepted when it clears a permanent-scaled error bound;
// otherwise the sign is recomputed exactly over the rationals.

#pragma once

#include <span>

#include "delone/point.hpp"

namespace delone {

enum class SphereSide { inside, outside, on };

/// Sign of det[p_1 - p_0, ..., p_d - p_0] for d+1 points of R^d.
int orientation(std::span<const Point> pts);

/// Sign of det[w_i, |w_i|^2] (i = 1..d+1, w_i = p_i - p_0) for d+2 points of
/// R^d. This is the orientation of the lifted points (p, |p|^2) in R^{d+1},
/// evaluated with the lift computed exactly.
int lifted_orientation(std::span<const Point> pts);

/// Position of `query` relative to the circumsphere of a non-degenerate
/// d-simplex. Throws Error(degenerate_simplex) for a flat simplex.
SphereSide in_sphere(std::span<const Point> simplex, const Point& query);

/// Closed-simplex membership: +1 strictly inside, 0 on the boundary,
/// -1 outside. The simplex must be non-degenerate.
int simplex_contains(std::span<const Point> simplex, const Point& query);

/// Number of exact fallbacks taken since start (diagnostics only).
long exact_fallback_count() noexcept;

}  // namespace delone
