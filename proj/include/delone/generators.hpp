/* Apache License, Version 2.0 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "delone/complex.hpp"
#include "delone/window.hpp"

namespace delone {

/// Z^d ∩ B_W. With a jitter seed every point moves by a uniformly random
/// vector of length at most eta = 1e-6 * r0 (r0 = 1/2); the declared
/// parameters become r = 1/2 - eta, R = sqrt(d)/2 + eta.
PointSetWindow lattice_window(int d, double W, std::optional<std::uint64_t> jitter_seed = std::nullopt);

/// delta_k = 1 / (2 + |k|) for the vertical displacement of layer k.
double cube_delta(long k);

/// Lattice point (i, j, k) moved to (i, j, k + (-1)^(i+j) delta_k), kept
/// when the displaced point lies in B_W. No jitter. r is the measured half
/// minimum distance, R = sqrt(3)/2 + 1/2.
PointSetWindow distorted_cubic_window(double W);

/// Random maximal 2r-separated set in B_W: dart throwing, then a fine probe
/// sweep inserting a slightly perturbed point wherever no point lies within
/// 2r. Requires R >= 2r and W > 4R. Throws covering_failed if the result does
/// not verify.
PointSetWindow poisson_delone_window(int d, double r, double R, double W, std::uint64_t seed);

struct DeloneReport {
  double min_pairwise_distance = 0.0;
  double max_hole_radius = 0.0;  // largest probe-to-nearest-point distance
  Point hole_witness;            // probe attaining it
  std::size_t probes = 0;
  bool packing_ok = false;
  bool covering_ok = false;
  bool pass() const noexcept { return packing_ok && covering_ok; }
};

/// Packing: min pairwise distance >= 2r (relative slack kGeoTolerance).
/// Covering: every probe of the grid of spacing R/4 inside B_{W-R} has a
/// point within R.
DeloneReport verify_delone_params(const PointSetWindow& window);

/// Moves every point by a uniformly random vector of length <= eta.
void jitter_points(std::vector<Point>& points, double eta, std::mt19937_64& rng);

/// Delaunay triangulation of the window; when the input is not generic the
/// window is jittered by 1e-6 * r (seeded) and the build retried. The window
/// records the jitter in its provenance.
TriangulationComplex delaunay_of_window(PointSetWindow& window, std::uint64_t seed);

/// Points of B_alpha(center): count, in a window.
std::size_t count_in_ball(const std::vector<Point>& points, const Point& center, double alpha);

}  // namespace delone
