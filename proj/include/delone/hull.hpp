/* Apache License, Version 2.0 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "delone/point.hpp"

namespace delone {

/// Incremental convex hull in R^D (D <= kMaxDim) over an abstract index
/// space. The orientation callback receives D+1 ids: a facet's D vertices
/// followed by a query, and must return the exact sign of the corresponding
/// determinant. Approximate coordinates are used only to pick a
/// well-conditioned initial simplex.
///
/// Facets are reported outward oriented: orient(facet, x) > 0 iff x lies
/// strictly beyond the facet's hyperplane. Points coplanar with a facet are
/// never considered beyond it, so coplanar hull faces come out as several
/// coplanar simplicial facets.
class IncrementalHull {
 public:
  using OrientFn = std::function<int(std::span<const int>)>;
  using Coords = std::array<double, kMaxDim>;

  IncrementalHull(int dim, std::vector<Coords> approx, OrientFn orient, std::uint64_t seed = 1);

  /// Throws Error(non_generic) when all points lie in one hyperplane.
  void build();

  std::vector<IdTuple> facets() const;
  /// Ids that did not end up as hull vertices (interior or duplicate).
  const std::vector<int>& skipped() const noexcept { return skipped_; }

 private:
  struct Facet {
    IdTuple v;
    std::array<int, kMaxDim> nb{};
    std::vector<int> outside;
    bool alive = true;
    std::uint32_t mark = 0;
  };

  int orient(const Facet& f, int q) const;
  void initial_simplex(std::vector<int>& simplex);
  void insert(int facet_index, int p);

  int dim_;
  std::vector<Coords> approx_;
  OrientFn orient_;
  std::uint64_t seed_;
  std::vector<Facet> facets_;
  std::vector<int> skipped_;
  std::vector<int> pending_;
  std::uint32_t epoch_ = 0;
};

}  // namespace delone
