/* Apache License, Version 2.0 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "delone/geometry.hpp"
#include "delone/point.hpp"

namespace delone {

/// The d+1 (or fewer) points of one simplex, held by value.
struct SimplexPoints {
  std::array<Point, kMaxDim + 1> p;
  int n = 0;

  std::span<const Point> span() const noexcept { return {p.data(), static_cast<std::size_t>(n)}; }
};

/// Ball from which a finite window of a point set was cut.
struct WindowInfo {
  Point center;
  double radius = 0.0;
};

/// The one or two cells incident to a (d-1)-face.
struct FacetCells {
  std::array<int, 2> cell{-1, -1};
  int count = 0;
};

using FacetMap = std::unordered_map<IdTuple, FacetCells, IdTupleHash>;

enum class Coverage {
  convex_hull,  // union of cells must equal the hull of the referenced vertices
  none,         // arbitrary subcomplex (e.g. a restriction to a region)
};

/// A pure d-dimensional simplicial complex: points plus d-cells stored as
/// sorted vertex-id tuples, with facet adjacency. Points may outnumber the
/// referenced vertices (a complex built over a larger window).
class TriangulationComplex {
 public:
  TriangulationComplex() = default;

  /// Builds adjacency and validates: distinct valid ids, no flat cell, at
  /// most two cells per facet, locally non-overlapping cells, no unused
  /// point inside the underlying space, and (for Coverage::convex_hull with
  /// <= kCoverageCheckLimit cells) total measure equal to the hull volume.
  static TriangulationComplex build(std::vector<Point> points, std::vector<IdTuple> cells,
                                    Coverage coverage = Coverage::convex_hull);

  static constexpr std::size_t kCoverageCheckLimit = 10000;

  int dimension() const noexcept { return d_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<IdTuple>& cells() const noexcept { return cells_; }
  std::size_t num_cells() const noexcept { return cells_.size(); }
  const FacetMap& facets() const noexcept { return facets_; }

  SimplexPoints cell_points(int cell) const;
  SimplexPoints points_of(const IdTuple& ids) const;

  /// Incident cells of a facet, or nullptr if it is not a facet.
  const FacetCells* incident(const IdTuple& facet) const;
  bool is_interior(const IdTuple& facet) const;
  std::vector<IdTuple> interior_facets() const;
  /// The vertex of `cell` not on `facet`.
  int opposite_vertex(int cell, const IdTuple& facet) const;

  /// Sorted ids of all vertices referenced by some cell.
  std::vector<int> vertex_ids() const;

  /// Maximum circumradius over all cells (cached).
  double max_circumradius() const;

  const std::optional<WindowInfo>& window() const noexcept { return window_; }
  void set_window(std::optional<WindowInfo> w) { window_ = std::move(w); }

  /// Replaces the shared edge of two triangles by the other diagonal of
  /// their quadrilateral. 2D only; throws non_convex when the
  /// quadrilateral is not strictly convex. Returns the new edge.
  IdTuple flip_edge(const IdTuple& edge);

 private:
  void rebuild_adjacency();

  int d_ = 0;
  std::vector<Point> points_;
  std::vector<IdTuple> cells_;
  FacetMap facets_;
  std::optional<WindowInfo> window_;
  mutable std::optional<double> max_radius_;
};

/// Uniform-grid point location over the cells of a complex.
class CellLocator {
 public:
  explicit CellLocator(const TriangulationComplex& cx, std::span<const int> cell_subset = {});

  /// A cell whose closed simplex contains p, or -1.
  int locate(const Point& p) const;
  bool contains(const Point& p) const { return locate(p) >= 0; }

 private:
  const TriangulationComplex* cx_;
  Point lo_, hi_;
  std::array<int, kMaxDim> dims_{};
  double cell_size_ = 1.0;
  std::vector<std::vector<int>> buckets_;

  std::size_t bucket_of(const std::array<int, kMaxDim>& idx) const;
  std::array<int, kMaxDim> index_of(const Point& p) const;
};

/// Sum of cell measures.
double total_measure(const TriangulationComplex& cx);

/// Volume of the convex hull of the given points (d = 2, 3).
double convex_hull_volume(std::span<const Point> points);

}  // namespace delone
