/* Apache License, Version 2.0 */

#include "delone/complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "delone/error.hpp"
#include "delone/hull.hpp"

namespace delone {
namespace {

std::string ids_str(const IdTuple& t) {
  std::string s = "(";
  for (int i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace

TriangulationComplex TriangulationComplex::build(std::vector<Point> points,
                                                 std::vector<IdTuple> cells, Coverage coverage) {
  TriangulationComplex cx;
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "complex without points");
  cx.d_ = points.front().dim();
  if (cx.d_ < 2 || cx.d_ > 3) throw Error(ErrorCode::dimension_mismatch, "complex dimension must be 2 or 3");
  for (const Point& p : points) {
    if (p.dim() != cx.d_) throw Error(ErrorCode::dimension_mismatch, "mixed point dimensions");
    if (!p.is_finite()) throw Error(ErrorCode::invalid_argument, "non-finite coordinate");
  }
  const int n = static_cast<int>(points.size());
  for (IdTuple& c : cells) {
    if (c.size() != cx.d_ + 1)
      throw Error(ErrorCode::dimension_mismatch, "cell " + ids_str(c) + " has wrong arity");
    c = c.sorted();
    for (int i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n)
        throw Error(ErrorCode::invalid_argument, "cell " + ids_str(c) + " references a missing point");
      if (i > 0 && c[i] == c[i - 1])
        throw Error(ErrorCode::invalid_argument, "cell " + ids_str(c) + " repeats a vertex");
    }
  }
  cx.points_ = std::move(points);
  cx.cells_ = std::move(cells);

  for (std::size_t c = 0; c < cx.cells_.size(); ++c) {
    if (orientation(cx.cell_points(static_cast<int>(c)).span()) == 0)
      throw Error(ErrorCode::degenerate_simplex, "flat cell " + ids_str(cx.cells_[c]));
  }
  cx.rebuild_adjacency();

  // Two cells sharing a facet must lie on opposite sides of it.
  for (const auto& [facet, fc] : cx.facets_) {
    if (fc.count != 2) continue;
    SimplexPoints sp = cx.points_of(facet);
    sp.p[sp.n] = cx.points_[cx.opposite_vertex(fc.cell[0], facet)];
    const int s0 = orientation({sp.p.data(), static_cast<std::size_t>(sp.n + 1)});
    sp.p[sp.n] = cx.points_[cx.opposite_vertex(fc.cell[1], facet)];
    const int s1 = orientation({sp.p.data(), static_cast<std::size_t>(sp.n + 1)});
    if (s0 == s1)
      throw Error(ErrorCode::overlapping_cells, "cells overlap across facet " + ids_str(facet));
  }

  const std::vector<int> used = cx.vertex_ids();
  if (coverage == Coverage::convex_hull && !cx.cells_.empty() &&
      cx.cells_.size() <= kCoverageCheckLimit) {
    std::vector<Point> vs;
    vs.reserve(used.size());
    for (int id : used) vs.push_back(cx.points_[id]);
    const double hull = convex_hull_volume(vs);
    const double sum = total_measure(cx);
    if (std::fabs(sum - hull) > 1e-8 * hull) {
      throw Error(ErrorCode::coverage_mismatch, "cells cover " + std::to_string(sum) +
                                                    " but the hull has volume " + std::to_string(hull));
    }
  }

  if (used.size() < cx.points_.size() && !cx.cells_.empty()) {
    const CellLocator locator(cx);
    std::vector<char> is_used(cx.points_.size(), 0);
    for (int id : used) is_used[id] = 1;
    for (int i = 0; i < n; ++i) {
      if (!is_used[i] && locator.contains(cx.points_[i]))
        throw Error(ErrorCode::missing_vertex,
                    "point " + std::to_string(i) + " lies in the complex but is not a vertex");
    }
  }
  return cx;
}

void TriangulationComplex::rebuild_adjacency() {
  facets_.clear();
  facets_.reserve(cells_.size() * (d_ + 1));
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (int i = 0; i <= d_; ++i) {
      const IdTuple f = cells_[c].without(i);
      FacetCells& fc = facets_[f];
      if (fc.count == 2)
        throw Error(ErrorCode::non_manifold, "facet " + ids_str(f) + " has more than two cells");
      fc.cell[fc.count++] = static_cast<int>(c);
    }
  }
  max_radius_.reset();
}

SimplexPoints TriangulationComplex::cell_points(int cell) const { return points_of(cells_[cell]); }

SimplexPoints TriangulationComplex::points_of(const IdTuple& ids) const {
  SimplexPoints sp;
  sp.n = ids.size();
  for (int i = 0; i < ids.size(); ++i) sp.p[i] = points_[ids[i]];
  return sp;
}

const FacetCells* TriangulationComplex::incident(const IdTuple& facet) const {
  auto it = facets_.find(facet.sorted());
  return it == facets_.end() ? nullptr : &it->second;
}

bool TriangulationComplex::is_interior(const IdTuple& facet) const {
  const FacetCells* fc = incident(facet);
  return fc != nullptr && fc->count == 2;
}

std::vector<IdTuple> TriangulationComplex::interior_facets() const {
  std::vector<IdTuple> out;
  for (const auto& [f, fc] : facets_)
    if (fc.count == 2) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

int TriangulationComplex::opposite_vertex(int cell, const IdTuple& facet) const {
  for (int v : cells_[cell])
    if (!facet.contains(v)) return v;
  throw Error(ErrorCode::invalid_argument, "facet is not a face of the cell");
}

std::vector<int> TriangulationComplex::vertex_ids() const {
  std::vector<int> ids;
  ids.reserve(cells_.size() * (d_ + 1));
  for (const IdTuple& c : cells_) ids.insert(ids.end(), c.begin(), c.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

double TriangulationComplex::max_circumradius() const {
  if (!max_radius_) {
    double q = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c)
      q = std::max(q, circumsphere(cell_points(static_cast<int>(c)).span()).radius);
    max_radius_ = q;
  }
  return *max_radius_;
}

IdTuple TriangulationComplex::flip_edge(const IdTuple& edge_in) {
  if (d_ != 2) throw Error(ErrorCode::dimension_mismatch, "edge flips are planar only");
  const IdTuple edge = edge_in.sorted();
  auto it = facets_.find(edge);
  if (it == facets_.end()) throw Error(ErrorCode::invalid_argument, "not an edge " + ids_str(edge));
  if (it->second.count != 2) throw Error(ErrorCode::boundary_facet, "boundary edge " + ids_str(edge));
  const int c0 = it->second.cell[0];
  const int c1 = it->second.cell[1];
  const int a = opposite_vertex(c0, edge);
  const int b = opposite_vertex(c1, edge);
  const int u = edge[0];
  const int v = edge[1];

  const std::array<Point, 3> abu{points_[a], points_[b], points_[u]};
  const std::array<Point, 3> abv{points_[a], points_[b], points_[v]};
  const int su = orientation(abu);
  const int sv = orientation(abv);
  if (su == 0 || sv == 0 || su == sv)
    throw Error(ErrorCode::non_convex, "quadrilateral around " + ids_str(edge) + " is not convex");

  facets_.erase(it);
  cells_[c0] = IdTuple{a, b, u}.sorted();
  cells_[c1] = IdTuple{a, b, v}.sorted();
  const IdTuple ab = IdTuple{a, b}.sorted();
  facets_[ab] = FacetCells{{c0, c1}, 2};
  auto retarget = [&](int x, int y, int from, int to) {
    FacetCells& fc = facets_.at(IdTuple{x, y}.sorted());
    for (int k = 0; k < fc.count; ++k)
      if (fc.cell[k] == from) fc.cell[k] = to;
  };
  retarget(b, u, c1, c0);
  retarget(a, v, c0, c1);
  max_radius_.reset();
  return ab;
}

CellLocator::CellLocator(const TriangulationComplex& cx, std::span<const int> cell_subset)
    : cx_(&cx) {
  const int d = cx.dimension();
  std::vector<int> cells;
  if (cell_subset.empty()) {
    cells.resize(cx.num_cells());
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
  } else {
    cells.assign(cell_subset.begin(), cell_subset.end());
  }
  lo_ = Point(d);
  hi_ = Point(d);
  for (int k = 0; k < d; ++k) {
    lo_[k] = std::numeric_limits<double>::infinity();
    hi_[k] = -std::numeric_limits<double>::infinity();
  }
  double total_extent = 0.0;
  for (int c : cells) {
    const SimplexPoints sp = cx.cell_points(c);
    for (int k = 0; k < d; ++k) {
      double mn = sp.p[0][k], mx = sp.p[0][k];
      for (int i = 1; i < sp.n; ++i) {
        mn = std::min(mn, sp.p[i][k]);
        mx = std::max(mx, sp.p[i][k]);
      }
      lo_[k] = std::min(lo_[k], mn);
      hi_[k] = std::max(hi_[k], mx);
      total_extent += mx - mn;
    }
  }
  if (cells.empty()) {
    for (int k = 0; k < d; ++k) lo_[k] = hi_[k] = 0.0;
    dims_.fill(1);
    buckets_.resize(1);
    return;
  }
  cell_size_ = std::max(total_extent / (static_cast<double>(cells.size()) * d), 1e-12);
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) {
    dims_[k] = std::clamp(static_cast<int>((hi_[k] - lo_[k]) / cell_size_) + 1, 1, 4096);
    total *= static_cast<std::size_t>(dims_[k]);
  }
  while (total > 8 * cells.size() + 64) {
    cell_size_ *= 2.0;
    total = 1;
    for (int k = 0; k < d; ++k) {
      dims_[k] = std::clamp(static_cast<int>((hi_[k] - lo_[k]) / cell_size_) + 1, 1, 4096);
      total *= static_cast<std::size_t>(dims_[k]);
    }
  }
  buckets_.resize(total);
  for (int c : cells) {
    const SimplexPoints sp = cx.cell_points(c);
    Point mn = sp.p[0], mx = sp.p[0];
    for (int i = 1; i < sp.n; ++i)
      for (int k = 0; k < d; ++k) {
        mn[k] = std::min(mn[k], sp.p[i][k]);
        mx[k] = std::max(mx[k], sp.p[i][k]);
      }
    const auto a = index_of(mn);
    const auto b = index_of(mx);
    std::array<int, kMaxDim> idx = a;
    while (true) {
      buckets_[bucket_of(idx)].push_back(c);
      int k = 0;
      while (k < d) {
        if (++idx[k] <= b[k]) break;
        idx[k] = a[k];
        ++k;
      }
      if (k == d) break;
    }
  }
}

std::array<int, kMaxDim> CellLocator::index_of(const Point& p) const {
  std::array<int, kMaxDim> idx{};
  for (int k = 0; k < cx_->dimension(); ++k)
    idx[k] = std::clamp(static_cast<int>(std::floor((p[k] - lo_[k]) / cell_size_)), 0, dims_[k] - 1);
  return idx;
}

std::size_t CellLocator::bucket_of(const std::array<int, kMaxDim>& idx) const {
  std::size_t b = 0;
  for (int k = cx_->dimension() - 1; k >= 0; --k) b = b * static_cast<std::size_t>(dims_[k]) + idx[k];
  return b;
}

int CellLocator::locate(const Point& p) const {
  const int d = cx_->dimension();
  for (int k = 0; k < d; ++k)
    if (p[k] < lo_[k] || p[k] > hi_[k]) return -1;
  for (int c : buckets_[bucket_of(index_of(p))]) {
    if (simplex_contains(cx_->cell_points(c).span(), p) >= 0) return c;
  }
  return -1;
}

double total_measure(const TriangulationComplex& cx) {
  double s = 0.0;
  for (std::size_t c = 0; c < cx.num_cells(); ++c) s += measure(cx.cell_points(static_cast<int>(c)).span());
  return s;
}

double convex_hull_volume(std::span<const Point> points) {
  if (points.empty()) return 0.0;
  const int d = points[0].dim();
  std::vector<IncrementalHull::Coords> approx(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int k = 0; k < d; ++k) approx[i][k] = points[i][k];
  IncrementalHull hull(d, std::move(approx), [&](std::span<const int> ids) {
    std::array<Point, kMaxDim + 1> pts;
    for (std::size_t i = 0; i < ids.size(); ++i) pts[i] = points[ids[i]];
    return orientation(std::span<const Point>(pts.data(), ids.size()));
  });
  try {
    hull.build();
  } catch (const Error&) {
    return 0.0;
  }
  const Point c = centroid(points);
  double vol = 0.0;
  for (const IdTuple& f : hull.facets()) {
    std::array<Point, kMaxDim + 1> pts;
    for (int i = 0; i < f.size(); ++i) pts[i] = points[f[i]];
    pts[f.size()] = c;
    vol += measure(std::span<const Point>(pts.data(), f.size() + 1));
  }
  return vol;
}

}  // namespace delone
