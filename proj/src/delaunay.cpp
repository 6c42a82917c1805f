/* Apache License, Version 2.0 */

#include "delone/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "delone/error.hpp"
#include "delone/hull.hpp"
#include "delone/parallel.hpp"
#include "delone/point_grid.hpp"

namespace delone {
namespace {

void require_full_dimensional(const std::vector<Point>& pts, int d) {
  const int n = static_cast<int>(pts.size());
  if (n < d + 1) throw Error(ErrorCode::degenerate_simplex, "too few points to span R^d");
  for (const Point& p : pts) {
    if (p.dim() != d) throw Error(ErrorCode::dimension_mismatch, "mixed point dimensions");
    if (!p.is_finite()) throw Error(ErrorCode::invalid_argument, "non-finite coordinate");
  }
  // Grow an affinely independent set; each step needs an exact witness.
  std::vector<int> basis{0};
  auto independent = [&](int i) {
    if (basis.size() == 1) return !(pts[i] == pts[basis[0]]);
    if (static_cast<int>(basis.size()) == d) {
      std::array<Point, kMaxDim + 1> s;
      for (std::size_t k = 0; k < basis.size(); ++k) s[k] = pts[basis[k]];
      s[basis.size()] = pts[i];
      return orientation(std::span<const Point>(s.data(), basis.size() + 1)) != 0;
    }
    // d = 3 and two points chosen: collinearity via the three coordinate
    // projections.
    for (int drop = 0; drop < 3; ++drop) {
      std::array<Point, 3> s;
      const int basis_ids[3] = {basis[0], basis[1], i};
      for (int k = 0; k < 3; ++k) {
        Point q(2);
        int c = 0;
        for (int j = 0; j < 3; ++j)
          if (j != drop) q[c++] = pts[basis_ids[k]][j];
        s[k] = q;
      }
      if (orientation(s) != 0) return true;
    }
    return false;
  };
  for (int i = 1; i < n && static_cast<int>(basis.size()) < d + 1; ++i)
    if (independent(i)) basis.push_back(i);
  if (static_cast<int>(basis.size()) < d + 1)
    throw Error(ErrorCode::degenerate_simplex, d == 2 ? "all points are collinear" : "all points are coplanar");
}

struct LiftedFacets {
  std::vector<IdTuple> lower;
  std::vector<IdTuple> upper;
};

LiftedFacets lifted_hull(const std::vector<Point>& pts, int d) {
  std::vector<IncrementalHull::Coords> approx(pts.size());
  double scale = 0.0;
  for (const Point& p : pts) scale = std::max(scale, p.norm2());
  scale = scale > 0 ? 1.0 / scale : 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int k = 0; k < d; ++k) approx[i][k] = pts[i][k];
    approx[i][d] = pts[i].norm2() * scale;
  }
  IncrementalHull hull(d + 1, std::move(approx), [&](std::span<const int> ids) {
    std::array<Point, kMaxDim + 2> s;
    for (std::size_t k = 0; k < ids.size(); ++k) s[k] = pts[ids[k]];
    return lifted_orientation(std::span<const Point>(s.data(), ids.size()));
  });
  try {
    hull.build();
  } catch (const Error&) {
    throw Error(ErrorCode::non_generic, "all lifted points are cohyperplanar (cospherical input); jitter it");
  }
  LiftedFacets out;
  for (const IdTuple& f : hull.facets()) {
    std::array<Point, kMaxDim + 1> s;
    for (int k = 0; k < f.size(); ++k) s[k] = pts[f[k]];
    // orient(facet, apex + vertical) equals the projected orientation, so
    // a negative sign means the outward normal points down.
    const int o = orientation(std::span<const Point>(s.data(), f.size()));
    if (o < 0) out.lower.push_back(f.sorted());
    if (o > 0) out.upper.push_back(f.sorted());
  }
  return out;
}

TriangulationComplex delaunay_impl(std::vector<Point> points, int d, std::vector<IdTuple>* cospherical) {
  require_full_dimensional(points, d);
  LiftedFacets lf = lifted_hull(points, d);
  TriangulationComplex cx = TriangulationComplex::build(std::move(points), std::move(lf.lower));
  for (const IdTuple& facet : cx.interior_facets()) {
    const FacetCells& fc = *cx.incident(facet);
    const int opposite = cx.opposite_vertex(fc.cell[1], facet);
    if (in_sphere(cx.cell_points(fc.cell[0]).span(), cx.points()[opposite]) != SphereSide::on) continue;
    if (cospherical == nullptr)
      throw Error(ErrorCode::non_generic, "cospherical points; jitter the input to make it generic");
    cospherical->push_back(facet);
  }
  return cx;
}

}  // namespace

TriangulationComplex delaunay_2d(std::vector<Point> points) { return delaunay_impl(std::move(points), 2, nullptr); }
TriangulationComplex delaunay_3d(std::vector<Point> points) { return delaunay_impl(std::move(points), 3, nullptr); }

TriangulationComplex delaunay_tolerant(std::vector<Point> points, std::vector<IdTuple>& cospherical) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points");
  const int d = points[0].dim();
  return delaunay_impl(std::move(points), d, &cospherical);
}

TriangulationComplex delaunay(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points");
  const int d = points[0].dim();
  if (d != 2 && d != 3) throw Error(ErrorCode::dimension_mismatch, "Delaunay builder supports d = 2, 3");
  return delaunay_impl(std::move(points), d, nullptr);
}

EmptinessReport verify_empty(const TriangulationComplex& cx, std::size_t brute_force_limit) {
  EmptinessReport rep;
  const auto& pts = cx.points();
  const std::size_t nc = cx.num_cells();
  rep.cells_checked = nc;
  rep.brute_force = pts.size() <= brute_force_limit;
  std::vector<std::size_t> bad(nc, 0);
  if (rep.brute_force) {
    parallel_for(nc, [&](std::size_t c) {
      const SimplexPoints sp = cx.cell_points(static_cast<int>(c));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (cx.cells()[c].contains(static_cast<int>(i))) continue;
        if (in_sphere(sp.span(), pts[i]) != SphereSide::outside) ++bad[c];
      }
    });
  } else {
    double mean_r = 0.0;
    std::vector<Circumsphere> spheres(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      spheres[c] = circumsphere(cx.cell_points(static_cast<int>(c)).span());
      mean_r += spheres[c].radius;
    }
    mean_r = nc ? mean_r / static_cast<double>(nc) : 1.0;
    const PointGrid grid(pts, std::max(mean_r, 1e-12));
    parallel_for(nc, [&](std::size_t c) {
      const SimplexPoints sp = cx.cell_points(static_cast<int>(c));
      const double reach = spheres[c].radius * (1.0 + 1e-6) + 1e-12;
      grid.for_each_within(spheres[c].center, reach, [&](int i) {
        if (cx.cells()[c].contains(i)) return;
        if (in_sphere(sp.span(), pts[i]) != SphereSide::outside) ++bad[c];
      });
    });
  }
  for (std::size_t b : bad) rep.violations += b;
  return rep;
}

RadonPair radon_two_triangulations(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "no points");
  const int d = points[0].dim();
  if (static_cast<int>(points.size()) != d + 2)
    throw Error(ErrorCode::invalid_argument, "need exactly d+2 points");
  require_full_dimensional(points, d);
  LiftedFacets lf = lifted_hull(points, d);
  if (static_cast<int>(lf.lower.size() + lf.upper.size()) != d + 2)
    throw Error(ErrorCode::non_generic, "d+1 of the points lie in a hyperplane");
  if (lf.lower.size() == 1 || lf.upper.size() == 1)
    throw Error(ErrorCode::interior_point, "one point lies inside the hull of the others");
  RadonPair out;
  out.D = TriangulationComplex::build(points, std::move(lf.lower));
  out.T = TriangulationComplex::build(std::move(points), std::move(lf.upper));
  return out;
}

TriangulationComplex restrict_delaunay(const TriangulationComplex& D, const TriangulationComplex& region) {
  const CellLocator locator(region);
  std::vector<IdTuple> kept;
  for (int c = 0; c < static_cast<int>(D.num_cells()); ++c) {
    const SimplexPoints sp = D.cell_points(c);
    const Point g = centroid(sp.span());
    bool inside = locator.contains(g);
    for (int i = 0; inside && i < sp.n; ++i) {
      inside = locator.contains(sp.p[i]);
      // Edge probes are pulled toward the centroid so that rounding cannot
      // push them off a shared boundary.
      for (int j = i + 1; inside && j < sp.n; ++j)
        inside = locator.contains((sp.p[i] + sp.p[j]) * 0.45 + g * 0.1);
    }
    if (inside) kept.push_back(D.cells()[c]);
  }
  TriangulationComplex out = TriangulationComplex::build(D.points(), std::move(kept), Coverage::none);
  out.set_window(D.window());
  return out;
}

}  // namespace delone
