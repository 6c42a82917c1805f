/* Apache License, Version 2.0 */

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/generators.hpp"
#include "delone/triangulation.hpp"
#include "delone/unbounded.hpp"

namespace delone {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::io;
}

std::vector<IdTuple> sorted_cells(const TriangulationComplex& cx) {
  std::vector<IdTuple> c = cx.cells();
  std::sort(c.begin(), c.end());
  return c;
}

// Fan triangulation from the lowest point, then inserting interior points
// by splitting the containing triangle: a valid but usually non-Delaunay
// triangulation.
TriangulationComplex naive_triangulation(const std::vector<Point>& pts) {
  const TriangulationComplex hull_only = delaunay_2d(pts);
  std::vector<int> hull;
  {
    // Boundary vertices in counter-clockwise order from the boundary edges.
    std::map<int, int> next;
    for (const auto& [f, fc] : hull_only.facets()) {
      if (fc.count != 1) continue;
      const int c = fc.cell[0];
      const int o = hull_only.opposite_vertex(c, f);
      const std::array<Point, 3> t{pts[f[0]], pts[f[1]], pts[o]};
      if (orientation(t) > 0) next[f[0]] = f[1];
      else next[f[1]] = f[0];
    }
    int v = next.begin()->first;
    do {
      hull.push_back(v);
      v = next[v];
    } while (v != hull.front());
  }
  std::vector<std::array<int, 3>> tris;
  for (std::size_t i = 1; i + 1 < hull.size(); ++i) tris.push_back({hull[0], hull[i], hull[i + 1]});
  std::vector<char> used(pts.size(), 0);
  for (int v : hull) used[v] = 1;
  for (int w = 0; w < static_cast<int>(pts.size()); ++w) {
    if (used[w]) continue;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto tri = tris[t];
      const std::array<Point, 3> s{pts[tri[0]], pts[tri[1]], pts[tri[2]]};
      if (simplex_contains(s, pts[w]) > 0) {
        tris[t] = {tri[0], tri[1], w};
        tris.push_back({tri[1], tri[2], w});
        tris.push_back({tri[2], tri[0], w});
        break;
      }
    }
  }
  std::vector<IdTuple> cells;
  for (const auto& t : tris) cells.push_back(IdTuple{t[0], t[1], t[2]});
  return TriangulationComplex::build(pts, cells);
}

TEST(BuildComplex, TwoTrianglesShareDiagonal) {
  const std::vector<Point> pts{Point{0, 0}, Point{2, 0.1}, Point{2.1, 2}, Point{-0.1, 1.9}};
  const TriangulationComplex cx = TriangulationComplex::build(pts, {IdTuple{0, 1, 2}, IdTuple{0, 2, 3}});
  EXPECT_EQ(cx.interior_facets().size(), 1u);
  EXPECT_EQ(cx.interior_facets()[0], (IdTuple{0, 2}));
}

TEST(BuildComplex, ThreeCellsOnAnEdgeIsNonManifold) {
  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}, Point{0.5, 1}, Point{0.5, -1}, Point{0.4, 2}};
  EXPECT_EQ(code_of([&] {
              TriangulationComplex::build(pts, {IdTuple{0, 1, 2}, IdTuple{0, 1, 3}, IdTuple{0, 1, 4}},
                                          Coverage::none);
            }),
            ErrorCode::non_manifold);
}

TEST(BuildComplex, MissingCenterVertexIsRejected) {
  // Four triangles around the center, but the center id is out of range.
  const std::vector<Point> pts{Point{0, 0}, Point{2, 0}, Point{2, 2}, Point{0, 2}};
  EXPECT_EQ(code_of([&] {
              TriangulationComplex::build(pts, {IdTuple{0, 1, 4}, IdTuple{1, 2, 4}, IdTuple{2, 3, 4}, IdTuple{3, 0, 4}});
            }),
            ErrorCode::invalid_argument);
  // With the center present but unused, the square split by one diagonal
  // hides it.
  std::vector<Point> with_center = pts;
  with_center.push_back(Point{1, 1.0001});
  EXPECT_EQ(code_of([&] { TriangulationComplex::build(with_center, {IdTuple{0, 1, 2}, IdTuple{0, 2, 3}}); }),
            ErrorCode::missing_vertex);
}

TEST(BuildComplex, DegenerateAndOverlapping) {
  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{1, 1}, Point{1, 2}};
  EXPECT_EQ(code_of([&] { TriangulationComplex::build(pts, {IdTuple{0, 1, 2}}); }), ErrorCode::degenerate_simplex);
  // Triangles (0,2,3) and (0,2,4) lie on the same side of edge 0-2.
  EXPECT_EQ(code_of([&] { TriangulationComplex::build(pts, {IdTuple{0, 2, 3}, IdTuple{0, 2, 4}}, Coverage::none); }),
            ErrorCode::overlapping_cells);
  // A single triangle whose edge passes through the unused point 1.
  EXPECT_EQ(code_of([&] { TriangulationComplex::build(pts, {IdTuple{0, 2, 3}}); }), ErrorCode::missing_vertex);
  const std::vector<Point> q{Point{0, 0}, Point{3, 0}, Point{1, 1}, Point{1, 2}};
  EXPECT_EQ(code_of([&] { TriangulationComplex::build(q, {IdTuple{0, 1, 2}, IdTuple{0, 1, 3}}, Coverage::none); }),
            ErrorCode::overlapping_cells);
}

TEST(LocallyDelaunay, MatchesDirectInSphere) {
  const std::vector<Point> pts{Point{0, 0}, Point{3, 0}, Point{3, 1}, Point{0, 1.0000001}};
  const TriangulationComplex a = TriangulationComplex::build(pts, {IdTuple{0, 1, 2}, IdTuple{0, 2, 3}});
  const TriangulationComplex b = TriangulationComplex::build(pts, {IdTuple{0, 1, 3}, IdTuple{1, 2, 3}});
  const bool ld_a = is_locally_delaunay(a, IdTuple{0, 2});
  const bool ld_b = is_locally_delaunay(b, IdTuple{1, 3});
  EXPECT_NE(ld_a, ld_b);
  const std::array<Point, 3> t{pts[0], pts[1], pts[2]};
  EXPECT_EQ(ld_a, in_sphere(t, pts[3]) == SphereSide::outside);
  EXPECT_EQ(code_of([&] { is_locally_delaunay(a, IdTuple{0, 1}); }), ErrorCode::boundary_facet);
}

TEST(LocallyDelaunay, DelaunayFacetsAllPass) {
  const TriangulationComplex cx = delaunay_2d(random_points(60, 2, 4));
  for (const IdTuple& e : cx.interior_facets()) EXPECT_TRUE(is_locally_delaunay(cx, e));
}

TEST(Flip, DirectedFlipAndErrors) {
  const std::vector<Point> pts{Point{0, 0}, Point{3, 0}, Point{3, 1}, Point{0, 1.0000001}};
  TriangulationComplex a = TriangulationComplex::build(pts, {IdTuple{0, 1, 2}, IdTuple{0, 2, 3}});
  TriangulationComplex b = TriangulationComplex::build(pts, {IdTuple{0, 1, 3}, IdTuple{1, 2, 3}});
  TriangulationComplex& bad = is_locally_delaunay(a, IdTuple{0, 2}) ? b : a;
  TriangulationComplex& good = is_locally_delaunay(a, IdTuple{0, 2}) ? a : b;
  const IdTuple bad_edge = bad.interior_facets()[0];
  const double r_before = uniform_bound_q(bad);
  const FlipRecord rec = flip(bad, bad_edge);
  EXPECT_NEAR(rec.before_max_circumradius, r_before, 1e-12);
  EXPECT_LE(rec.after_max_circumradius, rec.before_max_circumradius + kGeoTolerance);
  EXPECT_TRUE(is_locally_delaunay(bad, rec.new_facet));
  EXPECT_EQ(sorted_cells(bad), sorted_cells(good));
  EXPECT_EQ(code_of([&] { flip(good, good.interior_facets()[0]); }), ErrorCode::locally_delaunay);
}

TEST(Flip, NonConvexQuadrilateralIsRejected) {
  // Reflex vertex at 3: edge 1-3 cannot be flipped.
  const std::vector<Point> pts{Point{0, 0}, Point{4, 0}, Point{0, 4}, Point{1, 1}};
  TriangulationComplex cx = TriangulationComplex::build(pts, {IdTuple{0, 1, 3}, IdTuple{1, 2, 3}, IdTuple{0, 2, 3}});
  EXPECT_EQ(code_of([&] { cx.flip_edge(IdTuple{1, 3}); }), ErrorCode::non_convex);
}

TEST(Legalize, RandomTriangulationsReachDelaunay) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const std::vector<Point> pts = random_points(n, 2, 100 + seed);
    const TriangulationComplex start = naive_triangulation(pts);
    const LegalizeResult res = legalize_to_delaunay(start);
    EXPECT_EQ(sorted_cells(res.complex), sorted_cells(delaunay_2d(pts)));
    for (const FlipRecord& f : res.flips)
      EXPECT_LE(f.after_max_circumradius, f.before_max_circumradius + kGeoTolerance);
    EXPECT_TRUE(legalize_to_delaunay(res.complex).flips.empty());
  }
}

TEST(Legalize, DelaunayInputNeedsNoFlips) {
  EXPECT_TRUE(legalize_to_delaunay(delaunay_2d(random_points(40, 2, 9))).flips.empty());
}

TEST(Legalize, CocircularInputIsNonGeneric) {
  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  const TriangulationComplex cx = TriangulationComplex::build(pts, {IdTuple{0, 1, 2}, IdTuple{0, 2, 3}});
  EXPECT_EQ(code_of([&] { legalize_to_delaunay(cx); }), ErrorCode::non_generic);
}

TEST(UniformBound, Examples) {
  const std::vector<Point> pts{Point{0, 0}, Point{4, 0}, Point{0, 3}};
  EXPECT_NEAR(uniform_bound_q(TriangulationComplex::build(pts, {IdTuple{0, 1, 2}})), 2.5, 1e-12);
  PointSetWindow w = lattice_window(2, 12, 5);
  const TriangulationComplex cx = delaunay_of_window(w, 5);
  EXPECT_LE(interior_bound_q(cx), w.R + kGeoTolerance);
}

TEST(UnboundedPrefix, PhaseZeroIsNearestPair) {
  const PointSetWindow w = poisson_delone_window(2, 0.4, 1.5, 40, 3);
  const UnboundedPrefix pre = build_unbounded_prefix(w, 0);
  std::vector<int> order(w.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w.points[a].norm2() < w.points[b].norm2(); });
  EXPECT_EQ(std::min(pre.phases[0].x, pre.phases[0].y), std::min(order[0], order[1]));
  EXPECT_EQ(std::max(pre.phases[0].x, pre.phases[0].y), std::max(order[0], order[1]));
  EXPECT_EQ(pre.complex.num_cells(), 0u);
}

TEST(UnboundedPrefix, EveryPhaseHasLongEdgeAndNoHiddenPoints) {
  const PointSetWindow w = poisson_delone_window(2, 0.4, 1.5, 40, 3);
  for (int k = 1; k <= 4; ++k) {
    const UnboundedPrefix pre = build_unbounded_prefix(w, k);
    EXPECT_GT(pre.longest_edge, k);
    EXPECT_GT(pre.phases.back().edge_length, k);
    // Every point in the underlying space is a vertex.
    const CellLocator loc(pre.complex);
    const auto used = pre.complex.vertex_ids();
    for (int i = 0; i < static_cast<int>(w.points.size()); ++i) {
      if (std::binary_search(used.begin(), used.end(), i)) continue;
      EXPECT_FALSE(loc.contains(w.points[i])) << "point " << i;
    }
    // Every point within distance k of the origin is covered.
    for (int i = 0; i < static_cast<int>(w.points.size()); ++i)
      if (w.points[i].norm() <= k) EXPECT_TRUE(std::binary_search(used.begin(), used.end(), i));
  }
}

TEST(UnboundedPrefix, SmallWindowIsExhausted) {
  const PointSetWindow w = poisson_delone_window(2, 0.4, 1.5, 6.5, 3);
  EXPECT_EQ(code_of([&] { build_unbounded_prefix(w, 5); }), ErrorCode::window_exhausted);
}

}  // namespace
}  // namespace delone
