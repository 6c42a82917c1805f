/* Apache License, Version 2.0 */

#include "delone/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "delone/error.hpp"
#include "delone/random.hpp"

namespace delone {
namespace {

double pair_radius(const TriangulationComplex& cx, int c0, int c1) {
  return std::max(circumsphere(cx.cell_points(c0).span()).radius,
                  circumsphere(cx.cell_points(c1).span()).radius);
}

}  // namespace

bool is_locally_delaunay(const TriangulationComplex& cx, const IdTuple& facet) {
  const FacetCells* fc = cx.incident(facet);
  if (fc == nullptr) throw Error(ErrorCode::invalid_argument, "not a facet of the complex");
  if (fc->count != 2) throw Error(ErrorCode::boundary_facet, "facet is on the boundary");
  const int opposite = cx.opposite_vertex(fc->cell[1], facet.sorted());
  switch (in_sphere(cx.cell_points(fc->cell[0]).span(), cx.points()[opposite])) {
    case SphereSide::outside:
      return true;
    case SphereSide::inside:
      return false;
    case SphereSide::on:
      break;
  }
  throw Error(ErrorCode::non_generic,
              "cospherical vertices across a facet; jitter the input to make it generic");
}

FlipRecord flip(TriangulationComplex& cx, const IdTuple& edge) {
  if (cx.dimension() != 2) throw Error(ErrorCode::dimension_mismatch, "flips are planar only");
  if (is_locally_delaunay(cx, edge))
    throw Error(ErrorCode::locally_delaunay, "edge is already locally Delaunay");
  const FacetCells fc = *cx.incident(edge);
  FlipRecord rec;
  rec.facet = edge.sorted();
  rec.before_max_circumradius = pair_radius(cx, fc.cell[0], fc.cell[1]);
  rec.new_facet = cx.flip_edge(edge);
  rec.after_max_circumradius = pair_radius(cx, fc.cell[0], fc.cell[1]);
  return rec;
}

LegalizeResult legalize_to_delaunay(TriangulationComplex cx) {
  if (cx.dimension() != 2) throw Error(ErrorCode::dimension_mismatch, "legalization is planar only");
  LegalizeResult out;
  std::deque<IdTuple> queue;
  std::unordered_set<IdTuple, IdTupleHash> queued;
  for (const IdTuple& e : cx.interior_facets()) {
    queue.push_back(e);
    queued.insert(e);
  }
  while (!queue.empty()) {
    const IdTuple e = queue.front();
    queue.pop_front();
    queued.erase(e);
    if (!cx.is_interior(e) || is_locally_delaunay(cx, e)) continue;
    const FacetCells fc = *cx.incident(e);
    out.flips.push_back(flip(cx, e));
    for (int c : fc.cell) {
      const IdTuple& t = cx.cells()[c];
      for (int i = 0; i < 3; ++i) {
        const IdTuple side = t.without(i);
        if (side == out.flips.back().new_facet) continue;
        if (cx.is_interior(side) && queued.insert(side).second) queue.push_back(side);
      }
    }
  }
  out.complex = std::move(cx);
  return out;
}

double uniform_bound_q(const TriangulationComplex& cx) { return cx.max_circumradius(); }

std::vector<int> interior_cells(const TriangulationComplex& cx, double margin) {
  std::vector<int> out;
  const auto& w = cx.window();
  for (int c = 0; c < static_cast<int>(cx.num_cells()); ++c) {
    if (w) {
      const Circumsphere s = circumsphere(cx.cell_points(c).span());
      if (distance(s.center, w->center) + s.radius > w->radius - margin) continue;
    }
    out.push_back(c);
  }
  return out;
}

double interior_bound_q(const TriangulationComplex& cx) {
  double q = 0.0;
  for (int c : interior_cells(cx, 0.0)) q = std::max(q, circumsphere(cx.cell_points(c).span()).radius);
  return q;
}

TriangulationComplex random_flip_walk(TriangulationComplex cx, std::size_t steps, std::uint64_t seed) {
  if (cx.dimension() != 2) throw Error(ErrorCode::dimension_mismatch, "flip walks are planar only");
  std::mt19937_64 rng = SeedSplitter(seed).stream("flip-walk");
  std::vector<IdTuple> edges = cx.interior_facets();
  if (edges.empty()) return cx;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  // A flip keeps the number of interior edges, so slot i is simply replaced.
  std::size_t done = 0;
  for (std::size_t attempts = 0; done < steps && attempts < 50 * steps + 100; ++attempts) {
    const std::size_t i = pick(rng);
    try {
      edges[i] = cx.flip_edge(edges[i]);
      ++done;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::non_convex) throw;
    }
  }
  return cx;
}

}  // namespace delone
