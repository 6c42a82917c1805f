/* Apache License, Version 2.0 */

#include "delone/cube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "delone/delaunay.hpp"
#include "delone/generators.hpp"
#include "delone/triangulation.hpp"

namespace delone {

long cube_layer(double z) {
  return z > 0 ? static_cast<long>(std::ceil(z - 0.5)) : static_cast<long>(std::floor(z + 0.5));
}

CubeReport analyze_distorted_cubes(double W) {
  const PointSetWindow w = distorted_cubic_window(W);
  // The lattice regularity makes some groups of points near the window
  // boundary cospherical; those facets are recorded and must stay clear of
  // the interior cubes.
  std::vector<IdTuple> cospherical;
  TriangulationComplex cx = delaunay_tolerant(w.points, cospherical);
  cx.set_window(WindowInfo{Point(3), W});
  CubeReport rep;
  rep.W = W;
  rep.points = w.points.size();
  rep.cells = cx.num_cells();

  std::vector<std::array<long, 3>> lat(w.points.size());
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    const Point& p = w.points[i];
    lat[i] = {std::lround(p[0]), std::lround(p[1]), cube_layer(p[2])};
  }
  std::vector<char> certified(cx.num_cells(), 0);
  for (int c : interior_cells(cx)) certified[c] = 1;

  auto interior = [&](const std::array<long, 3>& corner) {
    const Point center{corner[0] + 0.5, corner[1] + 0.5, corner[2] + 0.5};
    return center.norm() + 2.5 <= W;
  };

  std::map<std::array<long, 3>, CubeCell> cubes;
  rep.min_volume_all = rep.min_volume_certified = std::numeric_limits<double>::infinity();
  for (int c = 0; c < static_cast<int>(cx.num_cells()); ++c) {
    const SimplexPoints sp = cx.cell_points(c);
    const double vol = measure(sp.span());
    rep.min_volume_all = std::min(rep.min_volume_all, vol);
    if (!certified[c]) continue;
    rep.min_volume_certified = std::min(rep.min_volume_certified, vol);
    std::array<long, 3> lo{}, hi{};
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::numeric_limits<long>::max();
      hi[a] = std::numeric_limits<long>::min();
    }
    for (int v : cx.cells()[c])
      for (int a = 0; a < 3; ++a) {
        lo[a] = std::min(lo[a], lat[v][a]);
        hi[a] = std::max(hi[a], lat[v][a]);
      }
    bool single = true;
    for (int a = 0; a < 3; ++a) single = single && hi[a] - lo[a] <= 1;
    if (!single) {
      ++rep.stray_tets;
      continue;
    }
    // The four points of one layer span a flat tetrahedron that lies in the
    // hull of the cube below (as its top) and of the cube above (as its
    // bottom), so it is counted for both.
    std::vector<std::array<long, 3>> owners;
    if (hi[2] == lo[2]) {
      owners.push_back({lo[0], lo[1], lo[2]});
      owners.push_back({lo[0], lo[1], lo[2] - 1});
    } else {
      owners.push_back(lo);
    }
    for (const auto& corner : owners) {
      CubeCell& cell = cubes[corner];
      cell.corner = corner;
      ++cell.tets;
      cell.volume += vol;
      cell.min_volume = cell.tets == 1 ? vol : std::min(cell.min_volume, vol);
      if (hi[2] == lo[2]) (lo[2] == corner[2] ? cell.bottom_volume : cell.top_volume) = vol;
    }
  }
  for (auto& [corner, cell] : cubes)
    if (interior(corner)) rep.cubes.push_back(cell);
  for (const IdTuple& f : cospherical) {
    const FacetCells& fc = *cx.incident(f);
    bool touches = false;
    for (int k = 0; k < fc.count; ++k) {
      std::array<long, 3> lo{lat[cx.cells()[fc.cell[k]][0]]};
      for (int v : cx.cells()[fc.cell[k]])
        for (int a = 0; a < 3; ++a) lo[a] = std::min(lo[a], lat[v][a]);
      for (long dk = -1; dk <= 0; ++dk)
        touches = touches || interior({lo[0], lo[1], lo[2] + dk});
    }
    if (touches) ++rep.cospherical_interior;
    ++rep.cospherical_facets;
  }
  return rep;
}

}  // namespace delone
