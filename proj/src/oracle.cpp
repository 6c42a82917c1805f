/* Apache License, Version 2.0 */

#include "delone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"

namespace delone {
namespace {

std::vector<IdTuple> canonical(std::vector<IdTuple> cells) {
  std::sort(cells.begin(), cells.end());
  return cells;
}

int orient3(const std::vector<Point>& p, int a, int b, int c) {
  const std::array<Point, 3> s{p[a], p[b], p[c]};
  return orientation(s);
}

bool crosses(const std::vector<Point>& p, const std::pair<int, int>& e, const std::pair<int, int>& f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  return orient3(p, e.first, e.second, f.first) * orient3(p, e.first, e.second, f.second) < 0 &&
         orient3(p, f.first, f.second, e.first) * orient3(p, f.first, f.second, e.second) < 0;
}

}  // namespace

std::vector<TriangulationComplex> enumerate_triangulations_2d(const std::vector<Point>& points) {
  if (points.size() > 9) throw Error(ErrorCode::too_large, "flip-graph enumeration is limited to 9 points");
  if (!points.empty() && points[0].dim() != 2) throw Error(ErrorCode::dimension_mismatch, "planar enumeration only");
  std::vector<TriangulationComplex> out;
  std::set<std::vector<IdTuple>> seen;
  std::deque<TriangulationComplex> queue;
  TriangulationComplex start = delaunay_2d(points);
  seen.insert(canonical(start.cells()));
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    TriangulationComplex cx = std::move(queue.front());
    queue.pop_front();
    for (const IdTuple& e : cx.interior_facets()) {
      TriangulationComplex next = cx;
      try {
        next.flip_edge(e);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::non_convex) continue;
        throw;
      }
      if (seen.insert(canonical(next.cells())).second) queue.push_back(std::move(next));
    }
    out.push_back(std::move(cx));
  }
  return out;
}

EdgeSet edge_set(const TriangulationComplex& cx) {
  EdgeSet edges;
  for (const auto& [f, fc] : cx.facets()) edges.emplace_back(f[0], f[1]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::set<EdgeSet> noncrossing_edge_sets(const std::vector<Point>& p) {
  const int n = static_cast<int>(p.size());
  if (n > 7) throw Error(ErrorCode::too_large, "non-crossing enumeration is limited to 7 points");
  if (n < 3) throw Error(ErrorCode::invalid_argument, "need at least three points");
  // Hull edges: all other points strictly on one side.
  std::vector<std::pair<int, int>> hull, inner;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int pos = 0, neg = 0;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const int o = orient3(p, i, j, k);
        if (o == 0) throw Error(ErrorCode::non_generic, "collinear triple");
        (o > 0 ? pos : neg)++;
      }
      (pos == 0 || neg == 0 ? hull : inner).emplace_back(i, j);
    }
  const int h = static_cast<int>(hull.size());
  const int want = 3 * n - 3 - h - h;
  std::set<EdgeSet> out;
  std::vector<std::pair<int, int>> chosen;
  const int m = static_cast<int>(inner.size());
  auto rec = [&](auto&& self, int idx) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      EdgeSet es = chosen;
      es.insert(es.end(), hull.begin(), hull.end());
      std::sort(es.begin(), es.end());
      out.insert(std::move(es));
      return;
    }
    if (idx == m || static_cast<int>(chosen.size()) + (m - idx) < want) return;
    bool ok = true;
    for (const auto& c : chosen)
      if (crosses(p, c, inner[idx])) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(inner[idx]);
      self(self, idx + 1);
      chosen.pop_back();
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return out;
}

MinSumResult min_sum_triangulation(const std::vector<Point>& points, const FunctionalSpec& F) {
  std::vector<TriangulationComplex> all = enumerate_triangulations_2d(points);
  MinSumResult res;
  res.triangulations = all.size();
  res.best_value = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double v = sum_over(F, all[i]);
    res.sums.push_back(v);
    if (v < res.best_value) {
      res.best_value = v;
      best = i;
    }
  }
  const double tol = (std::fabs(res.best_value) + 1.0) * 1e-9;
  for (double v : res.sums)
    if (v <= res.best_value + tol) ++res.ties;
  res.delaunay_value = res.sums.front();
  res.delaunay_is_minimum = res.delaunay_value <= res.best_value + tol;
  res.best = std::move(all[best]);
  return res;
}

double fe_quadrature(std::span<const Point> simplex, int s) {
  const int d = simplex.empty() ? 0 : simplex[0].dim();
  require_simplex(simplex, d + 1, d);
  if (s < 1) throw Error(ErrorCode::invalid_argument, "subdivision count must be positive");
  const double vol = measure(simplex);
  if (vol == 0.0) throw Error(ErrorCode::degenerate_simplex, "flat simplex");
  std::array<double, kMaxDim + 1> lifted{};
  for (int i = 0; i <= d; ++i) lifted[i] = simplex[i].norm2();

  std::array<int, kMaxDim> perm{};
  std::iota(perm.begin(), perm.begin() + d, 0);
  std::vector<std::array<int, kMaxDim>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.begin() + d));

  const double inv = 1.0 / s;
  double total = 0.0;
  std::size_t pieces = 0;
  std::array<int, kMaxDim> cell{};
  while (true) {
    for (const auto& pm : perms) {
      // Centroid of the Kuhn simplex c, c + e_pm0, c + e_pm0 + e_pm1, ...
      std::array<double, kMaxDim> t{};
      for (int k = 0; k < d; ++k) t[k] = cell[k];
      for (int step = 0; step < d; ++step) {
        const double w = static_cast<double>(d - step) / (d + 1);
        t[pm[step]] += w;
      }
      bool ordered = true;
      for (int k = 0; k + 1 < d; ++k)
        if (t[k] < t[k + 1]) ordered = false;
      if (!ordered) continue;
      std::array<double, kMaxDim + 1> lam{};
      lam[0] = 1.0 - t[0] * inv;
      for (int k = 1; k < d; ++k) lam[k] = (t[k - 1] - t[k]) * inv;
      lam[d] = t[d - 1] * inv;
      Point x(d);
      double interp = 0.0;
      for (int i = 0; i <= d; ++i) {
        x += simplex[i] * lam[i];
        interp += lam[i] * lifted[i];
      }
      total += interp - x.norm2();
      ++pieces;
    }
    int k = 0;
    while (k < d) {
      if (++cell[k] < s) break;
      cell[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  return total * vol / static_cast<double>(pieces);
}

std::vector<IdTuple> delaunay_by_emptiness(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return {};
  const int d = points[0].dim();
  std::vector<IdTuple> cells;
  std::vector<int> idx(d + 1);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == d + 1) {
      std::array<Point, kMaxDim + 1> s;
      for (int i = 0; i <= d; ++i) s[i] = points[idx[i]];
      const std::span<const Point> sp(s.data(), d + 1);
      if (orientation(sp) == 0) return;
      for (int q = 0; q < n; ++q) {
        if (std::find(idx.begin(), idx.end(), q) != idx.end()) continue;
        if (in_sphere(sp, points[q]) != SphereSide::outside) return;
      }
      cells.push_back(IdTuple(std::span<const int>(idx.data(), idx.size())));
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace delone
