/* Apache License, Version 2.0 */

#include "delone/unbounded.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "delone/error.hpp"

namespace delone {
namespace {

using Tri = std::array<int, 3>;

double wrap(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  return a < 0 ? a + two_pi : a;
}

// Closed arcs [a0, a0 + wa] and [b0, b0 + wb] on the circle intersect.
bool arcs_meet(double a0, double wa, double b0, double wb) {
  return wrap(b0 - a0) <= wa || wrap(a0 - b0) <= wb;
}

class PrefixBuilder {
 public:
  explicit PrefixBuilder(const PointSetWindow& w) : w_(w), pts_(w.points), is_vertex_(pts_.size(), 0) {}

  int orient(int a, int b, int c) const {
    const std::array<Point, 3> s{pts_[a], pts_[b], pts_[c]};
    return orientation(s);
  }

  void start() {
    std::vector<int> order(pts_.size());
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + 2, order.end(), [&](int a, int b) {
      const double na = pts_[a].norm2(), nb = pts_[b].norm2();
      return na != nb ? na < nb : a < b;
    });
    hull_ = {order[0], order[1]};
    first_ = {order[0], order[1]};
    is_vertex_[order[0]] = is_vertex_[order[1]] = 1;
    longest_ = distance(pts_[order[0]], pts_[order[1]]);
  }

  PrefixPhase phase(int j) {
    PrefixPhase rec;
    rec.phase = j;
    const double L = j;
    rec.x = *std::min_element(hull_.begin(), hull_.end());
    choose_long_edge(rec, L);
    star(rec.y);
    if (!has_edge(rec.x, rec.y)) throw Error(ErrorCode::invalid_argument, "long edge was not created by starring");

    std::vector<int> near;
    for (int z = 0; z < static_cast<int>(pts_.size()); ++z)
      if (!is_vertex_[z] && pts_[z].norm() <= j) near.push_back(z);
    std::sort(near.begin(), near.end(), [&](int a, int b) {
      const double na = pts_[a].norm2(), nb = pts_[b].norm2();
      return na != nb ? na < nb : a < b;
    });
    for (int z : near) {
      if (is_vertex_[z] || !outside(z)) continue;
      star(z);
      ++rec.starred;
    }
    rec.split = split_covered();
    rec.cells = tris_.size();
    for (const Tri& t : tris_)
      for (int i = 0; i < 3; ++i) longest_ = std::max(longest_, distance(pts_[t[i]], pts_[t[(i + 1) % 3]]));
    return rec;
  }

  TriangulationComplex complex() const {
    std::vector<IdTuple> cells;
    cells.reserve(tris_.size());
    for (const Tri& t : tris_) cells.push_back(IdTuple{t[0], t[1], t[2]});
    TriangulationComplex cx = TriangulationComplex::build(pts_, std::move(cells));
    cx.set_window(WindowInfo{Point(2), w_.W});
    return cx;
  }

  double longest() const noexcept { return longest_; }
  const std::array<int, 2>& first_edge() const noexcept { return first_; }

 private:
  bool segment_state() const { return tris_.empty(); }

  // Picks y so that xy is longer than L, leaves the region only at x, and
  // every point of the full set nearer to x in the cone lies in the window.
  void choose_long_edge(PrefixPhase& rec, double L) {
    const int x = rec.x;
    const Point& px = pts_[x];
    const double width = 2.0 * std::numbers::pi / kPrefixCones;
    double t0 = 0.0, tw = 0.0;
    int prev = -1, next = -1;
    const auto pos = std::find(hull_.begin(), hull_.end(), x) - hull_.begin();
    const int m = static_cast<int>(hull_.size());
    if (segment_state()) {
      next = hull_[(pos + 1) % 2];
      const Point d = pts_[next] - px;
      t0 = std::atan2(d[1], d[0]);
    } else {
      next = hull_[(pos + 1) % m];
      prev = hull_[(pos + m - 1) % m];
      const Point dn = pts_[next] - px, dp = pts_[prev] - px;
      t0 = std::atan2(dn[1], dn[0]);
      tw = wrap(std::atan2(dp[1], dp[0]) - t0);
    }
    for (int c = 0; c < kPrefixCones; ++c) {
      const double c0 = c * width;
      if (arcs_meet(c0, width, t0, tw)) continue;
      int best = -1;
      double best_d = 0.0;
      bool blocked = false;
      for (int z = 0; z < static_cast<int>(pts_.size()) && !blocked; ++z) {
        if (z == x) continue;
        const Point d = pts_[z] - px;
        if (!arcs_meet(c0, width, std::atan2(d[1], d[0]), 0.0)) continue;
        const double len = d.norm();
        if (len <= L) {
          blocked = true;
        } else if (best < 0 || len < best_d || (len == best_d && z < best)) {
          best = z;
          best_d = len;
        }
      }
      if (blocked || best < 0) continue;
      if (px.norm() + best_d > w_.W) continue;
      if (segment_state()) {
        if (orient(x, next, best) == 0) continue;
      } else if (!(orient(x, next, best) < 0 || orient(x, best, prev) < 0)) {
        continue;
      }
      rec.y = best;
      rec.cone = c;
      rec.edge_length = best_d;
      return;
    }
    throw Error(ErrorCode::window_exhausted,
                "no direction cone at vertex " + std::to_string(x) + " yields a certified edge longer than " +
                    std::to_string(L) + "; enlarge the window");
  }

  bool outside(int z) const {
    if (segment_state()) return true;  // a point on the segment would be nearer to the origin
    const int m = static_cast<int>(hull_.size());
    for (int i = 0; i < m; ++i)
      if (orient(hull_[i], hull_[(i + 1) % m], z) < 0) return true;
    return false;
  }

  void star(int z) {
    is_vertex_[z] = 1;
    if (segment_state()) {
      const int a = hull_[0], b = hull_[1];
      const int o = orient(a, b, z);
      if (o == 0) throw Error(ErrorCode::non_generic, "collinear points while starring; jitter the input");
      hull_ = o > 0 ? std::vector<int>{a, b, z} : std::vector<int>{b, a, z};
      tris_.push_back(Tri{hull_[0], hull_[1], hull_[2]});
      return;
    }
    const int m = static_cast<int>(hull_.size());
    std::vector<char> vis(m);
    for (int i = 0; i < m; ++i) {
      const int o = orient(hull_[i], hull_[(i + 1) % m], z);
      if (o == 0) throw Error(ErrorCode::non_generic, "point collinear with a boundary edge; jitter the input");
      vis[i] = o < 0;
    }
    int s = -1;
    for (int i = 0; i < m; ++i)
      if (vis[i] && !vis[(i + m - 1) % m]) s = i;
    if (s < 0) throw Error(ErrorCode::invalid_argument, "starring from a point inside the region");
    std::vector<int> h(m);
    for (int i = 0; i < m; ++i) h[i] = hull_[(s + i) % m];
    int c = 0;
    while (c < m && vis[(s + c) % m]) {
      tris_.push_back(Tri{h[c + 1], h[c], z});
      ++c;
    }
    std::vector<int> nh{h[0], z};
    for (int i = c; i < m; ++i) nh.push_back(h[i]);
    hull_ = std::move(nh);
  }

  bool has_edge(int a, int b) const {
    for (const Tri& t : tris_)
      if (std::find(t.begin(), t.end(), a) != t.end() && std::find(t.begin(), t.end(), b) != t.end()) return true;
    return false;
  }

  std::size_t split_covered() {
    std::size_t count = 0;
    for (int w = 0; w < static_cast<int>(pts_.size()); ++w) {
      if (is_vertex_[w] || outside(w)) continue;
      std::size_t t = 0;
      int where = -1;
      for (; t < tris_.size(); ++t) {
        const std::array<Point, 3> s{pts_[tris_[t][0]], pts_[tris_[t][1]], pts_[tris_[t][2]]};
        where = simplex_contains(s, pts_[w]);
        if (where >= 0) break;
      }
      if (t == tris_.size()) throw Error(ErrorCode::invalid_argument, "covered point not located");
      const Tri tri = tris_[t];
      if (where > 0) {
        tris_[t] = Tri{tri[0], tri[1], w};
        tris_.push_back(Tri{tri[1], tri[2], w});
        tris_.push_back(Tri{tri[2], tri[0], w});
      } else {
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i)
          if (orient(tri[i], tri[(i + 1) % 3], w) == 0) a = tri[i], b = tri[(i + 1) % 3];
        split_edge(a, b, w);
      }
      is_vertex_[w] = 1;
      ++count;
    }
    return count;
  }

  // w lies in the relative interior of edge ab.
  void split_edge(int a, int b, int w) {
    int sides = 0;
    const std::size_t n = tris_.size();
    for (std::size_t t = 0; t < n; ++t) {
      const Tri tri = tris_[t];
      for (int i = 0; i < 3; ++i) {
        const int u = tri[i], v = tri[(i + 1) % 3], o = tri[(i + 2) % 3];
        if ((u == a && v == b) || (u == b && v == a)) {
          tris_[t] = Tri{u, w, o};
          tris_.push_back(Tri{w, v, o});
          ++sides;
          break;
        }
      }
    }
    if (sides == 1) {
      const int m = static_cast<int>(hull_.size());
      for (int i = 0; i < m; ++i) {
        const int u = hull_[i], v = hull_[(i + 1) % m];
        if ((u == a && v == b) || (u == b && v == a)) {
          hull_.insert(hull_.begin() + i + 1, w);
          break;
        }
      }
    }
  }

  const PointSetWindow& w_;
  std::vector<Point> pts_;
  std::vector<char> is_vertex_;
  std::vector<int> hull_;  // counter-clockwise; two ids while the complex is one edge
  std::vector<Tri> tris_;  // counter-clockwise triangles
  double longest_ = 0.0;
  std::array<int, 2> first_{-1, -1};
};

}  // namespace

UnboundedPrefix build_unbounded_prefix(const PointSetWindow& window, int phases) {
  if (window.dimension != 2) throw Error(ErrorCode::dimension_mismatch, "the prefix construction is planar");
  if (phases < 0) throw Error(ErrorCode::invalid_argument, "phase count must be non-negative");
  if (window.points.size() < 3) throw Error(ErrorCode::window_exhausted, "window has fewer than three points");
  PrefixBuilder b(window);
  b.start();
  UnboundedPrefix out;
  PrefixPhase first;
  first.x = b.first_edge()[0];
  first.y = b.first_edge()[1];
  first.edge_length = b.longest();
  out.phases.push_back(first);
  for (int j = 1; j <= phases; ++j) {
    out.phases.push_back(b.phase(j));
    out.complex = b.complex();  // validates the phase result
  }
  if (phases == 0) out.complex = TriangulationComplex::build(window.points, {});
  out.longest_edge = b.longest();
  return out;
}

}  // namespace delone
