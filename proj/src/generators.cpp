/* Apache License, Version 2.0 */

#include "delone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"
#include "delone/point_grid.hpp"
#include "delone/random.hpp"

namespace delone {
namespace {

Point random_in_ball(int d, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  Point v(d);
  double n2 = 0.0;
  while (n2 == 0.0) {
    for (int k = 0; k < d; ++k) v[k] = N(rng);
    n2 = v.norm2();
  }
  const double len = radius * std::pow(U(rng), 1.0 / d) / std::sqrt(n2);
  return v * len;
}

// Calls fn(integer point) for every z in Z^d with |z| <= W.
template <typename Fn>
void for_lattice_in_ball(int d, double W, Fn&& fn) {
  const long m = static_cast<long>(std::floor(W));
  const double W2 = W * W;
  if (d == 2) {
    for (long i = -m; i <= m; ++i)
      for (long j = -m; j <= m; ++j)
        if (static_cast<double>(i * i + j * j) <= W2) fn(i, j, 0L);
  } else {
    for (long i = -m; i <= m; ++i)
      for (long j = -m; j <= m; ++j)
        for (long k = -m; k <= m; ++k)
          if (static_cast<double>(i * i + j * j + k * k) <= W2) fn(i, j, k);
  }
}

double nearest_distance(const PointGrid& grid, const Point& p, double start) {
  double radius = start;
  for (int round = 0; round < 64; ++round) {
    double best = std::numeric_limits<double>::infinity();
    grid.for_each_within(p, radius, [&](int id) { best = std::min(best, distance(grid.points()[id], p)); });
    if (best <= radius) return best;
    radius *= 2.0;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

PointSetWindow lattice_window(int d, double W, std::optional<std::uint64_t> jitter_seed) {
  if (d != 2 && d != 3) throw Error(ErrorCode::dimension_mismatch, "lattice windows are 2D or 3D");
  if (!(W >= 1.0)) throw Error(ErrorCode::invalid_argument, "window radius must be at least 1");
  PointSetWindow w;
  w.dimension = d;
  w.W = W;
  for_lattice_in_ball(d, W, [&](long i, long j, long k) {
    w.points.push_back(d == 2 ? Point{double(i), double(j)} : Point{double(i), double(j), double(k)});
  });
  double eta = 0.0;
  if (jitter_seed) {
    eta = 1e-6 * 0.5;
    std::mt19937_64 rng = SeedSplitter(*jitter_seed).stream("jitter");
    jitter_points(w.points, eta, rng);
    w.provenance.seed = *jitter_seed;
  }
  w.r = 0.5 - eta;
  w.R = std::sqrt(static_cast<double>(d)) / 2.0 + eta;
  w.provenance.generator = "lattice";
  w.provenance.params = {{"d", d}, {"W", W}};
  w.provenance.jitter = eta;
  return w;
}

double cube_delta(long k) { return 1.0 / (2.0 + static_cast<double>(std::labs(k))); }

PointSetWindow distorted_cubic_window(double W) {
  if (!(W >= 3.0)) throw Error(ErrorCode::invalid_argument, "distorted cube window needs W >= 3");
  PointSetWindow w;
  w.dimension = 3;
  w.W = W;
  for_lattice_in_ball(3, W + 1.0, [&](long i, long j, long k) {
    const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    const Point p{double(i), double(j), double(k) + sign * cube_delta(k)};
    if (p.norm() <= W) w.points.push_back(p);
  });
  const PointGrid grid(w.points, 1.0);
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    grid.for_each_within(w.points[i], 1.5, [&](int j) {
      if (static_cast<std::size_t>(j) != i) dmin = std::min(dmin, distance(w.points[i], w.points[j]));
    });
  }
  w.r = dmin / 2.0;
  w.R = std::sqrt(3.0) / 2.0 + 0.5;
  w.provenance.generator = "cube3d";
  w.provenance.params = {{"W", W}};
  w.provenance.note = "(i,j,k) -> (i, j, k + (-1)^(i+j) / (2 + |k|))";
  return w;
}

PointSetWindow poisson_delone_window(int d, double r, double R, double W, std::uint64_t seed) {
  if (d != 2 && d != 3) throw Error(ErrorCode::dimension_mismatch, "poisson windows are 2D or 3D");
  if (!(r > 0.0) || R < 2.0 * r) throw Error(ErrorCode::invalid_argument, "need r > 0 and R >= 2r");
  if (!(W > 4.0 * R)) throw Error(ErrorCode::invalid_argument, "need W > 4R");
  std::mt19937_64 rng = SeedSplitter(seed).stream("generator");
  const double sep = 2.0 * r;
  PointGrid grid(d, sep);
  std::uniform_real_distribution<double> U(-W, W);

  // Dart throwing; stops after a long run of rejections.
  const double ball_volume = d == 2 ? std::numbers::pi * W * W : 4.0 / 3.0 * std::numbers::pi * W * W * W;
  const double cell_volume = std::pow(sep, d);
  const std::size_t max_misses = static_cast<std::size_t>(4.0 * ball_volume / cell_volume) + 1000;
  std::size_t misses = 0;
  while (misses < max_misses) {
    Point p(d);
    for (int k = 0; k < d; ++k) p[k] = U(rng);
    if (p.norm() > W || grid.any_within(p, sep)) {
      ++misses;
      continue;
    }
    grid.insert(p);
    misses = 0;
  }

  // Sweep a fine grid; any probe with no point within 2r gets a point.
  const double h = r / 2.0;
  const long m = static_cast<long>(std::ceil(W / h));
  std::uniform_real_distribution<double> nudge(-0.05 * h, 0.05 * h);
  std::array<long, 3> idx{-m, -m, d == 3 ? -m : 0};
  const long kmax = d == 3 ? m : 0;
  for (idx[2] = d == 3 ? -m : 0; idx[2] <= kmax; ++idx[2])
    for (idx[1] = -m; idx[1] <= m; ++idx[1])
      for (idx[0] = -m; idx[0] <= m; ++idx[0]) {
        Point p(d);
        for (int k = 0; k < d; ++k) p[k] = idx[k] * h;
        if (p.norm() > W || grid.any_within(p, sep)) continue;
        Point q = p;
        for (int k = 0; k < d; ++k) q[k] += nudge(rng);
        if (q.norm() <= W && !grid.any_within(q, sep)) grid.insert(q);
        else grid.insert(p);
      }

  PointSetWindow w;
  w.dimension = d;
  w.points = grid.points();
  w.r = r;
  w.R = R;
  w.W = W;
  w.provenance.generator = "poisson";
  w.provenance.params = {{"d", d}, {"r", r}, {"R", R}, {"W", W}};
  w.provenance.seed = seed;
  const DeloneReport rep = verify_delone_params(w);
  if (!rep.pass()) {
    throw Error(ErrorCode::covering_failed,
                "generated set fails verification: min distance " + std::to_string(rep.min_pairwise_distance) +
                    ", largest hole " + std::to_string(rep.max_hole_radius));
  }
  return w;
}

DeloneReport verify_delone_params(const PointSetWindow& window) {
  DeloneReport rep;
  const int d = window.dimension;
  const auto& pts = window.points;
  const double cell = std::max(window.r, window.R / 2.0);
  const PointGrid grid(pts, cell);

  rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double radius = std::max(2.0 * window.r, 1e-9) * 1.5;
    for (int round = 0; round < 64; ++round) {
      double best = std::numeric_limits<double>::infinity();
      grid.for_each_within(pts[i], radius, [&](int j) {
        if (static_cast<std::size_t>(j) != i) best = std::min(best, distance(pts[i], pts[j]));
      });
      if (best <= radius) {
        rep.min_pairwise_distance = std::min(rep.min_pairwise_distance, best);
        break;
      }
      if (radius > 4.0 * window.W) break;
      radius *= 2.0;
    }
  }
  rep.packing_ok = rep.min_pairwise_distance >= 2.0 * window.r * (1.0 - kGeoTolerance);

  const double h = window.R / 4.0;
  const double reach = window.W - window.R;
  rep.hole_witness = Point(d);
  if (reach >= 0.0) {
    const long m = static_cast<long>(std::floor(reach / h));
    std::array<long, 3> idx{};
    const long kmax = d == 3 ? m : 0;
    for (idx[2] = d == 3 ? -m : 0; idx[2] <= kmax; ++idx[2])
      for (idx[1] = -m; idx[1] <= m; ++idx[1])
        for (idx[0] = -m; idx[0] <= m; ++idx[0]) {
          Point p(d);
          for (int k = 0; k < d; ++k) p[k] = idx[k] * h;
          if (p.norm() > reach) continue;
          ++rep.probes;
          const double dist = nearest_distance(grid, p, window.R);
          if (dist > rep.max_hole_radius) {
            rep.max_hole_radius = dist;
            rep.hole_witness = p;
          }
        }
  }
  rep.covering_ok = rep.max_hole_radius <= window.R;
  return rep;
}

void jitter_points(std::vector<Point>& points, double eta, std::mt19937_64& rng) {
  for (Point& p : points) p += random_in_ball(p.dim(), eta, rng);
}

TriangulationComplex delaunay_of_window(PointSetWindow& window, std::uint64_t seed) {
  try {
    TriangulationComplex cx = delaunay(window.points);
    cx.set_window(WindowInfo{Point(window.dimension), window.W});
    return cx;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::non_generic) throw;
  }
  const double eta = 1e-6 * window.r;
  std::mt19937_64 rng = SeedSplitter(seed).stream("jitter");
  jitter_points(window.points, eta, rng);
  window.r -= eta;
  window.R += eta;
  window.provenance.jitter += eta;
  window.provenance.seed = seed;
  TriangulationComplex cx = delaunay(window.points);
  cx.set_window(WindowInfo{Point(window.dimension), window.W});
  return cx;
}

std::size_t count_in_ball(const std::vector<Point>& points, const Point& center, double alpha) {
  std::size_t n = 0;
  const double a2 = alpha * alpha;
  for (const Point& p : points)
    if ((p - center).norm2() <= a2) ++n;
  return n;
}

}  // namespace delone
