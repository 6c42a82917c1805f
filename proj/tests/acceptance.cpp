/* Apache License, Version 2.0 */
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "delone/cube.hpp"
#include "delone/delaunay.hpp"
#include "delone/density.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/generators.hpp"
#include "delone/geometry.hpp"
#include "delone/oracle.hpp"
#include "delone/strips.hpp"
#include "delone/triangulation.hpp"
#include "delone/unbounded.hpp"

namespace delone {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<IdTuple> sorted_cells(const TriangulationComplex& cx) {
  std::vector<IdTuple> out;
  for (const IdTuple& c : cx.cells()) out.push_back(c.sorted());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome area_identity() {
  const std::vector<Point> tri{{0, 0}, {4, 0}, {0, 3}};
  const double a = area_via_circumradius(5, 4, 3, 2.5);
  const double m = measure(tri);
  const bool ok = std::abs(a - 6) <= 1e-12 && std::abs(m - 6) <= 1e-12 && std::abs(a - m) <= 1e-12;
  return {ok, fmt("abc/(4rho)=%.17g measure=%.17g", a, m)};
}

Outcome distorted_cube() {
  bool ok = true;
  double prev = INFINITY;
  std::string mins;
  std::size_t cubes = 0;
  double worst = 0;
  for (double W : {4.0, 6.0, 8.0}) {
    const CubeReport rep = analyze_distorted_cubes(W);
    ok = ok && rep.min_volume_certified <= prev;
    prev = rep.min_volume_certified;
    double layer_min = INFINITY;
    for (const CubeCell& c : rep.cubes) layer_min = std::min({layer_min, c.top_volume, c.bottom_volume});
    mins += fmt("%s%.4g (top/bottom %.4g)", mins.empty() ? "" : ", ", rep.min_volume_certified, layer_min);
    if (W != 8.0) continue;
    cubes = rep.cubes.size();
    ok = ok && cubes > 0 && rep.stray_tets == 0 && rep.cospherical_interior == 0;
    for (const CubeCell& c : rep.cubes) {
      ok = ok && c.tets == 7;
      worst = std::max({worst, std::abs(c.top_volume - 2.0 / 3.0 * cube_delta(c.corner[2] + 1)),
                        std::abs(c.bottom_volume - 2.0 / 3.0 * cube_delta(c.corner[2]))});
    }
  }
  ok = ok && worst <= 1e-9;
  return {ok, fmt("W=8: %zu interior cubes x 7 tets, max top/bottom volume error %.2e; min volume W=4,6,8: %s", cubes,
                  worst, mins.c_str())};
}

Outcome lifted_relation() {
  const FunctionalSpec FR = parse_functional("FR"), FE = parse_functional("FE");
  double worst = 0;
  for (int d : {2, 3})
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto pts = random_points(d + 1, d, 1000 * d + s);
      const double fe = eval(FE, pts), fr = eval(FR, pts);
      worst = std::max(worst, std::abs(fr - (d + 1) * (d + 2) * fe) / std::abs(fr));
    }
  double quad = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto pts = random_points(3, 2, 77 + s);
    quad = std::max(quad, std::abs(fe_quadrature(pts, 256) - fe_lifted_volume(pts)));
  }
  return {worst <= 1e-6 && quad <= 1e-6,
          fmt("2000 simplices, max relative error %.2e; quadrature s=256 max abs error %.2e", worst, quad)};
}

Outcome flip_class() {
  bool ok = true;
  std::string detail;
  for (const char* k : {"F1:c1=1", "F2:c2=1", "F3", "F4", "F5", "F6"}) {
    const ClassReport rep = flip_class_suite(parse_functional(k), 1000, 4242);
    ok = ok && rep.pass() && rep.trials == 1000;
    detail += fmt("%s%s %zu/%zu", detail.empty() ? "" : ", ", k, rep.violations, rep.trials);
  }
  return {ok, "violations " + detail};
}

Outcome finite_optimality() {
  bool ok = true;
  std::size_t total = 0, area_ties = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int n = 5 + static_cast<int>(i % 4);
    const auto pts = random_points(n, 2, 5000 + i);
    for (const char* k : {"F5", "FR", "FE"}) ok = ok && min_sum_triangulation(pts, parse_functional(k)).delaunay_is_minimum;
    const MinSumResult area = min_sum_triangulation(pts, parse_functional("AREA"));
    ok = ok && area.ties == area.triangulations;
    total += area.triangulations;
    area_ties += area.ties;
  }
  return {ok, fmt("200 sets, %zu triangulations enumerated, AREA ties %zu/%zu", total, area_ties, total)};
}

Outcome flip_engine() {
  bool ok = true;
  std::size_t flips = 0;
  double worst = -INFINITY;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(i % 27);
    const auto pts = random_points(n, 2, 9000 + i);
    const TriangulationComplex D = delaunay_2d(pts);
    const TriangulationComplex T = random_flip_walk(D, 3 * static_cast<std::size_t>(n), i);
    const LegalizeResult L = legalize_to_delaunay(T);
    ok = ok && sorted_cells(L.complex) == sorted_cells(D);
    for (const FlipRecord& f : L.flips) {
      worst = std::max(worst, f.after_max_circumradius - f.before_max_circumradius);
      ok = ok && f.after_max_circumradius <= f.before_max_circumradius + kGeoTolerance;
    }
    flips += L.flips.size();
  }
  return {ok, fmt("200 triangulations, %zu flips, max radius increase %.2e", flips, worst)};
}

Outcome strips() {
  const IsocelesPair p = compatible_isoceles(1.0, std::numbers::pi / 6, 1.6, std::numbers::pi / 5);
  StripConfig cfg;
  cfg.L = p.L;
  cfg.a = 1.0;
  cfg.c = 1.6;
  const FunctionalSpec F = parse_functional("F1:c1=1");
  cfg.m = choose_block_sizes(cfg, F, 6);
  const StripSequence seq = strip_gi_sequence(cfg, F, 6);
  const QuotientValues& q = seq.quotients;
  bool ok = !seq.degenerate && seq.g.size() == 6;
  double worst = 0;
  for (std::size_t i = 0; i < seq.g.size(); ++i) {
    const double dev = std::abs(seq.g[i] - (i % 2 == 0 ? q.Q_wide : q.Q));
    worst = std::max(worst, dev);
    ok = ok && dev < q.gap / 3;
  }
  ok = ok && seq.separation >= q.gap / 3 && seq.oscillates();
  const StripSequence area = strip_gi_sequence(cfg, parse_functional("AREA"), 6);
  const double dev = std::abs(area.f.back() - 1.0), bound = 3 * area.q / area.alphas.back();
  ok = ok && dev <= bound;
  std::string ms;
  for (int m : cfg.m) ms += fmt("%s%d", ms.empty() ? "" : ",", m);
  return {ok, fmt("m=%s gap=%.4g max|g-target|=%.4g separation=%.4g; AREA |f_6-1|=%.3g <= %.3g", ms.c_str(), q.gap,
                  worst, seq.separation, dev, bound)};
}

Outcome window_comparison() {
  const PointSetWindow w = lattice_window(2, 40, 40);
  bool ok = true;
  std::string detail;
  for (const char* k : {"F1:c1=1", "F5"}) {
    const ComparisonReport rep = main_theorem_comparison(w, parse_functional(k), 50, 40);
    ok = ok && rep.all_ordered() && rep.reversed_edges.size() == 50;
    detail += fmt("%s ordered=%d over %zu radii; ", k, rep.all_ordered(), rep.rows.size());
  }
  const ComparisonReport fr = main_theorem_comparison(w, parse_functional("FR"), 50, 40);
  ok = ok && fr.brackets_nonnegative();
  detail += fmt("FR first bracket >= 0: %d", fr.brackets_nonnegative());
  return {ok, detail};
}

Outcome count_certificates() {
  bool ok = true;
  std::string detail;
  auto run = [&](const char* name, PointSetWindow w) {
    const TriangulationComplex cx = delaunay_of_window(w, 60);
    const BoundsCertificate c = count_certificate(w, cx);
    const double v = 2 * c.r * c.r * c.r / c.q;
    ok = ok && c.exponents_ok() && c.min_cell_measure >= v;
    detail += fmt("%s: exponents %.3f/%.3f/%.3f/%.3f, min area %.4g >= %.4g; ", name, c.point_exponent,
                  c.cell_exponent, c.annulus_point_exponent, c.annulus_cell_exponent, c.min_cell_measure, v);
  };
  run("lattice", lattice_window(2, 60, 7));
  run("poisson", poisson_delone_window(2, 0.4, 1.5, 60, 11));
  return {ok, detail};
}

Outcome center_invariance() {
  PointSetWindow w = lattice_window(2, 60, 7);
  const TriangulationComplex cx = delaunay_of_window(w, 7);
  const auto grid = geometric_grid(20, 50);
  bool ok = true;
  std::string detail;
  for (const char* k : {"AREA", "F5"}) {
    const GapReport g = center_invariance_gap(cx, parse_functional(k), Point{5, 0}, grid);
    ok = ok && g.decays();
    detail += fmt("%s first-quartile max %.3g, last-quartile max %.3g; ", k, g.first_quartile_max, g.last_quartile_max);
  }
  return {ok, detail};
}

Outcome unbounded_prefix() {
  PointSetWindow w = poisson_delone_window(2, 0.4, 1.5, 60, 3);
  const UnboundedPrefix pre = build_unbounded_prefix(w, 5);
  const double q = interior_bound_q(delaunay_of_window(w, 3));
  const CellLocator loc(pre.complex);
  const auto used = pre.complex.vertex_ids();
  std::size_t hidden = 0;
  for (int i = 0; i < static_cast<int>(w.points.size()); ++i)
    if (!std::binary_search(used.begin(), used.end(), i) && loc.contains(w.points[i])) ++hidden;
  const bool ok = pre.longest_edge > 5 && pre.longest_edge > q && hidden == 0;
  return {ok, fmt("%zu cells, longest edge %.4g, Delaunay q %.4g, hidden points %zu", pre.complex.num_cells(),
                  pre.longest_edge, q, hidden)};
}

}  // namespace
}  // namespace delone

int main() {
  using namespace delone;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"area identity", area_identity},
      {"distorted cube", distorted_cube},
      {"lifted relation", lifted_relation},
      {"flip class suite", flip_class},
      {"finite optimality oracle", finite_optimality},
      {"flip engine", flip_engine},
      {"strip non-convergence", strips},
      {"window comparison", window_comparison},
      {"count certificates", count_certificates},
      {"center invariance", center_invariance},
      {"unbounded prefix", unbounded_prefix},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
