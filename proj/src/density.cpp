/* Apache License, Version 2.0 */

#include "delone/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"
#include "delone/generators.hpp"
#include "delone/geometry.hpp"
#include "delone/parallel.hpp"
#include "delone/predicates.hpp"
#include "delone/random.hpp"
#include "delone/triangulation.hpp"

namespace delone {
namespace {

constexpr double kContainSlack = 1e-12;

// Per cell: how far from z its vertices reach, how far its circumball
// reaches, and its F value.
struct CellExtent {
  double vertex_reach = 0.0;
  double ball_reach = 0.0;
  double value = 0.0;
};

std::vector<CellExtent> cell_extents(const TriangulationComplex& cx, const FunctionalSpec* F, const Point& z,
                                     std::span<const int> subset = {}) {
  const std::size_t n = subset.empty() ? cx.num_cells() : subset.size();
  std::vector<CellExtent> out(n);
  parallel_for(n, [&](std::size_t i) {
    const int c = subset.empty() ? static_cast<int>(i) : subset[i];
    const auto pts = cx.cell_points(c);
    CellExtent e;
    for (const Point& p : pts.span()) e.vertex_reach = std::max(e.vertex_reach, distance(p, z));
    const Circumsphere s = circumsphere(pts.span());
    e.ball_reach = distance(s.center, z) + s.radius;
    if (F != nullptr) e.value = eval(*F, pts.span());
    out[i] = e;
  });
  return out;
}

bool inside(double reach, double alpha) { return reach <= alpha * (1 + kContainSlack); }

const WindowInfo& require_window(const TriangulationComplex& cx) {
  if (!cx.window()) throw Error(ErrorCode::invalid_argument, "complex carries no window radius");
  return *cx.window();
}

void require_grid(const std::vector<double>& alphas) {
  if (alphas.empty()) throw Error(ErrorCode::invalid_argument, "empty alpha grid");
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (!(alphas[i] > 0) || (i > 0 && !(alphas[i] > alphas[i - 1])))
      throw Error(ErrorCode::invalid_argument, "alpha grid must be positive and increasing");
}

void require_safe(double top, double safe) {
  if (top > safe * (1 + 1e-12))
    throw Error(ErrorCode::alpha_out_of_range,
                "alpha " + std::to_string(top) + " reaches the window boundary; max admissible alpha is " +
                    std::to_string(safe));
}

double quartile_max(const std::vector<double>& v, bool last) {
  const std::size_t m = std::max<std::size_t>(1, (v.size() + 3) / 4);
  double out = 0.0;
  for (std::size_t i = 0; i < m && i < v.size(); ++i) out = std::max(out, v[last ? v.size() - 1 - i : i]);
  return out;
}

std::size_t count_within(const std::vector<double>& sorted_norms, double alpha) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted_norms.begin(), sorted_norms.end(), alpha * (1 + kContainSlack)) -
      sorted_norms.begin());
}

double binomial(double n, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (n - i) / (i + 1);
  return std::max(out, 0.0);
}

}  // namespace

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
  if (!(lo > 0) || !(hi >= lo) || !(ratio > 1)) throw Error(ErrorCode::invalid_argument, "need 0 < lo <= hi, ratio > 1");
  std::vector<double> out;
  for (double a = lo; a <= hi * (1 + 1e-12); a *= ratio) out.push_back(a);
  if (out.back() < hi * (1 - 1e-9)) out.push_back(hi);
  return out;
}

double max_safe_alpha(const TriangulationComplex& cx, const Point& z) {
  const WindowInfo& w = require_window(cx);
  return w.radius - distance(z, w.center) - 2 * interior_bound_q(cx);
}

DensitySequence density_sequence(const TriangulationComplex& cx, const FunctionalSpec& F, const Point& z,
                                 const std::vector<double>& alphas) {
  require_grid(alphas);
  require_safe(alphas.back(), max_safe_alpha(cx, z));
  const int d = cx.dimension();
  const auto ext = cell_extents(cx, &F, z);
  DensitySequence out;
  out.center = z;
  out.alphas = alphas;
  for (double alpha : alphas) {
    std::size_t nv = 0, nb = 0;
    double sv = 0.0, sb = 0.0;
    for (const CellExtent& e : ext) {
      if (inside(e.vertex_reach, alpha)) ++nv, sv += e.value;
      if (inside(e.ball_reach, alpha)) ++nb, sb += e.value;
    }
    out.cell_counts.push_back(nv);
    out.ball_counts.push_back(nb);
    out.sums.push_back(sv);
    out.ball_sums.push_back(sb);
    out.values.push_back(sv / (unit_ball_volume(d) * std::pow(alpha, d)));
  }
  const std::size_t tail = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(out.tail_fraction * static_cast<double>(alphas.size()))));
  out.liminf_tail = *std::min_element(out.values.end() - static_cast<std::ptrdiff_t>(tail), out.values.end());
  return out;
}

GapReport center_invariance_gap(const TriangulationComplex& cx, const FunctionalSpec& F, const Point& z,
                                const std::vector<double>& alphas) {
  require_grid(alphas);
  const WindowInfo& w = require_window(cx);
  const double shift = distance(z, w.center);
  require_safe(alphas.back() + shift, max_safe_alpha(cx, w.center));
  const DensitySequence a = density_sequence(cx, F, w.center, alphas);
  const DensitySequence b = density_sequence(cx, F, z, alphas);
  const auto ext = cell_extents(cx, &F, w.center);
  const int d = cx.dimension();
  GapReport out;
  out.alphas = alphas;
  out.f_origin = a.values;
  out.f_z = b.values;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    out.gap.push_back(std::abs(a.values[i] - b.values[i]));
    double ann = 0.0;
    for (const CellExtent& e : ext)
      if (inside(e.vertex_reach, alphas[i] + shift) && !inside(e.vertex_reach, alphas[i] - shift))
        ann += std::abs(e.value);
    out.annulus_bound.push_back(ann / (unit_ball_volume(d) * std::pow(alphas[i], d)));
  }
  out.first_quartile_max = quartile_max(out.gap, false);
  out.last_quartile_max = quartile_max(out.gap, true);
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorCode::invalid_argument, "need >= 2 samples");
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw Error(ErrorCode::invalid_argument, "log-log fit needs positive samples");
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

bool BoundsCertificate::exponents_ok() const noexcept {
  const double dd = d;
  return std::abs(point_exponent - dd) <= 0.1 && std::abs(cell_exponent - dd) <= 0.1 &&
         std::abs(annulus_point_exponent - (dd - 1)) <= 0.2 && std::abs(annulus_cell_exponent - (dd - 1)) <= 0.2;
}

BoundsCertificate count_certificate(const PointSetWindow& window, const TriangulationComplex& cx) {
  const int d = window.dimension;
  if (cx.dimension() != d) throw Error(ErrorCode::dimension_mismatch, "window and complex dimensions differ");
  BoundsCertificate c;
  c.d = d, c.r = window.r, c.R = window.R, c.W = window.W;
  const Point origin(d);
  const std::vector<int> cells = interior_cells(cx, 0.0);
  const auto ext = cell_extents(cx, nullptr, origin, cells);
  c.q = 0.0;
  c.min_cell_measure = std::numeric_limits<double>::infinity();
  std::unordered_map<int, std::size_t> degree;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto pts = cx.cell_points(cells[i]);
    c.q = std::max(c.q, circumsphere(pts.span()).radius);
    const double m = measure(pts.span());
    c.min_cell_measure = std::min(c.min_cell_measure, m);
    c.max_cell_measure = std::max(c.max_cell_measure, m);
    for (int v : cx.cells()[cells[i]]) ++degree[v];
  }
  const double q = c.q, r = c.r, R = c.R, Vd = unit_ball_volume(d);
  const double v = d == 2 ? 2 * r * r * r / q : 0.0;
  const double V = std::pow(2 * q, d);
  // Degrees are complete only for vertices whose whole star is certified.
  for (const auto& [id, deg] : degree)
    if (cx.points()[id].norm() + 4 * q <= window.W) c.max_vertex_degree = std::max(c.max_vertex_degree, deg);
  const double near = std::pow((2 * q + r) / r, d);
  c.degree_bound = static_cast<std::size_t>(std::floor(binomial(near, d)));
  c.theoretical = {
      {"v", v, d == 2 ? "2 r^3 / q (every triangle)" : "none: cell volumes have no positive lower bound in 3D"},
      {"V", V, "(2q)^d"},
      {"q", R, "R for the Delaunay triangulation"},
      {"p", std::pow(R, -static_cast<double>(d)), "N(alpha) >= ((alpha - R)/R)^d: R-balls at points cover"},
      {"P", std::pow(r, -static_cast<double>(d)), "N(alpha) <= ((alpha + r)/r)^d: disjoint r-balls"},
      {"P'", std::nan(""), "annulus points <= ((alpha+1+r)^d - (alpha-r)^d)/r^d"},
      {"s", Vd / V, "cells in B_alpha >= V_d (alpha - 2q)^d / V"},
      {"S", d == 2 ? Vd / v : std::nan(""), "cells in B_alpha <= V_d alpha^d / v (planar)"},
      {"S'", std::nan(""), "annulus cells <= V_d ((alpha+1)^d - (alpha-2q)^d) / v (planar)"},
      {"S''", static_cast<double>(c.degree_bound), "C(((2q + r)/r)^d, d): cells sharing a vertex"},
      {"e", std::nan(""), "sampled by check_ecal_bounds"},
      {"E", std::nan(""), "sampled by check_ecal_bounds"},
      {"C", std::nan(""), "E * S"},
  };
  c.volume_lower_ok = d != 2 || c.min_cell_measure >= v * (1 - kGeoTolerance);
  c.volume_upper_ok = c.max_cell_measure <= V * (1 + kGeoTolerance);
  c.degree_ok = c.max_vertex_degree <= c.degree_bound;

  std::vector<double> norms;
  for (const Point& p : window.points) norms.push_back(p.norm());
  std::sort(norms.begin(), norms.end());
  std::vector<double> reach;
  for (const CellExtent& e : ext) reach.push_back(e.vertex_reach);
  std::sort(reach.begin(), reach.end());

  const double top = window.W - 2 * q - 1;
  if (!(top > window.W / 8)) throw Error(ErrorCode::invalid_argument, "window too small for a count certificate");
  constexpr int kFitPoints = 36;
  for (int i = 0; i < kFitPoints; ++i) c.alphas.push_back(window.W / 8 + (top - window.W / 8) * i / (kFitPoints - 1));
  c.point_counts_ok = c.cell_counts_ok = true;
  std::vector<double> np, nc, ap, ac;
  for (double alpha : c.alphas) {
    const std::size_t pts = count_within(norms, alpha), cl = count_within(reach, alpha);
    const std::size_t ap1 = count_within(norms, alpha + 1) - pts, ac1 = count_within(reach, alpha + 1) - cl;
    c.point_counts.push_back(pts);
    c.cell_counts.push_back(cl);
    c.annulus_point_counts.push_back(ap1);
    c.annulus_cell_counts.push_back(ac1);
    np.push_back(static_cast<double>(pts));
    nc.push_back(static_cast<double>(cl));
    ap.push_back(static_cast<double>(ap1));
    ac.push_back(static_cast<double>(ac1));
    const double lo = alpha > R ? std::pow((alpha - R) / R, d) : 0.0;
    const double hi = std::pow((alpha + r) / r, d);
    const double ann_hi = (std::pow(alpha + 1 + r, d) - std::pow(std::max(0.0, alpha - r), d)) / std::pow(r, d);
    if (pts < lo || pts > hi || ap1 > ann_hi) c.point_counts_ok = false;
    const double cells_lo = alpha > 2 * q ? Vd * std::pow(alpha - 2 * q, d) / V : 0.0;
    if (cl < cells_lo) c.cell_counts_ok = false;
    if (d == 2) {
      const double cells_hi = Vd * alpha * alpha / v;
      const double ann_cells_hi = Vd * (std::pow(alpha + 1, 2) - std::pow(std::max(0.0, alpha - 2 * q), 2)) / v;
      if (cl > cells_hi || ac1 > ann_cells_hi) c.cell_counts_ok = false;
    }
  }
  c.point_exponent = loglog_slope(c.alphas, np);
  c.cell_exponent = loglog_slope(c.alphas, nc);
  c.annulus_point_exponent = loglog_slope(c.alphas, ap);
  c.annulus_cell_exponent = loglog_slope(c.alphas, ac);
  return c;
}

bool ComparisonReport::all_ordered() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.ordered; });
}

bool ComparisonReport::brackets_nonnegative() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.first_bracket >= -r.tolerance; });
}

bool ComparisonReport::containments_hold() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ComparisonRow& r) { return r.shrunk_in_prime && r.shrunk_in_legalized; });
}

Perturbation reverse_flip_perturbation(const TriangulationComplex& D, std::size_t flips, std::uint64_t seed,
                                       const std::vector<double>& alphas) {
  if (D.dimension() != 2) throw Error(ErrorCode::dimension_mismatch, "reverse flips are planar only");
  const WindowInfo& w = require_window(D);
  const double q = interior_bound_q(D);
  const auto straddles = [&](std::span<const int> quad) {
    for (double alpha : alphas) {
      int outside = 0;
      for (int v : quad) outside += distance(D.points()[v], w.center) > alpha * (1 + kContainSlack);
      if (outside == 1) return true;
    }
    return false;
  };

  std::vector<IdTuple> candidates;
  for (const IdTuple& e : D.interior_facets()) {
    const FacetCells& fc = *D.incident(e);
    const int u = D.opposite_vertex(fc.cell[0], e), v = D.opposite_vertex(fc.cell[1], e);
    const std::array<int, 4> quad{e[0], e[1], u, v};
    bool deep = true;
    for (int x : quad) deep = deep && distance(D.points()[x], w.center) + 2 * q <= w.radius;
    if (!deep || straddles(quad)) continue;
    // Strictly convex: the new diagonal u-v separates e[0] from e[1].
    const auto& P = D.points();
    const std::array<Point, 3> s0{P[u], P[v], P[e[0]]}, s1{P[u], P[v], P[e[1]]};
    const std::array<Point, 3> t0{P[e[0]], P[e[1]], P[u]}, t1{P[e[0]], P[e[1]], P[v]};
    if (orientation(s0) * orientation(s1) >= 0 || orientation(t0) * orientation(t1) >= 0) continue;
    if (!is_locally_delaunay(D, e)) continue;
    candidates.push_back(e);
  }
  if (flips > 0 && candidates.empty())
    throw Error(ErrorCode::no_reverse_flip, "no reversible Delaunay edge away from the window boundary");
  std::mt19937_64 rng = SeedSplitter(seed).stream("perturbation");
  std::shuffle(candidates.begin(), candidates.end(), rng);

  Perturbation out{D, {}};
  std::unordered_set<int> touched;  // cells of D already replaced
  for (const IdTuple& e : candidates) {
    if (out.reversed_edges.size() == flips) break;
    const FacetCells& fc = *D.incident(e);
    if (touched.count(fc.cell[0]) || touched.count(fc.cell[1])) continue;
    touched.insert(fc.cell[0]);
    touched.insert(fc.cell[1]);
    out.T.flip_edge(e);
    out.reversed_edges.push_back(e);
  }
  return out;
}

ComparisonReport main_theorem_comparison(const PointSetWindow& window_in, const FunctionalSpec& F, std::size_t flips,
                                         std::uint64_t seed, std::vector<double> alphas) {
  if (window_in.dimension != 2) throw Error(ErrorCode::dimension_mismatch, "comparison runs in the plane");
  PointSetWindow window = window_in;
  const TriangulationComplex D = delaunay_of_window(window, seed);
  const double q = interior_bound_q(D);
  const Point origin(2);
  const double safe = max_safe_alpha(D, origin);
  if (alphas.empty()) {
    if (!(safe > 8 * q)) throw Error(ErrorCode::alpha_out_of_range, "window too small for alpha >= 8q");
    alphas = geometric_grid(8 * q, safe);
  }
  require_grid(alphas);
  require_safe(alphas.back(), safe);

  Perturbation pert = reverse_flip_perturbation(D, flips, seed, alphas);
  TriangulationComplex& T = pert.T;
  T.set_window(D.window());
  ComparisonReport rep;
  rep.functional = F;
  rep.requested_flips = flips;
  rep.reversed_edges = pert.reversed_edges;
  rep.q_D = q;
  rep.q_T = interior_bound_q(T);

  const auto dext = cell_extents(D, &F, origin);
  const auto text = cell_extents(T, &F, origin);
  const double Vd = unit_ball_volume(2);
  rep.rows.resize(alphas.size());
  parallel_for(alphas.size(), [&](std::size_t i) {
    const double alpha = alphas[i];
    ComparisonRow row;
    row.alpha = alpha;
    std::vector<IdTuple> tcells, dcells;
    std::set<IdTuple> d_shrunk2, d_shrunk6;
    double annulus = 0.0;
    for (std::size_t c = 0; c < dext.size(); ++c) {
      const double reach = dext[c].vertex_reach;
      if (!inside(reach, alpha)) continue;
      row.sigma_D += dext[c].value;
      dcells.push_back(D.cells()[c]);
      if (inside(reach, alpha - 2 * q)) d_shrunk2.insert(D.cells()[c]);
      else annulus += std::abs(dext[c].value);
      if (inside(reach, alpha - 6 * q)) d_shrunk6.insert(D.cells()[c]);
    }
    for (std::size_t c = 0; c < text.size(); ++c) {
      if (!inside(text[c].vertex_reach, alpha)) continue;
      row.sigma_T += text[c].value;
      tcells.push_back(T.cells()[c]);
    }
    const TriangulationComplex Ta = TriangulationComplex::build(T.points(), tcells, Coverage::none);
    const TriangulationComplex Da = TriangulationComplex::build(D.points(), dcells, Coverage::none);
    const TriangulationComplex Dprime = restrict_delaunay(Da, Ta);
    const std::set<IdTuple> prime(Dprime.cells().begin(), Dprime.cells().end());
    for (const IdTuple& c : Dprime.cells()) row.sigma_D_prime += eval(F, Dprime.points_of(c).span());
    const LegalizeResult legal = legalize_to_delaunay(Ta);
    const std::set<IdTuple> legalized(legal.complex.cells().begin(), legal.complex.cells().end());
    row.shrunk_in_prime = std::includes(prime.begin(), prime.end(), d_shrunk2.begin(), d_shrunk2.end());
    row.shrunk_in_legalized =
        std::includes(legalized.begin(), legalized.end(), d_shrunk6.begin(), d_shrunk6.end());
    const double ball = Vd * alpha * alpha;
    row.f_D = row.sigma_D / ball;
    row.f_T = row.sigma_T / ball;
    row.first_bracket = row.sigma_T - row.sigma_D_prime;
    row.second_bracket = row.sigma_D_prime - row.sigma_D;
    row.slack = annulus / ball;
    row.tolerance = (std::abs(row.sigma_D) + std::abs(row.sigma_T) + 1) * 1e-9;
    row.ordered = row.sigma_D <= row.sigma_T + row.tolerance;
    rep.rows[i] = row;
  });
  return rep;
}

}  // namespace delone
