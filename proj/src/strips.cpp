/* Apache License, Version 2.0 */

#include "delone/strips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "delone/error.hpp"
#include "delone/geometry.hpp"
#include "delone/triangulation.hpp"

namespace delone {
namespace {

constexpr double kDiskSlack = 1e-9;
constexpr int kMaxBlockSize = 1 << 20;

double angle_opposite(const TriangleSides& t, int i) {
  const double a = t[static_cast<std::size_t>(i)];
  const double b = t[static_cast<std::size_t>((i + 1) % 3)];
  const double c = t[static_cast<std::size_t>((i + 2) % 3)];
  return std::acos(std::clamp((b * b + c * c - a * a) / (2 * b * c), -1.0, 1.0));
}

bool is_triangle(const TriangleSides& t) {
  return t[0] > 0 && t[1] > 0 && t[2] > 0 && t[0] < t[1] + t[2] && t[1] < t[0] + t[2] &&
         t[2] < t[0] + t[1];
}

// Isoceles (L, L, base) placed with its left leg and an L side on the x axis:
// vertices (0,0), (L,0), (x,h) with |(x,h)| = L and |(x,h) - (L,0)| = base.
struct Placed {
  double x = 0.0;
  double h = 0.0;
};

Placed place(double L, double base) {
  const double x = L - base * base / (2 * L);
  return {x, std::sqrt(std::max(0.0, L * L - x * x))};
}

std::vector<Point> concrete(double L, double base) {
  const Placed p = place(L, base);
  return {Point{0, 0}, Point{L, 0}, Point{p.x, p.h}};
}

std::vector<bool> block_rows(int block, int m) {
  if (block % 2 == 1) return std::vector<bool>(static_cast<std::size_t>(m), true);
  std::vector<bool> rows;
  for (int j = 0; j < m; ++j) rows.push_back(j % 2 == 1);  // N, W, ..., N
  return rows;
}

bool on_disk(double x, double y, double alpha2) { return x * x + y * y <= alpha2 * (1 + kDiskSlack); }

struct Interval {
  long lo = 0;
  long hi = -1;
};

// Integers n with vertex (o + nL, y) inside the disk.
Interval line_interval(const StripLayout& s, std::size_t line, double alpha2) {
  const double y = s.line_y[line];
  const double w2 = alpha2 * (1 + kDiskSlack) - y * y;
  if (w2 < 0) return {};
  const double w = std::sqrt(w2), o = s.line_offset[line];
  return {static_cast<long>(std::ceil((-w - o) / s.L)), static_cast<long>(std::floor((w - o) / s.L))};
}

long overlap(long lo1, long hi1, long lo2, long hi2) {
  return std::max(0L, std::min(hi1, hi2) - std::max(lo1, lo2) + 1);
}

double g_value(const QuotientValues& qv, const CopyCounts& c) {
  const double k = static_cast<double>(c.wide), l = static_cast<double>(c.narrow);
  return (k * qv.F_wide + l * qv.F_narrow) / (k * qv.A_wide + l * qv.A_narrow);
}

}  // namespace

bool compatible(const TriangleSides& t1, int shared1, const TriangleSides& t2, int shared2) {
  if (!is_triangle(t1) || !is_triangle(t2)) return false;
  const double e1 = t1[static_cast<std::size_t>(shared1)], e2 = t2[static_cast<std::size_t>(shared2)];
  if (std::abs(e1 - e2) > 1e-12 * std::max(e1, e2)) return false;
  if (angle_opposite(t1, shared1) + angle_opposite(t2, shared2) >= std::numbers::pi) return false;
  for (int i = 0; i < 3; ++i) {
    if (i != shared1 && angle_opposite(t1, i) >= std::numbers::pi / 2) return false;
    if (i != shared2 && angle_opposite(t2, i) >= std::numbers::pi / 2) return false;
  }
  return true;
}

IsocelesPair compatible_isoceles(double a, double phi, double c, double psi) {
  const double quarter = std::numbers::pi / 4;
  if (!(a > 0) || !(c > 0) || !(phi > 0) || !(psi > 0) || phi > quarter || psi > quarter)
    throw Error(ErrorCode::invalid_argument, "need a, c > 0 and phi, psi in (0, pi/4]");
  const double L = 1.05 * std::max({a / (2 * std::cos(phi)), c / (2 * std::cos(psi)), a / std::numbers::sqrt2,
                                    c / std::numbers::sqrt2});
  IsocelesPair out{{L, L, a}, {L, L, c}, L};
  if (!compatible(out.wide, 0, out.narrow, 0))
    throw Error(ErrorCode::invalid_argument, "constructed triangles are not compatible");
  return out;
}

void validate(const StripConfig& cfg) {
  if (!compatible(cfg.wide(), 0, cfg.narrow(), 0))
    throw Error(ErrorCode::invalid_argument, "strip triangles (L,L,a) and (L,L,c) are not compatible");
  if (cfg.extent < 1) throw Error(ErrorCode::invalid_argument, "strip extent must be >= 1");
  for (int m : cfg.m)
    if (m <= 0 || m % 2 == 0) throw Error(ErrorCode::invalid_argument, "block sizes must be odd and positive");
}

StripLayout strip_layout(const StripConfig& cfg, int k) {
  validate(cfg);
  if (k < 1 || static_cast<int>(cfg.m.size()) < k)
    throw Error(ErrorCode::invalid_argument, "need at least k block sizes, k >= 1");
  StripLayout s;
  s.L = cfg.L;
  const Placed w = place(cfg.L, cfg.a), n = place(cfg.L, cfg.c);
  s.x_wide = w.x, s.h_wide = w.h, s.x_narrow = n.x, s.h_narrow = n.h;

  std::vector<bool> side;
  double alpha = cfg.m[0] * w.h / 2;
  s.alphas.push_back(alpha);
  for (int b = 2; b <= k; ++b) {
    for (bool wide : block_rows(b, cfg.m[static_cast<std::size_t>(b - 1)])) {
      side.push_back(wide);
      alpha += wide ? w.h : n.h;
    }
    s.alphas.push_back(alpha);
  }
  s.row_is_wide.assign(side.rbegin(), side.rend());
  s.row_is_wide.insert(s.row_is_wide.end(), static_cast<std::size_t>(cfg.m[0]), true);
  s.row_is_wide.insert(s.row_is_wide.end(), side.begin(), side.end());

  s.line_y.push_back(-alpha);
  s.line_offset.push_back(0.0);
  for (bool wide : s.row_is_wide) {
    s.line_y.push_back(s.line_y.back() + (wide ? w.h : n.h));
    s.line_offset.push_back(s.line_offset.back() + (wide ? w.x : n.x));
  }
  return s;
}

StripTriangulation strip_block_triangulation(const StripConfig& cfg, int k) {
  const StripLayout s = strip_layout(cfg, k);
  for (std::size_t j = 0; j + 1 < s.row_is_wide.size(); ++j)
    if (!s.row_is_wide[j] && !s.row_is_wide[j + 1])
      throw Error(ErrorCode::invalid_argument, "two narrow strips are adjacent");

  const double X = s.alphas.back() + cfg.extent * cfg.L;
  const std::size_t lines = s.line_y.size();
  std::vector<Interval> range(lines);
  for (std::size_t j = 0; j < lines; ++j) {
    const double o = s.line_offset[j];
    range[j] = {static_cast<long>(std::ceil((-X - o) / s.L)), static_cast<long>(std::floor((X - o) / s.L))};
  }

  std::map<std::pair<std::size_t, long>, int> ids;
  std::vector<Point> points;
  auto vertex = [&](std::size_t line, long n) {
    auto [it, fresh] = ids.try_emplace({line, n}, static_cast<int>(points.size()));
    if (fresh) points.push_back(Point{s.line_offset[line] + static_cast<double>(n) * s.L, s.line_y[line]});
    return it->second;
  };
  std::vector<IdTuple> cells;
  std::vector<bool> wide;
  for (std::size_t j = 0; j + 1 < lines; ++j) {
    const Interval b = range[j], t = range[j + 1];
    for (long n = std::min(b.lo, t.lo) - 1; n <= std::max(b.hi, t.hi); ++n) {
      if (n >= b.lo && n + 1 <= b.hi && n >= t.lo && n <= t.hi) {
        cells.push_back(IdTuple{vertex(j, n), vertex(j, n + 1), vertex(j + 1, n)}.sorted());
        wide.push_back(s.row_is_wide[j]);
      }
      if (n + 1 >= b.lo && n + 1 <= b.hi && n >= t.lo && n + 1 <= t.hi) {
        cells.push_back(IdTuple{vertex(j, n + 1), vertex(j + 1, n + 1), vertex(j + 1, n)}.sorted());
        wide.push_back(s.row_is_wide[j]);
      }
    }
  }

  StripTriangulation out;
  out.window.dimension = 2;
  out.window.points = points;
  out.window.r = std::min({cfg.L, cfg.a, cfg.c}) / 2;
  out.window.R = std::max(circumsphere(concrete(cfg.L, cfg.a)).radius, circumsphere(concrete(cfg.L, cfg.c)).radius);
  out.window.W = s.alphas.back();
  out.window.provenance.generator = "strips";
  out.window.provenance.params = {{"L", cfg.L}, {"a", cfg.a}, {"c", cfg.c}, {"k", k}, {"extent", cfg.extent}};
  for (int b = 0; b < k; ++b)
    out.window.provenance.params.emplace_back("m" + std::to_string(b + 1), cfg.m[static_cast<std::size_t>(b)]);
  out.window.provenance.note = "rows cut at |x| <= alpha_k + extent*L";
  out.complex = TriangulationComplex::build(std::move(points), std::move(cells), Coverage::none);
  out.complex.set_window(WindowInfo{Point{0.0, 0.0}, out.window.W});
  for (const IdTuple& f : out.complex.interior_facets())
    if (!is_locally_delaunay(out.complex, f))
      throw Error(ErrorCode::invalid_argument, "strip triangulation has a non-locally-Delaunay edge");
  out.alphas = s.alphas;
  out.row_is_wide = s.row_is_wide;
  out.cell_is_wide = std::move(wide);
  return out;
}

CopyCounts strip_counts_closed_form(const StripLayout& s, double alpha) {
  const double alpha2 = alpha * alpha;
  CopyCounts c;
  std::vector<Interval> I(s.line_y.size());
  for (std::size_t j = 0; j < I.size(); ++j) I[j] = line_interval(s, j, alpha2);
  for (std::size_t j = 0; j + 1 < I.size(); ++j) {
    const Interval b = I[j], t = I[j + 1];
    if (b.lo > b.hi || t.lo > t.hi) continue;
    const long up = overlap(b.lo, b.hi - 1, t.lo, t.hi);
    const long down = overlap(b.lo - 1, b.hi - 1, t.lo, t.hi - 1);
    (s.row_is_wide[j] ? c.wide : c.narrow) += static_cast<std::size_t>(up + down);
  }
  return c;
}

CopyCounts strip_counts_enumerated(const StripLayout& s, double alpha) {
  const double alpha2 = alpha * alpha;
  CopyCounts c;
  for (std::size_t j = 0; j + 1 < s.line_y.size(); ++j) {
    const double yb = s.line_y[j], yt = s.line_y[j + 1];
    if (std::abs(yb) > alpha * 1.01 && std::abs(yt) > alpha * 1.01 && yb * yt > 0) continue;
    const double ob = s.line_offset[j], ot = s.line_offset[j + 1];
    const long first = static_cast<long>(std::floor((-alpha - std::max(ob, ot)) / s.L)) - 2;
    const long last = static_cast<long>(std::ceil((alpha - std::min(ob, ot)) / s.L)) + 2;
    std::size_t& bucket = s.row_is_wide[j] ? c.wide : c.narrow;
    for (long n = first; n <= last; ++n) {
      const double b0 = ob + static_cast<double>(n) * s.L, b1 = b0 + s.L;
      const double t0 = ot + static_cast<double>(n) * s.L, t1 = t0 + s.L;
      if (on_disk(b0, yb, alpha2) && on_disk(b1, yb, alpha2) && on_disk(t0, yt, alpha2)) ++bucket;
      if (on_disk(b1, yb, alpha2) && on_disk(t1, yt, alpha2) && on_disk(t0, yt, alpha2)) ++bucket;
    }
  }
  return c;
}

QuotientValues strip_quotients(const StripConfig& cfg, const FunctionalSpec& F) {
  validate(cfg);
  const auto w = concrete(cfg.L, cfg.a), n = concrete(cfg.L, cfg.c);
  QuotientValues q;
  q.F_wide = eval(F, w), q.F_narrow = eval(F, n);
  q.A_wide = measure(w), q.A_narrow = measure(n);
  q.Q_wide = q.F_wide / q.A_wide;
  q.Q_narrow = q.F_narrow / q.A_narrow;
  q.Q = (q.F_wide + q.F_narrow) / (q.A_wide + q.A_narrow);
  q.gap = std::abs(q.Q_wide - q.Q);
  q.degenerate = std::abs(q.Q_wide - q.Q_narrow) <= 1e-12 * std::max(std::abs(q.Q_wide), std::abs(q.Q_narrow));
  return q;
}

std::vector<int> choose_block_sizes(StripConfig cfg, const FunctionalSpec& F, int k, double gap_fraction) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "need k >= 1 blocks");
  if (!(gap_fraction > 0 && gap_fraction < 0.5)) throw Error(ErrorCode::invalid_argument, "gap fraction must be in (0, 1/2)");
  const int m1 = cfg.m.empty() ? 3 : cfg.m[0];
  cfg.m = {m1};
  const QuotientValues qv = strip_quotients(cfg, F);
  if (qv.degenerate)
    throw Error(ErrorCode::degenerate_strips, "F/A agrees on both triangles; no oscillation to force");
  for (int i = 2; i <= k; ++i) {
    const double target = (i % 2 == 0) ? qv.Q : qv.Q_wide;
    cfg.m.push_back(1);
    for (;;) {
      const StripLayout s = strip_layout(cfg, i);
      const double g = g_value(qv, strip_counts_closed_form(s, s.alphas.back()));
      if (std::abs(g - target) < gap_fraction * qv.gap) break;
      if (cfg.m.back() > kMaxBlockSize)
        throw Error(ErrorCode::too_large, "block " + std::to_string(i) + " did not reach its target");
      cfg.m.back() = 2 * cfg.m.back() + 1;
    }
  }
  return cfg.m;
}

bool StripSequence::oscillates() const noexcept {
  return !degenerate && g.size() >= 2 && odd_near_wide && even_near_Q && separation >= quotients.gap / 3;
}

StripSequence strip_gi_sequence(StripConfig cfg, const FunctionalSpec& F, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "need k >= 1 blocks");
  StripSequence out;
  out.quotients = strip_quotients(cfg, F);
  out.degenerate = out.quotients.degenerate;
  if (static_cast<int>(cfg.m.size()) < k) {
    if (!out.degenerate) {
      cfg.m = choose_block_sizes(cfg, F, k);
    } else {
      if (cfg.m.empty()) cfg.m.push_back(3);
      while (static_cast<int>(cfg.m.size()) < k) cfg.m.push_back(2 * cfg.m.back() + 1);
    }
  }
  cfg.m.resize(static_cast<std::size_t>(k));
  out.m = cfg.m;
  const StripLayout s = strip_layout(cfg, k);
  out.alphas = s.alphas;
  out.q = std::max(circumsphere(concrete(cfg.L, cfg.a)).radius, circumsphere(concrete(cfg.L, cfg.c)).radius);
  const QuotientValues& qv = out.quotients;
  for (double alpha : s.alphas) {
    const CopyCounts c = strip_counts_enumerated(s, alpha);
    out.k_counts.push_back(c.wide);
    out.l_counts.push_back(c.narrow);
    const double sum = static_cast<double>(c.wide) * qv.F_wide + static_cast<double>(c.narrow) * qv.F_narrow;
    out.f.push_back(sum / (std::numbers::pi * alpha * alpha));
    out.g.push_back(g_value(qv, c));
  }
  out.odd_near_wide = out.even_near_Q = true;
  out.separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.g.size(); ++i) {
    const bool odd = i % 2 == 0;  // i is zero-based
    const double target = odd ? qv.Q_wide : qv.Q;
    if (!(std::abs(out.g[i] - target) < qv.gap / 3)) (odd ? out.odd_near_wide : out.even_near_Q) = false;
    if (!odd)
      for (std::size_t j = 0; j < out.g.size(); j += 2)
        out.separation = std::min(out.separation, std::abs(out.g[i] - out.g[j]));
  }
  if (out.g.size() < 2) out.separation = 0.0;
  return out;
}

}  // namespace delone
