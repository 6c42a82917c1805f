/* Apache License, Version 2.0 */

#include "delone/functionals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"
#include "delone/oracle.hpp"
#include "delone/random.hpp"

namespace delone {
namespace {

double sum_sq_edges(std::span<const Point> s) {
  double t = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) t += (s[i] - s[j]).norm2();
  return t;
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw Error(ErrorCode::invalid_argument, "bad number '" + std::string(text) + "'");
  return v;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Point unit_sphere_point(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Point p(d);
  double n = 0.0;
  while (n == 0.0) {
    for (int k = 0; k < d; ++k) p[k] = N(rng);
    n = p.norm();
  }
  return p * (1.0 / n);
}

}  // namespace

bool FunctionalSpec::admits(int d) const noexcept {
  switch (kind) {
    case FunctionalKind::F3:
    case FunctionalKind::F4:
    case FunctionalKind::F5:
    case FunctionalKind::F6:
      return d == 2;
    default:
      return d == 2 || d == 3;
  }
}

std::string FunctionalSpec::to_string() const {
  switch (kind) {
    case FunctionalKind::F1:
      return "F1:c1=" + format_number(c1);
    case FunctionalKind::F2:
      return "F2:c2=" + format_number(c2);
    case FunctionalKind::F3:
      return "F3";
    case FunctionalKind::F4:
      return "F4";
    case FunctionalKind::F5:
      return "F5";
    case FunctionalKind::F6:
      return "F6";
    case FunctionalKind::FR:
      return "FR";
    case FunctionalKind::FE:
      return "FE";
    case FunctionalKind::AREA:
      return "AREA";
  }
  return "?";
}

FunctionalSpec parse_functional(std::string_view text) {
  FunctionalSpec F;
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view param = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  static constexpr std::pair<std::string_view, FunctionalKind> kNames[] = {
      {"F1", FunctionalKind::F1}, {"F2", FunctionalKind::F2}, {"F3", FunctionalKind::F3},
      {"F4", FunctionalKind::F4}, {"F5", FunctionalKind::F5}, {"F6", FunctionalKind::F6},
      {"FR", FunctionalKind::FR}, {"FE", FunctionalKind::FE}, {"AREA", FunctionalKind::AREA}};
  const auto it = std::find_if(std::begin(kNames), std::end(kNames), [&](const auto& e) { return e.first == name; });
  if (it == std::end(kNames)) throw Error(ErrorCode::invalid_argument, "unknown functional '" + std::string(text) + "'");
  F.kind = it->second;
  if (!param.empty()) {
    if (F.kind == FunctionalKind::F1 && param.starts_with("c1=")) {
      F.c1 = parse_number(param.substr(3));
    } else if (F.kind == FunctionalKind::F2 && param.starts_with("c2=")) {
      F.c2 = parse_number(param.substr(3));
    } else {
      throw Error(ErrorCode::invalid_argument, "unexpected parameter in '" + std::string(text) + "'");
    }
  } else if (colon != std::string_view::npos) {
    throw Error(ErrorCode::invalid_argument, "empty parameter in '" + std::string(text) + "'");
  }
  if (!(F.c1 > 0.0)) throw Error(ErrorCode::invalid_argument, "c1 must be positive");
  if (!(F.c2 >= 1.0)) throw Error(ErrorCode::invalid_argument, "c2 must be at least 1");
  return F;
}

double eval(const FunctionalSpec& F, std::span<const Point> s) {
  if (s.empty()) throw Error(ErrorCode::dimension_mismatch, "empty simplex");
  const int d = s[0].dim();
  require_simplex(s, d + 1, d);
  if (!F.admits(d)) throw Error(ErrorCode::dimension_mismatch, F.to_string() + " is not defined in this dimension");
  switch (F.kind) {
    case FunctionalKind::F1:
      return std::pow(circumsphere(s).radius, F.c1);
    case FunctionalKind::F2:
      return std::pow(circumsphere(s).radius, F.c2) * measure(s);
    case FunctionalKind::F3:
      return -inradius_2d(s);
    case FunctionalKind::F4: {
      const double a = measure(s);
      if (a == 0.0) throw Error(ErrorCode::degenerate_simplex, "F4 is unbounded on a flat triangle");
      return sum_sq_edges(s) / a;
    }
    case FunctionalKind::F5:
      return sum_sq_edges(s) * measure(s);
    case FunctionalKind::F6: {
      const Circumsphere cs = circumsphere(s);
      return (centroid(s) - cs.center).norm2() * measure(s);
    }
    case FunctionalKind::FR:
      return measure(s) * sum_sq_edges(s);
    case FunctionalKind::FE:
      return fe_lifted_volume(s);
    case FunctionalKind::AREA:
      return measure(s);
  }
  return 0.0;
}

double fe_lifted_volume(std::span<const Point> s) {
  const int d = s.empty() ? 0 : s[0].dim();
  require_simplex(s, d + 1, d);
  const double vol = measure(s);
  if (vol == 0.0) throw Error(ErrorCode::degenerate_simplex, "lifted volume of a flat simplex");
  // The integrand is translation invariant; centering keeps it well scaled.
  const Point g = centroid(s);
  std::array<Point, kMaxDim + 1> v;
  for (int i = 0; i <= d; ++i) v[i] = s[i] - g;
  double vertex_sum = 0.0;
  for (int i = 0; i <= d; ++i) vertex_sum += v[i].norm2();
  const double interpolant = vol * vertex_sum / (d + 1);
  // Degree-2 rule: vertex weight (2-d)/((d+1)(d+2)), edge midpoints 4/((d+1)(d+2)).
  const double denom = static_cast<double>((d + 1) * (d + 2));
  double midpoint_sum = 0.0;
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) midpoint_sum += ((v[i] + v[j]) * 0.5).norm2();
  const double paraboloid = vol * ((2.0 - d) * vertex_sum + 4.0 * midpoint_sum) / denom;
  return interpolant - paraboloid;
}

double sum_over(const FunctionalSpec& F, const TriangulationComplex& cx, std::span<const int> cells) {
  double total = 0.0;
  if (cells.empty()) {
    for (int c = 0; c < static_cast<int>(cx.num_cells()); ++c) total += eval(F, cx.cell_points(c).span());
  } else {
    for (int c : cells) total += eval(F, cx.cell_points(c).span());
  }
  return total;
}

EcalBounds check_ecal_bounds(const FunctionalSpec& F, double r, double q, int d, std::size_t samples,
                             std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "need at least one sample");
  if (!(r > 0.0) || !(q >= r)) throw Error(ErrorCode::invalid_argument, "need 0 < r <= q");
  if (!F.admits(d)) throw Error(ErrorCode::dimension_mismatch, F.to_string() + " is not defined in this dimension");
  std::mt19937_64 rng = SeedSplitter(seed).stream("generator");
  std::uniform_real_distribution<double> radius(r, q);
  EcalBounds out;
  out.e_hat = std::numeric_limits<double>::infinity();
  out.E_hat = -std::numeric_limits<double>::infinity();
  const std::size_t budget = samples * 20000;
  const double min_edge2 = 4.0 * r * r;
  while (out.accepted < samples) {
    if (out.attempts >= budget)
      throw Error(ErrorCode::sampler_starved, "too few admissible simplices; r is too close to q");
    ++out.attempts;
    const double rho = radius(rng);
    std::array<Point, kMaxDim + 1> s;
    for (int i = 0; i <= d; ++i) s[i] = unit_sphere_point(d, rng) * rho;
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      for (int j = i + 1; j <= d && ok; ++j) ok = (s[i] - s[j]).norm2() >= min_edge2;
    const std::span<const Point> sp(s.data(), d + 1);
    if (!ok || orientation(sp) == 0) continue;
    const double v = eval(F, sp);
    out.e_hat = std::min(out.e_hat, v);
    out.E_hat = std::max(out.E_hat, v);
    ++out.accepted;
  }
  return out;
}

double InequalityCheck::tolerance() const noexcept { return (std::fabs(left) + std::fabs(right) + 1.0) * 1e-9; }

InequalityCheck check_flip_inequality(const FunctionalSpec& F, std::vector<Point> points) {
  const RadonPair rp = radon_two_triangulations(std::move(points));
  InequalityCheck out;
  out.left = sum_over(F, rp.D);
  out.right = sum_over(F, rp.T);
  out.pass = out.left <= out.right + out.tolerance();
  return out;
}

InequalityCheck check_g_inequality(const FunctionalSpec& F, const TriangulationComplex& T_prime,
                                   const std::vector<Point>& Y) {
  const TriangulationComplex D = delaunay(Y);
  const TriangulationComplex Dp = restrict_delaunay(D, T_prime);
  InequalityCheck out;
  out.left = sum_over(F, Dp);
  out.right = sum_over(F, T_prime);
  out.pass = out.left <= out.right + out.tolerance();
  return out;
}

std::vector<Point> random_points(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng = SeedSplitter(seed).stream("generator");
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point p(d);
    for (int k = 0; k < d; ++k) p[k] = U(rng);
    pts.push_back(p);
  }
  return pts;
}

ClassReport flip_class_suite(const FunctionalSpec& F, std::size_t trials, std::uint64_t seed, int d) {
  ClassReport rep;
  rep.functional = F;
  rep.min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t draw = 0;
  while (rep.trials < trials) {
    std::vector<Point> pts = random_points(d + 2, d, splitmix64(seed + draw++));
    InequalityCheck chk;
    try {
      chk = check_flip_inequality(F, pts);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::interior_point || e.code() == ErrorCode::non_generic) continue;
      throw;
    }
    ++rep.trials;
    rep.min_margin = std::min(rep.min_margin, chk.margin());
    if (!chk.pass) {
      ++rep.violations;
      if (!rep.witness) rep.witness = pts;
    }
  }
  return rep;
}

ClassReport g_class_suite(const FunctionalSpec& F, std::size_t trials, int n_min, int n_max, std::uint64_t seed) {
  if (n_min < 3 || n_max < n_min || n_max > 9) throw Error(ErrorCode::invalid_argument, "need 3 <= n_min <= n_max <= 9");
  ClassReport rep;
  rep.functional = F;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const int n = n_min + static_cast<int>(t % static_cast<std::size_t>(n_max - n_min + 1));
    const std::vector<Point> Y = random_points(n, 2, splitmix64(seed ^ (0x51ed2701ULL + t)));
    std::vector<IdTuple> dcells = delaunay(Y).cells();
    std::sort(dcells.begin(), dcells.end());
    for (const TriangulationComplex& T : enumerate_triangulations_2d(Y)) {
      std::vector<IdTuple> off;
      for (const IdTuple& c : T.cells())
        if (!std::binary_search(dcells.begin(), dcells.end(), c)) off.push_back(c);
      std::vector<TriangulationComplex> candidates{T};
      if (!off.empty() && off.size() < T.num_cells())
        candidates.push_back(TriangulationComplex::build(Y, off, Coverage::none));
      for (const TriangulationComplex& Tp : candidates) {
        const InequalityCheck chk = check_g_inequality(F, Tp, Y);
        rep.min_margin = std::min(rep.min_margin, chk.margin());
        if (!chk.pass) {
          ++rep.violations;
          if (!rep.witness) rep.witness = Y;
        }
      }
    }
    ++rep.trials;
  }
  return rep;
}

}  // namespace delone
