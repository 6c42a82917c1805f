/* Apache License, Version 2.0 */

#include "delone/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "delone/error.hpp"

namespace delone {
namespace {

// Solves A x = b in place by partial pivoting; n <= kMaxDim.
bool solve(std::array<std::array<double, kMaxDim>, kMaxDim>& a, std::array<double, kMaxDim>& b,
           int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * b[c];
    b[r] = s / a[r][r];
  }
  return true;
}

double abs_det(std::span<const Point> simplex) {
  const int d = simplex[0].dim();
  std::array<std::array<double, kMaxDim>, kMaxDim> a{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = simplex[i + 1][j] - simplex[0][j];
  double det = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int r = col + 1; r < d; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    std::swap(a[pivot], a[col]);
    det *= a[col][col];
    for (int r = col + 1; r < d; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return std::fabs(det);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void require_simplex(std::span<const Point> pts, int count, int d) {
  if (static_cast<int>(pts.size()) != count) {
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(count) + " points, got " + std::to_string(pts.size()));
  }
  for (const Point& p : pts)
    if (p.dim() != d) throw Error(ErrorCode::dimension_mismatch, "mixed point dimensions");
}

Circumsphere circumsphere(std::span<const Point> simplex) {
  if (simplex.empty()) throw Error(ErrorCode::dimension_mismatch, "empty simplex");
  const int d = simplex[0].dim();
  require_simplex(simplex, d + 1, d);
  if (orientation(simplex) == 0)
    throw Error(ErrorCode::degenerate_simplex, "flat simplex has no circumsphere");

  // 2 w_i . c = |w_i|^2 with w_i = p_i - p_0 and c relative to p_0.
  std::array<std::array<double, kMaxDim>, kMaxDim> a{};
  std::array<double, kMaxDim> b{};
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) {
      const double w = simplex[i + 1][j] - simplex[0][j];
      a[i][j] = 2.0 * w;
      s += w * w;
    }
    b[i] = s;
  }
  if (!solve(a, b, d)) throw Error(ErrorCode::degenerate_simplex, "singular circumsphere system");

  Circumsphere cs{Point(d), 0.0};
  for (int j = 0; j < d; ++j) cs.center[j] = simplex[0][j] + b[j];
  double r = 0.0;
  for (const Point& p : simplex) r += distance(cs.center, p);
  cs.radius = r / (d + 1);
  return cs;
}

double measure(std::span<const Point> simplex) {
  if (simplex.empty()) return 0.0;
  const int d = simplex[0].dim();
  require_simplex(simplex, d + 1, d);
  if (orientation(simplex) == 0) return 0.0;
  return abs_det(simplex) / factorial(d);
}

double area_via_circumradius(double a, double b, double c, double rho) {
  if (!(a > 0 && b > 0 && c > 0) || a >= b + c || b >= a + c || c >= a + b)
    throw Error(ErrorCode::invalid_argument, "edge lengths violate the triangle inequality");
  if (!(rho > 0)) throw Error(ErrorCode::invalid_argument, "circumradius must be positive");
  return a * b * c / (4.0 * rho);
}

LiftedPoint lift(const Point& p) {
  LiftedPoint q(p.dim() + 1);
  for (int i = 0; i < p.dim(); ++i) q[i] = p[i];
  q[p.dim()] = p.norm2();
  return q;
}

double inradius_2d(std::span<const Point> triangle) {
  require_simplex(triangle, 3, 2);
  const double area = measure(triangle);
  if (area == 0.0) throw Error(ErrorCode::degenerate_simplex, "inradius of a flat triangle");
  const double s = 0.5 * (distance(triangle[0], triangle[1]) + distance(triangle[1], triangle[2]) +
                          distance(triangle[2], triangle[0]));
  return area / s;
}

Point centroid(std::span<const Point> simplex) {
  if (simplex.empty()) throw Error(ErrorCode::dimension_mismatch, "empty simplex");
  Point c(simplex[0].dim());
  for (const Point& p : simplex) c += p;
  return c * (1.0 / static_cast<double>(simplex.size()));
}

std::vector<double> edge_lengths(std::span<const Point> simplex) {
  std::vector<double> out;
  for (std::size_t i = 0; i < simplex.size(); ++i)
    for (std::size_t j = i + 1; j < simplex.size(); ++j) out.push_back(distance(simplex[i], simplex[j]));
  return out;
}

double unit_ball_volume(int d) {
  switch (d) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    case 3: return 4.0 * std::numbers::pi / 3.0;
    default: return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
  }
}

}  // namespace delone
