/* Apache License, Version 2.0 */

#include "delone/predicates.hpp"

#include <gmpxx.h>

#include <array>
#include <atomic>
#include <cmath>
#include <string>

#include "delone/error.hpp"

namespace delone {
namespace {

constexpr int kMaxN = kMaxDim + 1;

// Accept the floating-point sign when |det| exceeds this multiple of the
// permanent. The worst-case rounding error of the expansion for n <= 5 with
// entries carrying a few ulps of error stays below 100 u ~ 1.1e-14.
constexpr double kFilter = 1e-13;

std::atomic<long> g_exact_fallbacks{0};

template <typename T>
using Matrix = std::array<std::array<T, kMaxN>, kMaxN>;

struct DetPerm {
  double det;
  double perm;
};

// Laplace expansion over the rows row..n-1 and the columns not in `used`.
DetPerm expand(const Matrix<double>& m, int n, int row, unsigned used) {
  if (row == n) return {1.0, 1.0};
  double det = 0.0;
  double perm = 0.0;
  int parity = 0;
  for (int c = 0; c < n; ++c) {
    if (used & (1u << c)) continue;
    const double a = m[row][c];
    if (a != 0.0) {
      const DetPerm sub = expand(m, n, row + 1, used | (1u << c));
      const double term = a * sub.det;
      det += (parity & 1) ? -term : term;
      perm += std::fabs(a) * sub.perm;
    }
    ++parity;
  }
  return {det, perm};
}

int exact_det_sign(Matrix<mpq_class>& m, int n) {
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    if (sgn(m[col][col]) < 0) sign = -sign;
    for (int r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const mpq_class factor = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return sign;
}

void check_points(std::span<const Point> pts, int count, int d) {
  if (d < 1 || d > kMaxDim || static_cast<int>(pts.size()) != count) {
    throw Error(ErrorCode::dimension_mismatch,
                "expected " + std::to_string(count) + " points, got " +
                    std::to_string(pts.size()));
  }
  for (const Point& p : pts) {
    if (p.dim() != d)
      throw Error(ErrorCode::dimension_mismatch, "mixed point dimensions");
  }
}

int filtered_sign(const Matrix<double>& m, int n) {
  const DetPerm dp = expand(m, n, 0, 0u);
  if (std::fabs(dp.det) > dp.perm * kFilter) return dp.det > 0 ? 1 : -1;
  return 2;  // undecided
}

}  // namespace

int orientation(std::span<const Point> pts) {
  const int d = pts.empty() ? 0 : pts[0].dim();
  check_points(pts, d + 1, d);
  Matrix<double> m{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
  const int s = filtered_sign(m, d);
  if (s != 2) return s;

  g_exact_fallbacks.fetch_add(1, std::memory_order_relaxed);
  Matrix<mpq_class> q;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) q[i][j] = mpq_class(pts[i + 1][j]) - mpq_class(pts[0][j]);
  return exact_det_sign(q, d);
}

int lifted_orientation(std::span<const Point> pts) {
  const int d = pts.empty() ? 0 : pts[0].dim();
  if (d >= kMaxDim) throw Error(ErrorCode::dimension_mismatch, "lifted dimension too large");
  check_points(pts, d + 2, d);
  const int n = d + 1;
  Matrix<double> m{};
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) {
      const double w = pts[i + 1][j] - pts[0][j];
      m[i][j] = w;
      s += w * w;
    }
    m[i][d] = s;
  }
  const int s = filtered_sign(m, n);
  if (s != 2) return s;

  g_exact_fallbacks.fetch_add(1, std::memory_order_relaxed);
  Matrix<mpq_class> q;
  for (int i = 0; i < n; ++i) {
    mpq_class sum = 0;
    for (int j = 0; j < d; ++j) {
      q[i][j] = mpq_class(pts[i + 1][j]) - mpq_class(pts[0][j]);
      sum += q[i][j] * q[i][j];
    }
    q[i][d] = sum;
  }
  return exact_det_sign(q, n);
}

SphereSide in_sphere(std::span<const Point> simplex, const Point& query) {
  const int d = simplex.empty() ? 0 : simplex[0].dim();
  check_points(simplex, d + 1, d);
  if (query.dim() != d) throw Error(ErrorCode::dimension_mismatch, "query dimension");
  const int o = orientation(simplex);
  if (o == 0) throw Error(ErrorCode::degenerate_simplex, "in_sphere on a flat simplex");
  std::array<Point, kMaxN + 1> all;
  for (int i = 0; i <= d; ++i) all[i] = simplex[i];
  all[d + 1] = query;
  const int l = lifted_orientation(std::span<const Point>(all.data(), d + 2));
  if (l == 0) return SphereSide::on;
  // The lifted determinant equals orientation * (lifted height of the query
  // minus the height of the lifted circumsphere hyperplane above it).
  return (o * l < 0) ? SphereSide::inside : SphereSide::outside;
}

int simplex_contains(std::span<const Point> simplex, const Point& query) {
  const int d = simplex.empty() ? 0 : simplex[0].dim();
  check_points(simplex, d + 1, d);
  const int o = orientation(simplex);
  if (o == 0) throw Error(ErrorCode::degenerate_simplex, "containment in a flat simplex");
  std::array<Point, kMaxN> tmp;
  bool on_boundary = false;
  for (int i = 0; i <= d; ++i) {
    for (int k = 0; k <= d; ++k) tmp[k] = (k == i) ? query : simplex[k];
    const int s = orientation(std::span<const Point>(tmp.data(), d + 1));
    if (s == 0) {
      on_boundary = true;
    } else if (s != o) {
      return -1;
    }
  }
  return on_boundary ? 0 : 1;
}

long exact_fallback_count() noexcept { return g_exact_fallbacks.load(); }

}  // namespace delone
