/* Apache License, Version 2.0 */

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace delone {

inline constexpr int kMaxDim = 4;

/// Relative tolerance for metric quantities (radii, volumes).
inline constexpr double kGeoTolerance = 1e-9;

/// A point of R^d with d <= kMaxDim, stored inline.
class Point {
 public:
  Point() = default;
  explicit Point(int dim) : dim_(static_cast<std::uint8_t>(dim)) {
    assert(dim >= 0 && dim <= kMaxDim);
  }
  Point(std::initializer_list<double> coords)
      : dim_(static_cast<std::uint8_t>(coords.size())) {
    assert(coords.size() <= kMaxDim);
    std::copy(coords.begin(), coords.end(), x_.begin());
  }
  explicit Point(std::span<const double> coords)
      : dim_(static_cast<std::uint8_t>(coords.size())) {
    assert(coords.size() <= kMaxDim);
    std::copy(coords.begin(), coords.end(), x_.begin());
  }

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return x_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) noexcept { return x_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const noexcept { return {x_.data(), dim_}; }

  double norm2() const noexcept {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += x_[i] * x_[i];
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm2()); }
  bool is_finite() const noexcept {
    for (int i = 0; i < dim_; ++i)
      if (!std::isfinite(x_[i])) return false;
    return true;
  }

  Point& operator+=(const Point& o) noexcept {
    for (int i = 0; i < dim_; ++i) x_[i] += o.x_[i];
    return *this;
  }
  Point& operator-=(const Point& o) noexcept {
    for (int i = 0; i < dim_; ++i) x_[i] -= o.x_[i];
    return *this;
  }
  Point& operator*=(double s) noexcept {
    for (int i = 0; i < dim_; ++i) x_[i] *= s;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) noexcept { return a += b; }
  friend Point operator-(Point a, const Point& b) noexcept { return a -= b; }
  friend Point operator*(Point a, double s) noexcept { return a *= s; }
  friend Point operator*(double s, Point a) noexcept { return a *= s; }

  friend bool operator==(const Point& a, const Point& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.x_[i] != b.x_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> x_{};
  std::uint8_t dim_ = 0;
};

inline double dot(const Point& a, const Point& b) noexcept {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double distance(const Point& a, const Point& b) noexcept { return (a - b).norm(); }

/// Up to kMaxDim sorted vertex ids: a cell (d+1 ids) or a facet (d ids).
class IdTuple {
 public:
  IdTuple() = default;
  IdTuple(std::initializer_list<int> ids) : n_(static_cast<std::uint8_t>(ids.size())) {
    assert(ids.size() <= kMaxDim);
    std::copy(ids.begin(), ids.end(), v_.begin());
  }
  explicit IdTuple(std::span<const int> ids) : n_(static_cast<std::uint8_t>(ids.size())) {
    assert(ids.size() <= kMaxDim);
    std::copy(ids.begin(), ids.end(), v_.begin());
  }

  int size() const noexcept { return n_; }
  int operator[](int i) const noexcept { return v_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) noexcept { return v_[static_cast<std::size_t>(i)]; }
  const int* begin() const noexcept { return v_.data(); }
  const int* end() const noexcept { return v_.data() + n_; }
  int* begin() noexcept { return v_.data(); }
  int* end() noexcept { return v_.data() + n_; }
  std::span<const int> ids() const noexcept { return {v_.data(), n_}; }

  void push_back(int id) noexcept {
    assert(n_ < kMaxDim);
    v_[n_++] = id;
  }
  bool contains(int id) const noexcept { return std::find(begin(), end(), id) != end(); }

  IdTuple sorted() const noexcept {
    IdTuple t = *this;
    std::sort(t.begin(), t.end());
    return t;
  }
  /// The tuple with position i removed (order of the rest kept).
  IdTuple without(int i) const noexcept {
    IdTuple t;
    for (int k = 0; k < n_; ++k)
      if (k != i) t.push_back(v_[k]);
    return t;
  }

  friend bool operator==(const IdTuple& a, const IdTuple& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const IdTuple& a, const IdTuple& b) noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<int, kMaxDim> v_{};
  std::uint8_t n_ = 0;
};

struct IdTupleHash {
  std::size_t operator()(const IdTuple& t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(t.size());
    for (int id : t) {
      h ^= static_cast<std::uint64_t>(id) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace delone
