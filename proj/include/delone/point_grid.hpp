/* Apache License, Version 2.0 */

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "delone/point.hpp"

namespace delone {

/// Hashed uniform grid over points of R^d for fixed-radius queries.
class PointGrid {
 public:
  PointGrid(int dim, double cell_size) : dim_(dim), h_(cell_size) {}
  PointGrid(std::span<const Point> pts, double cell_size) : PointGrid(pts.empty() ? 2 : pts[0].dim(), cell_size) {
    for (const Point& p : pts) insert(p);
  }

  int insert(const Point& p) {
    const int id = static_cast<int>(pts_.size());
    pts_.push_back(p);
    cells_[key(cell_of(p))].push_back(id);
    return id;
  }

  const std::vector<Point>& points() const noexcept { return pts_; }

  /// Calls fn(id) for every stored point within distance `radius` of c
  /// (closed ball, floating-point distance).
  template <typename Fn>
  void for_each_within(const Point& c, double radius, Fn&& fn) const {
    std::array<std::int64_t, kMaxDim> lo{}, hi{}, idx{};
    for (int k = 0; k < dim_; ++k) {
      lo[k] = static_cast<std::int64_t>(std::floor((c[k] - radius) / h_));
      hi[k] = static_cast<std::int64_t>(std::floor((c[k] + radius) / h_));
    }
    idx = lo;
    const double r2 = radius * radius;
    while (true) {
      auto it = cells_.find(key(idx));
      if (it != cells_.end()) {
        for (int id : it->second)
          if ((pts_[id] - c).norm2() <= r2) fn(id);
      }
      int k = 0;
      while (k < dim_) {
        if (++idx[k] <= hi[k]) break;
        idx[k] = lo[k];
        ++k;
      }
      if (k == dim_) break;
    }
  }

  bool any_within(const Point& c, double radius) const {
    bool found = false;
    for_each_within(c, radius, [&](int) { found = true; });
    return found;
  }

 private:
  std::array<std::int64_t, kMaxDim> cell_of(const Point& p) const {
    std::array<std::int64_t, kMaxDim> idx{};
    for (int k = 0; k < dim_; ++k) idx[k] = static_cast<std::int64_t>(std::floor(p[k] / h_));
    return idx;
  }
  std::uint64_t key(const std::array<std::int64_t, kMaxDim>& idx) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int k = 0; k < dim_; ++k) {
      h ^= static_cast<std::uint64_t>(idx[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  int dim_;
  double h_;
  std::vector<Point> pts_;
  // Hash collisions only merge buckets; queries still test distances.
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

}  // namespace delone
