/* Apache License, Version 2.0 */

#include "delone/hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "delone/error.hpp"

namespace delone {

IncrementalHull::IncrementalHull(int dim, std::vector<Coords> approx, OrientFn orient,
                                 std::uint64_t seed)
    : dim_(dim), approx_(std::move(approx)), orient_(std::move(orient)), seed_(seed) {
  if (dim_ < 1 || dim_ > kMaxDim) throw Error(ErrorCode::dimension_mismatch, "hull dimension");
}

int IncrementalHull::orient(const Facet& f, int q) const {
  std::array<int, kMaxDim + 1> ids{};
  for (int i = 0; i < dim_; ++i) ids[i] = f.v[i];
  ids[dim_] = q;
  return orient_(std::span<const int>(ids.data(), dim_ + 1));
}

void IncrementalHull::initial_simplex(std::vector<int>& simplex) {
  const int n = static_cast<int>(approx_.size());
  if (n < dim_ + 1) throw Error(ErrorCode::non_generic, "too few points for a full-dimensional hull");

  // Greedy farthest-from-span selection on approximate coordinates.
  std::vector<std::array<double, kMaxDim>> basis;
  auto residual = [&](int i) {
    std::array<double, kMaxDim> w{};
    for (int k = 0; k < dim_; ++k) w[k] = approx_[i][k] - approx_[simplex[0]][k];
    for (const auto& b : basis) {
      double t = 0.0;
      for (int k = 0; k < dim_; ++k) t += w[k] * b[k];
      for (int k = 0; k < dim_; ++k) w[k] -= t * b[k];
    }
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) s += w[k] * w[k];
    return std::pair{s, w};
  };

  int first = 0;
  for (int i = 1; i < n; ++i)
    if (approx_[i][0] < approx_[first][0]) first = i;
  simplex = {first};
  while (static_cast<int>(simplex.size()) < dim_) {
    int best = -1;
    double best_s = 0.0;
    std::array<double, kMaxDim> best_w{};
    for (int i = 0; i < n; ++i) {
      auto [s, w] = residual(i);
      if (s > best_s) {
        best_s = s;
        best = i;
        best_w = w;
      }
    }
    if (best < 0) throw Error(ErrorCode::non_generic, "points are affinely degenerate");
    const double len = std::sqrt(best_s);
    for (int k = 0; k < dim_; ++k) best_w[k] /= len;
    basis.push_back(best_w);
    simplex.push_back(best);
  }

  // Last vertex: farthest residual with an exactly non-zero orientation.
  std::vector<std::pair<double, int>> cand;
  cand.reserve(n);
  for (int i = 0; i < n; ++i) cand.emplace_back(-residual(i).first, i);
  std::sort(cand.begin(), cand.end());
  std::array<int, kMaxDim + 1> ids{};
  for (int i = 0; i < dim_; ++i) ids[i] = simplex[i];
  for (const auto& [neg, i] : cand) {
    if (std::find(simplex.begin(), simplex.end(), i) != simplex.end()) continue;
    ids[dim_] = i;
    if (orient_(std::span<const int>(ids.data(), dim_ + 1)) != 0) {
      simplex.push_back(i);
      return;
    }
  }
  throw Error(ErrorCode::non_generic, "points are affinely degenerate");
}

void IncrementalHull::build() {
  facets_.clear();
  skipped_.clear();
  std::vector<int> simplex;
  initial_simplex(simplex);

  // Facet j omits simplex[j].
  for (int j = 0; j <= dim_; ++j) {
    Facet f;
    for (int k = 0; k <= dim_; ++k)
      if (k != j) f.v.push_back(simplex[k]);
    if (orient(f, simplex[j]) > 0) std::swap(f.v[0], f.v[1]);
    facets_.push_back(std::move(f));
  }
  for (int j = 0; j <= dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      const int v = facets_[j].v[i];
      const int k = static_cast<int>(std::find(simplex.begin(), simplex.end(), v) - simplex.begin());
      facets_[j].nb[i] = k;
    }
  }

  std::vector<int> order(approx_.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed_);
  std::shuffle(order.begin(), order.end(), rng);
  for (int q : order) {
    if (std::find(simplex.begin(), simplex.end(), q) != simplex.end()) continue;
    bool placed = false;
    for (auto& f : facets_) {
      if (orient(f, q) > 0) {
        f.outside.push_back(q);
        placed = true;
        break;
      }
    }
    if (!placed) skipped_.push_back(q);
  }

  pending_.clear();
  for (int j = 0; j <= dim_; ++j) pending_.push_back(j);
  while (!pending_.empty()) {
    const int fi = pending_.back();
    if (!facets_[fi].alive || facets_[fi].outside.empty()) {
      pending_.pop_back();
      continue;
    }
    const int p = facets_[fi].outside.back();
    facets_[fi].outside.pop_back();
    insert(fi, p);
  }
}

void IncrementalHull::insert(int start, int p) {
  ++epoch_;
  const std::uint32_t visible_mark = epoch_;
  std::vector<int> visible{start};
  facets_[start].mark = visible_mark;
  ++epoch_;
  const std::uint32_t hidden_mark = epoch_;
  for (std::size_t k = 0; k < visible.size(); ++k) {
    const Facet& f = facets_[visible[k]];
    for (int i = 0; i < dim_; ++i) {
      const int n = f.nb[i];
      Facet& g = facets_[n];
      if (g.mark == visible_mark || g.mark == hidden_mark) continue;
      if (orient(g, p) > 0) {
        g.mark = visible_mark;
        visible.push_back(n);
      } else {
        g.mark = hidden_mark;
      }
    }
  }

  // Cone from p over the horizon ridges.
  std::unordered_map<IdTuple, std::pair<int, int>, IdTupleHash> open_ridges;
  std::vector<int> created;
  for (int vi : visible) {
    for (int i = 0; i < dim_; ++i) {
      const int n = facets_[vi].nb[i];
      if (facets_[n].mark == visible_mark) continue;
      Facet g;
      g.v = facets_[vi].v;
      g.v[i] = p;
      g.nb[i] = n;
      const int gi = static_cast<int>(facets_.size());
      for (int k = 0; k < dim_; ++k)
        if (facets_[n].nb[k] == vi) facets_[n].nb[k] = gi;
      facets_.push_back(std::move(g));
      created.push_back(gi);
      for (int k = 0; k < dim_; ++k) {
        if (k == i) continue;
        const IdTuple ridge = facets_[gi].v.without(k).sorted();
        auto it = open_ridges.find(ridge);
        if (it == open_ridges.end()) {
          open_ridges.emplace(ridge, std::pair{gi, k});
        } else {
          facets_[gi].nb[k] = it->second.first;
          facets_[it->second.first].nb[it->second.second] = gi;
          open_ridges.erase(it);
        }
      }
    }
  }

  std::vector<int> orphans;
  for (int vi : visible) {
    Facet& f = facets_[vi];
    f.alive = false;
    orphans.insert(orphans.end(), f.outside.begin(), f.outside.end());
    f.outside.clear();
    f.outside.shrink_to_fit();
  }
  for (int q : orphans) {
    bool placed = false;
    for (int gi : created) {
      if (orient(facets_[gi], q) > 0) {
        facets_[gi].outside.push_back(q);
        placed = true;
        break;
      }
    }
    if (!placed) {
      for (auto& f : facets_) {
        if (f.alive && orient(f, q) > 0) {
          f.outside.push_back(q);
          pending_.push_back(static_cast<int>(&f - facets_.data()));
          placed = true;
          break;
        }
      }
    }
    if (!placed) skipped_.push_back(q);
  }
  for (int gi : created)
    if (!facets_[gi].outside.empty()) pending_.push_back(gi);
}

std::vector<IdTuple> IncrementalHull::facets() const {
  std::vector<IdTuple> out;
  for (const auto& f : facets_)
    if (f.alive) out.push_back(f.v);
  return out;
}

}  // namespace delone
