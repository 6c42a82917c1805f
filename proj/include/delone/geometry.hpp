/* Apache License, Version 2.0 */

#pragma once

#include <span>
#include <vector>

#include "delone/point.hpp"
#include "delone/predicates.hpp"

namespace delone {

struct Circumsphere {
  Point center;
  double radius = 0.0;
};

/// (p, |p|^2) in R^{d+1}.
using LiftedPoint = Point;

Circumsphere circumsphere(std::span<const Point> simplex);

/// d-volume |det|/d!; exactly 0 for affinely degenerate input.
double measure(std::span<const Point> simplex);

/// Triangle area from edge lengths and circumradius, abc / (4 rho).
double area_via_circumradius(double a, double b, double c, double rho);

LiftedPoint lift(const Point& p);

/// Area over semiperimeter of a planar triangle.
double inradius_2d(std::span<const Point> triangle);

Point centroid(std::span<const Point> simplex);

/// All C(d+1, 2) edge lengths in lexicographic vertex-pair order.
std::vector<double> edge_lengths(std::span<const Point> simplex);

/// pi^{d/2} / Gamma(d/2 + 1), closed forms for d = 2, 3.
double unit_ball_volume(int d);

/// Throws Error(dimension_mismatch) unless there are `count` points of
/// dimension `d`.
void require_simplex(std::span<const Point> pts, int count, int d);

}  // namespace delone
