/* Apache License, Version 2.0 */

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "delone/error.hpp"
#include "delone/geometry.hpp"
#include "delone/predicates.hpp"

namespace delone {
namespace {

Point rotate2(const Point& p, double t, const Point& shift) {
  return Point{std::cos(t) * p[0] - std::sin(t) * p[1] + shift[0], std::sin(t) * p[0] + std::cos(t) * p[1] + shift[1]};
}

TEST(Orientation, BasicSigns) {
  const std::array<Point, 3> ccw{Point{0, 0}, Point{1, 0}, Point{0, 1}};
  EXPECT_EQ(orientation(ccw), 1);
  const std::array<Point, 3> flat{Point{0, 0}, Point{1, 0}, Point{2, 0}};
  EXPECT_EQ(orientation(flat), 0);
  const std::array<Point, 4> tet{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
  EXPECT_EQ(orientation(tet), 1);
}

TEST(Orientation, ExactOnNearlyCollinearInput) {
  // Points on the line y = x with one coordinate nudged by one ulp: the
  // double determinant is pure rounding noise, the exact sign is not.
  const double a = 0.5 + std::ldexp(1.0, -52);
  const std::array<Point, 3> pts{Point{0.5, 0.5}, Point{12, 12}, Point{24, a * 48}};
  const int s = orientation(pts);
  // Exact: det = 11.5*(48a - 0.5) - 11.5*23.5 = 11.5*48*(a - 0.5) > 0.
  EXPECT_EQ(s, 1);
  const std::array<Point, 3> on{Point{0.5, 0.5}, Point{12, 12}, Point{24, 24}};
  EXPECT_EQ(orientation(on), 0);
}

TEST(Orientation, DimensionMismatchThrows) {
  const std::array<Point, 2> bad{Point{0, 0}, Point{1, 0}};
  EXPECT_THROW(orientation(bad), Error);
}

TEST(InSphere, Examples) {
  const std::array<Point, 3> t{Point{0, 0}, Point{4, 0}, Point{0, 3}};
  EXPECT_EQ(in_sphere(t, Point{1, 1}), SphereSide::inside);
  EXPECT_EQ(in_sphere(t, Point{10, 10}), SphereSide::outside);
  const std::array<Point, 3> u{Point{0, 0}, Point{1, 0}, Point{0, 1}};
  EXPECT_EQ(in_sphere(u, Point{1, 1}), SphereSide::on);
  for (const Point& v : t) EXPECT_EQ(in_sphere(t, v), SphereSide::on);
}

TEST(InSphere, PermutationInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Point, 3> t{Point{U(rng), U(rng)}, Point{U(rng), U(rng)}, Point{U(rng), U(rng)}};
    const Point q{U(rng), U(rng)};
    const SphereSide s = in_sphere(t, q);
    std::array<Point, 3> odd{t[1], t[0], t[2]};
    std::array<Point, 3> even{t[1], t[2], t[0]};
    EXPECT_EQ(in_sphere(odd, q), s);
    EXPECT_EQ(in_sphere(even, q), s);
    // The raw lifted determinant flips with the odd permutation.
    std::array<Point, 4> raw{t[0], t[1], t[2], q};
    std::array<Point, 4> raw_odd{t[1], t[0], t[2], q};
    EXPECT_EQ(lifted_orientation(raw), -lifted_orientation(raw_odd));
  }
}

TEST(InSphere, DegenerateSimplexThrows) {
  const std::array<Point, 3> flat{Point{0, 0}, Point{1, 0}, Point{2, 0}};
  EXPECT_THROW(in_sphere(flat, Point{0, 1}), Error);
}

TEST(InSphere, AgreesWithDistanceOracleIn3d) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1, 1);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::array<Point, 4> t;
    for (auto& p : t) p = Point{U(rng), U(rng), U(rng)};
    if (orientation(t) == 0) continue;
    const Point q{U(rng), U(rng), U(rng)};
    const Circumsphere s = circumsphere(t);
    const double gap = distance(q, s.center) - s.radius;
    if (std::fabs(gap) < 1e-6) continue;
    EXPECT_EQ(in_sphere(t, q), gap < 0 ? SphereSide::inside : SphereSide::outside);
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(Circumsphere, ClosedForms) {
  const std::array<Point, 3> t{Point{0, 0}, Point{4, 0}, Point{0, 3}};
  const Circumsphere s = circumsphere(t);
  EXPECT_NEAR(s.center[0], 2.0, 1e-12);
  EXPECT_NEAR(s.center[1], 1.5, 1e-12);
  EXPECT_NEAR(s.radius, 2.5, 1e-12);
  const std::array<Point, 3> eq{Point{0, 0}, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2}};
  EXPECT_NEAR(circumsphere(eq).radius, 1 / std::sqrt(3.0), 1e-12);
  const double h = 1 / std::sqrt(2.0);
  const std::array<Point, 4> reg{Point{h, 0, 0}, Point{0, h, 0}, Point{0, 0, h}, Point{h, h, h}};
  EXPECT_NEAR(circumsphere(reg).radius, std::sqrt(3.0 / 8.0), 1e-12);
  const std::array<Point, 3> flat{Point{0, 0}, Point{1, 0}, Point{2, 0}};
  EXPECT_THROW(circumsphere(flat), Error);
}

TEST(Measure, Examples) {
  const std::array<Point, 3> t{Point{0, 0}, Point{4, 0}, Point{0, 3}};
  EXPECT_DOUBLE_EQ(measure(t), 6.0);
  const std::array<Point, 4> tet{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
  EXPECT_NEAR(measure(tet), 1.0 / 6.0, 1e-15);
  const std::array<Point, 3> flat{Point{0, 0}, Point{1, 0}, Point{2, 0}};
  EXPECT_EQ(measure(flat), 0.0);
}

TEST(AreaViaCircumradius, Examples) {
  EXPECT_NEAR(area_via_circumradius(5, 4, 3, 2.5), 6.0, 1e-12);
  EXPECT_NEAR(area_via_circumradius(1, 1, 1, 1 / std::sqrt(3.0)), std::sqrt(3.0) / 4, 1e-12);
  EXPECT_THROW(area_via_circumradius(1, 1, 3, 1), Error);
  EXPECT_THROW(area_via_circumradius(3, 4, 5, 0), Error);
}

TEST(AreaViaCircumradius, AgreesWithMeasureOnRandomTriangles) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-5, 5);
  int done = 0;
  while (done < 1000) {
    std::array<Point, 3> t{Point{U(rng), U(rng)}, Point{U(rng), U(rng)}, Point{U(rng), U(rng)}};
    const double m = measure(t);
    if (m < 1e-3) continue;
    const auto e = edge_lengths(t);
    const double a = area_via_circumradius(e[0], e[1], e[2], circumsphere(t).radius);
    EXPECT_NEAR(a, m, 1e-9 * m);
    ++done;
  }
}

TEST(AreaViaCircumradius, AreaFloorFromPackingAndCircumradius) {
  // Triangles with edges >= 2r and circumradius <= q have area >= 2r^3/q.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  const double r = 0.5, q = 1.0;
  int accepted = 0;
  for (int trial = 0; trial < 20000 && accepted < 500; ++trial) {
    std::array<Point, 3> t;
    for (auto& p : t) {
      const double a = ang(rng);
      p = Point{q * std::cos(a), q * std::sin(a)};
    }
    const auto e = edge_lengths(t);
    if (*std::min_element(e.begin(), e.end()) < 2 * r) continue;
    EXPECT_GE(measure(t), 2 * r * r * r / q - 1e-12);
    ++accepted;
  }
  EXPECT_GT(accepted, 100);
}

TEST(Lift, Examples) {
  const Point a = lift(Point{1, 2});
  EXPECT_EQ(a, (Point{1, 2, 5}));
  EXPECT_EQ(lift(Point{0, 0}), (Point{0, 0, 0}));
  EXPECT_EQ(lift(Point{3, 4}), (Point{3, 4, 25}));
}

TEST(Inradius, AndCentroid) {
  const std::array<Point, 3> t{Point{0, 0}, Point{4, 0}, Point{0, 3}};
  EXPECT_NEAR(inradius_2d(t), 1.0, 1e-12);
  const Point c = centroid(t);
  EXPECT_NEAR(c[0], 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(c[1], 1.0, 1e-15);
  const std::array<Point, 3> eq{Point{0, 0}, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2}};
  EXPECT_NEAR(distance(centroid(eq), circumsphere(eq).center), 0.0, 1e-12);
}

TEST(RigidMotion, MeasureAndRadiusInvariant) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Point, 3> t{Point{U(rng), U(rng)}, Point{U(rng), U(rng)}, Point{U(rng), U(rng)}};
    if (measure(t) < 1e-2) continue;
    const double th = U(rng);
    const Point sh{U(rng) * 10, U(rng) * 10};
    std::array<Point, 3> m{rotate2(t[0], th, sh), rotate2(t[1], th, sh), rotate2(t[2], th, sh)};
    EXPECT_NEAR(measure(m), measure(t), 1e-9 * measure(t));
    EXPECT_NEAR(circumsphere(m).radius, circumsphere(t).radius, 1e-9 * circumsphere(t).radius);
  }
}

TEST(UnitBall, Volumes) {
  EXPECT_DOUBLE_EQ(unit_ball_volume(2), std::numbers::pi);
  EXPECT_DOUBLE_EQ(unit_ball_volume(3), 4.0 * std::numbers::pi / 3.0);
}

}  // namespace
}  // namespace delone
