/* Apache License, Version 2.0 */
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "delone/delaunay.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/geometry.hpp"
#include "delone/oracle.hpp"

namespace delone {
namespace {

const std::vector<Point> kTri345{{0, 0}, {4, 0}, {0, 3}};

FunctionalSpec spec(const char* s) { return parse_functional(s); }

// Random rotation (Gram-Schmidt on a Gaussian matrix) plus translation.
std::vector<Point> random_motion(std::span<const Point> pts, std::mt19937_64& rng) {
  const int d = pts[0].dim();
  std::normal_distribution<double> g;
  std::vector<Point> basis;
  while (static_cast<int>(basis.size()) < d) {
    Point v(d);
    for (int i = 0; i < d; ++i) v[i] = g(rng);
    for (const Point& b : basis) v -= dot(v, b) * b;
    if (v.norm() < 1e-3) continue;
    basis.push_back(v * (1.0 / v.norm()));
  }
  Point shift(d);
  for (int i = 0; i < d; ++i) shift[i] = 10.0 * g(rng);
  std::vector<Point> out;
  for (const Point& p : pts) {
    Point q = shift;
    for (int i = 0; i < d; ++i) q += p[i] * basis[static_cast<std::size_t>(i)];
    out.push_back(q);
  }
  return out;
}

std::vector<Point> random_simplex(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<Point> s;
    for (int k = 0; k <= d; ++k) {
      Point p(d);
      for (int i = 0; i < d; ++i) p[i] = u(rng);
      s.push_back(p);
    }
    if (measure(s) > 1e-3) return s;
  }
}

TEST(Functionals, ParseGrammar) {
  EXPECT_EQ(spec("F1:c1=1.5").kind, FunctionalKind::F1);
  EXPECT_DOUBLE_EQ(spec("F1:c1=1.5").c1, 1.5);
  EXPECT_DOUBLE_EQ(spec("F2:c2=2").c2, 2.0);
  EXPECT_EQ(spec("AREA").kind, FunctionalKind::AREA);
  EXPECT_EQ(spec("FE").kind, FunctionalKind::FE);
  EXPECT_THROW(spec("F7"), Error);
  EXPECT_THROW(spec("F1:c1=0"), Error);
  EXPECT_THROW(spec("F2:c2=0.5"), Error);
  EXPECT_EQ(parse_functional(spec("F2:c2=2").to_string()).c2, 2.0);
}

TEST(Functionals, ClosedFormsOnRightTriangle) {
  EXPECT_NEAR(eval(spec("F5"), kTri345), 300.0, 1e-9);
  EXPECT_NEAR(eval(spec("F3"), kTri345), -1.0, 1e-12);
  EXPECT_NEAR(eval(spec("F1:c1=1"), kTri345), 2.5, 1e-12);
  EXPECT_NEAR(eval(spec("F1:c1=2"), kTri345), 6.25, 1e-12);
  EXPECT_NEAR(eval(spec("F2:c2=1"), kTri345), 15.0, 1e-12);
  EXPECT_NEAR(eval(spec("F4"), kTri345), 50.0 / 6.0, 1e-12);
  EXPECT_NEAR(eval(spec("AREA"), kTri345), 6.0, 1e-12);
  // centroid (4/3,1), circumcenter (2,1.5): squared distance 4/9 + 1/4.
  EXPECT_NEAR(eval(spec("F6"), kTri345), (4.0 / 9.0 + 0.25) * 6.0, 1e-12);
  EXPECT_NEAR(eval(spec("FE"), kTri345), 25.0, 1e-9);
  EXPECT_NEAR(eval(spec("FR"), kTri345), 300.0, 1e-9);
}

TEST(Functionals, EquilateralF6IsZero) {
  const std::vector<Point> eq{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  EXPECT_NEAR(eval(spec("F6"), eq), 0.0, 1e-15);
}

TEST(Functionals, PlanarOnlyKindsRejectThreeDimensions) {
  const std::vector<Point> tet{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_THROW(eval(spec("F3"), tet), Error);
  EXPECT_THROW(eval(spec("F4"), tet), Error);
  EXPECT_NO_THROW(eval(spec("FE"), tet));
  EXPECT_NEAR(eval(spec("AREA"), tet), 1.0 / 6.0, 1e-15);
}

TEST(Functionals, LiftedRelationHoldsOnRandomSimplices) {
  std::mt19937_64 rng(11);
  for (int d = 2; d <= 3; ++d) {
    const double factor = (d + 1) * (d + 2);
    for (int t = 0; t < 1000; ++t) {
      const auto s = random_simplex(d, rng);
      const double fr = eval(spec("FR"), s), fe = eval(spec("FE"), s);
      ASSERT_NEAR(fr, factor * fe, 1e-6 * std::abs(fr)) << "d=" << d << " trial " << t;
    }
  }
}

TEST(Functionals, QuadratureMatchesClosedForm) {
  EXPECT_NEAR(fe_quadrature(kTri345, 64), 25.0, 1e-3 * 25.0);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto s = random_points(3, 2, seed);
    if (measure(s) < 1e-6) continue;
    EXPECT_NEAR(fe_quadrature(s, 256), fe_lifted_volume(s), 1e-6);
  }
  std::mt19937_64 rng(5);
  const auto tet = random_simplex(3, rng);
  EXPECT_NEAR(fe_quadrature(tet, 40), fe_lifted_volume(tet), 1e-3 * fe_lifted_volume(tet));
}

// In the plane the s^2 pieces are translates of the triangle scaled by 1/s
// (some point-reflected), so the centroid rule misses exactly the polar
// second moment: Q(s) = FE * (1 + 1/(3 s^2)).
TEST(Functionals, PlanarQuadratureErrorLaw) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_simplex(2, rng);
    const double fe = fe_lifted_volume(s);
    for (int k : {1, 2, 7, 64}) EXPECT_NEAR(fe_quadrature(s, k), fe * (1 + 1.0 / (3.0 * k * k)), 1e-11 * fe);
  }
}

TEST(Functionals, InvariantUnderRigidMotions) {
  std::mt19937_64 rng(3);
  const char* kinds2[] = {"F1:c1=1", "F2:c2=1", "F3", "F4", "F5", "F6", "FR", "FE", "AREA"};
  for (int t = 0; t < 50; ++t) {
    const auto s = random_simplex(2, rng);
    const auto m = random_motion(s, rng);
    for (const char* k : kinds2) {
      const double a = eval(spec(k), s), b = eval(spec(k), m);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a))) << k;
    }
  }
  for (int t = 0; t < 50; ++t) {
    const auto s = random_simplex(3, rng);
    const auto m = random_motion(s, rng);
    for (const char* k : {"F1:c1=1", "F2:c2=1", "FR", "FE", "AREA"}) {
      const double a = eval(spec(k), s), b = eval(spec(k), m);
      EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, std::abs(a))) << k;
    }
  }
}

TEST(Functionals, EcalBoundsRespectTheVolumeFloor) {
  const EcalBounds area = check_ecal_bounds(spec("AREA"), 0.5, 1.0, 2, 2000, 1);
  EXPECT_GE(area.e_hat, 2 * 0.125 / 1.0);
  EXPECT_LE(area.E_hat, 4.0);
  const EcalBounds f1 = check_ecal_bounds(spec("F1:c1=1"), 0.5, 1.0, 2, 2000, 2);
  EXPECT_LE(f1.E_hat, 1.0 + 1e-12);
  EXPECT_GE(f1.e_hat, 0.5);  // a triangle with an edge of length 1 has circumradius >= 1/2
  const EcalBounds vol3 = check_ecal_bounds(spec("AREA"), 0.5, 1.0, 3, 500, 3);
  EXPECT_LE(vol3.E_hat, 8.0);
  EXPECT_GT(vol3.e_hat, 0.0);
  EXPECT_THROW(check_ecal_bounds(spec("AREA"), 0.99, 1.0, 3, 100, 4), Error);
}

TEST(Functionals, FlipInequalityOnQuadrilateral) {
  const std::vector<Point> quad{{0, 0}, {3, 0}, {3.1, 1}, {0, 1.2}};
  for (const char* k : {"F1:c1=1", "F2:c2=1", "F3", "F4", "F5", "F6", "FR", "FE"}) {
    const InequalityCheck c = check_flip_inequality(spec(k), quad);
    EXPECT_TRUE(c.pass) << k << " margin " << c.margin();
  }
  const InequalityCheck a = check_flip_inequality(spec("AREA"), quad);
  EXPECT_NEAR(a.margin(), 0.0, 1e-12);
}

TEST(Functionals, FlipClassSuitePlanar) {
  for (const char* k : {"F1:c1=1", "F2:c2=1", "F3", "F4", "F5", "F6"}) {
    const ClassReport rep = flip_class_suite(spec(k), 300, 17);
    EXPECT_EQ(rep.trials, 300u);
    EXPECT_TRUE(rep.pass()) << k << " violations " << rep.violations;
  }
}

TEST(Functionals, FlipClassSuiteSpatial) {
  for (const char* k : {"FR", "FE", "AREA"}) {
    const ClassReport rep = flip_class_suite(spec(k), 200, 23, 3);
    EXPECT_TRUE(rep.pass()) << k;
  }
}

TEST(Functionals, GInequalityDelaunayAgainstItself) {
  const auto pts = random_points(8, 2, 9);
  const TriangulationComplex D = delaunay_2d(pts);
  const InequalityCheck c = check_g_inequality(spec("FR"), D, pts);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(c.margin(), 0.0, c.tolerance());
}

TEST(Functionals, GClassSuiteLiftedFunctionals) {
  for (const char* k : {"FR", "FE"}) {
    const ClassReport rep = g_class_suite(spec(k), 60, 5, 8, 31);
    EXPECT_TRUE(rep.pass()) << k << " violations " << rep.violations;
    EXPECT_EQ(rep.trials, 60u);
  }
}

TEST(Oracle, ConvexCountsAreCatalan) {
  std::vector<Point> quad{{0, 0}, {2, 0.1}, {2.2, 1.7}, {0.1, 1.5}};
  EXPECT_EQ(enumerate_triangulations_2d(quad).size(), 2u);
  std::vector<Point> pent;
  for (int k = 0; k < 5; ++k) {
    const double t = 2 * std::numbers::pi * k / 5 + 0.01 * k * k;
    pent.push_back(Point{std::cos(t) * (1 + 0.03 * k), std::sin(t)});
  }
  EXPECT_EQ(enumerate_triangulations_2d(pent).size(), 5u);
  std::vector<Point> hex;
  for (int k = 0; k < 6; ++k) {
    const double t = 2 * std::numbers::pi * k / 6 + 0.02 * k;
    hex.push_back(Point{std::cos(t) * (1 + 0.05 * k), std::sin(t)});
  }
  EXPECT_EQ(enumerate_triangulations_2d(hex).size(), 14u);
}

TEST(Oracle, FlipGraphMatchesNoncrossingEnumerator) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto pts = random_points(n, 2, seed);
    const auto tris = enumerate_triangulations_2d(pts);
    std::set<EdgeSet> from_flips;
    for (const auto& t : tris) from_flips.insert(edge_set(t));
    EXPECT_EQ(from_flips.size(), tris.size()) << "duplicates for seed " << seed;
    EXPECT_EQ(from_flips, noncrossing_edge_sets(pts)) << "seed " << seed;
  }
}

TEST(Oracle, InteriorPointConfiguration) {
  const std::vector<Point> pts{{0, 0}, {4, 0}, {2, 3}, {2, 1}};
  const auto tris = enumerate_triangulations_2d(pts);
  EXPECT_EQ(tris.size(), noncrossing_edge_sets(pts).size());
}

TEST(Oracle, DelaunayAppearsOnceAndMinimizes) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const auto pts = random_points(n, 2, seed);
    const auto D = delaunay_2d(pts);
    std::set<IdTuple> dcells(D.cells().begin(), D.cells().end());
    int hits = 0;
    for (const auto& t : enumerate_triangulations_2d(pts))
      if (std::set<IdTuple>(t.cells().begin(), t.cells().end()) == dcells) ++hits;
    EXPECT_EQ(hits, 1);
    for (const char* k : {"F5", "FE", "FR"}) EXPECT_TRUE(min_sum_triangulation(pts, spec(k)).delaunay_is_minimum) << k;
    const MinSumResult area = min_sum_triangulation(pts, spec("AREA"));
    EXPECT_EQ(area.ties, area.triangulations);
  }
}

TEST(Oracle, TooLargeInputsRejected) {
  EXPECT_THROW(enumerate_triangulations_2d(random_points(10, 2, 1)), Error);
  EXPECT_THROW(noncrossing_edge_sets(random_points(8, 2, 1)), Error);
}

TEST(Oracle, EmptinessRouteAgreesWithLiftedHull) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto p2 = random_points(30 + static_cast<int>(seed), 2, seed);
    const auto D2 = delaunay_2d(p2);
    std::vector<IdTuple> c2(D2.cells().begin(), D2.cells().end());
    std::sort(c2.begin(), c2.end());
    EXPECT_EQ(c2, delaunay_by_emptiness(p2));
  }
  const auto p3 = random_points(20, 3, 4);
  const auto D3 = delaunay_3d(p3);
  std::vector<IdTuple> c3(D3.cells().begin(), D3.cells().end());
  std::sort(c3.begin(), c3.end());
  EXPECT_EQ(c3, delaunay_by_emptiness(p3));
}

}  // namespace
}  // namespace delone
