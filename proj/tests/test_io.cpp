/* Apache License, Version 2.0 */
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "delone/delaunay.hpp"
#include "delone/density.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/generators.hpp"
#include "delone/io.hpp"
#include "delone/triangulation.hpp"

namespace delone {
namespace {

std::vector<IdTuple> sorted_cells(const TriangulationComplex& cx) {
  std::vector<IdTuple> out;
  for (const IdTuple& c : cx.cells()) out.push_back(c.sorted());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Io, ShortestRoundTripDecimals) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 10.0}) {
    const std::string s = format_double(x);
    EXPECT_EQ(std::stod(s), x) << s;
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(10.0), "10");
}

TEST(Io, PointFileRoundTripIsBitExact) {
  const PointSetWindow w = poisson_delone_window(2, 0.4, 1.5, 8, 5);
  std::stringstream s;
  write_point_file(s, w);
  const PointSetWindow back = read_point_file(s);
  EXPECT_EQ(back.dimension, 2);
  EXPECT_EQ(back.r, w.r);
  EXPECT_EQ(back.R, w.R);
  EXPECT_EQ(back.W, w.W);
  EXPECT_EQ(back.points, w.points);
}

TEST(Io, PointFileRejectsMalformedInput) {
  auto code = [](const std::string& text) {
    std::istringstream s(text);
    try {
      read_point_file(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  EXPECT_EQ(code(""), ErrorCode::io);
  EXPECT_EQ(code("2 1 1\n"), ErrorCode::io);
  EXPECT_EQ(code("4 1 1 1\n"), ErrorCode::io);
  EXPECT_EQ(code("2 1 1 1\n0 0 0\n"), ErrorCode::io);
  EXPECT_EQ(code("2 1 1 1\n0 x\n"), ErrorCode::io);
  std::istringstream blank("3 0.5 1 2\n\n0 0 1\n");
  EXPECT_EQ(read_point_file(blank).points.size(), 1u);
}

TEST(Io, ComplexJsonRoundTrip) {
  PointSetWindow w = lattice_window(3, 3, 1);
  const TriangulationComplex cx = delaunay_of_window(w, 1);
  const TriangulationComplex back = complex_from_json(complex_to_json(cx, &w.provenance));
  EXPECT_EQ(back.dimension(), 3);
  EXPECT_EQ(back.points(), cx.points());
  EXPECT_EQ(sorted_cells(back), sorted_cells(cx));
  ASSERT_TRUE(back.window().has_value());
  EXPECT_EQ(back.window()->radius, cx.window()->radius);
}

TEST(Io, ComplexJsonIsValidated) {
  EXPECT_THROW(complex_from_json("{"), Error);
  EXPECT_THROW(complex_from_json(R"({"dimension":2,"points":[[0,0],[1,0]],"cells":[[0,1]]})"), Error);
  // Two copies of the same triangle overlap.
  EXPECT_THROW(complex_from_json(R"({"dimension":2,"points":[[0,0],[1,0],[0,1]],"cells":[[0,1,2],[0,1,2]]})"),
               Error);
}

TEST(Io, DensityCsvRows) {
  PointSetWindow w = lattice_window(2, 15, 2);
  const TriangulationComplex cx = delaunay_of_window(w, 2);
  const auto grid = geometric_grid(4, 8);
  const FunctionalSpec F = parse_functional("AREA");
  const std::string csv =
      density_csv(density_sequence(cx, F, Point{0, 0}, grid), density_sequence(cx, F, Point{0, 0}, grid));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,cells_vertexrule,cells_ballrule,sum_F,f_value,f_z_value,gap");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), grid.size() + 1);
  EXPECT_NE(csv.find(",0\n"), std::string::npos);  // identical centers give a zero gap
}

TEST(FlipWalk, ReachesOtherTriangulationsAndLegalizesBack) {
  const auto pts = random_points(25, 2, 12);
  const TriangulationComplex D = delaunay_2d(pts);
  const TriangulationComplex T = random_flip_walk(D, 60, 3);
  EXPECT_NE(sorted_cells(T), sorted_cells(D));
  EXPECT_NEAR(total_measure(T), total_measure(D), 1e-12);
  EXPECT_EQ(sorted_cells(random_flip_walk(D, 60, 3)), sorted_cells(T));
  const LegalizeResult L = legalize_to_delaunay(T);
  EXPECT_EQ(sorted_cells(L.complex), sorted_cells(D));
  EXPECT_FALSE(L.flips.empty());
}

}  // namespace
}  // namespace delone
