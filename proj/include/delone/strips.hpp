/* Apache License, Version 2.0 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "delone/complex.hpp"
#include "delone/functionals.hpp"
#include "delone/window.hpp"

namespace delone {

/// Side lengths of a triangle.
using TriangleSides = std::array<double, 3>;

/// Two isoceles triangles (L, L, a) and (L, L, c) glued along edges of
/// length L into horizontal rows ("strips"). Block 1 is m[0] wide strips;
/// every even block (m[1], m[3], ...) alternates narrow, wide, ..., narrow;
/// every odd block is all wide. Blocks are added on both sides of block 1.
struct StripConfig {
  double L = 0.0;
  double a = 0.0;  // base of the wide triangle
  double c = 0.0;  // base of the narrow triangle
  std::vector<int> m;
  /// Horizontal reach of every row beyond the largest disk used, in units of L.
  double extent = 2.0;

  TriangleSides wide() const { return {L, L, a}; }
  TriangleSides narrow() const { return {L, L, c}; }
};

/// Shared edge, opposite angles summing to less than pi, the four other
/// angles acute. `shared` is the index of the shared side in each triangle.
bool compatible(const TriangleSides& t1, int shared1, const TriangleSides& t2, int shared2);

struct IsocelesPair {
  TriangleSides wide;
  TriangleSides narrow;
  double L = 0.0;
};

/// L = 1.05 * max{a/(2 cos phi), c/(2 cos psi), a/sqrt2, c/sqrt2}. The last
/// two terms keep the apex angles acute, which gluing along the L edges
/// needs. Throws invalid_argument outside a, c > 0, phi, psi in (0, pi/4].
IsocelesPair compatible_isoceles(double a, double phi, double c, double psi);

/// Throws invalid_argument unless L, a, c make a compatible pair, every m is
/// odd and positive, and extent >= 1.
void validate(const StripConfig& cfg);

/// Strip layout of the first k blocks: rows bottom to top, the y of every
/// line, and alpha_i for i = 1..k.
struct StripLayout {
  std::vector<bool> row_is_wide;
  std::vector<double> line_y;       // rows + 1 entries
  std::vector<double> line_offset;  // x of vertex 0 on each line
  std::vector<double> alphas;
  double L = 0.0;
  double x_wide = 0.0;    // apex abscissa relative to the left base vertex
  double x_narrow = 0.0;
  double h_wide = 0.0;
  double h_narrow = 0.0;
};

StripLayout strip_layout(const StripConfig& cfg, int k);

struct StripTriangulation {
  PointSetWindow window;
  TriangulationComplex complex;
  std::vector<double> alphas;
  std::vector<bool> cell_is_wide;
  std::vector<bool> row_is_wide;
};

/// Explicit vertices and triangles of the first k blocks, rows cut at
/// |x| <= alpha_k + extent * L. Checks that no two narrow rows touch and that
/// every interior edge is locally Delaunay.
StripTriangulation strip_block_triangulation(const StripConfig& cfg, int k);

/// Copies of the wide (k) and narrow (l) triangle inside B_alpha(0), all
/// vertices within alpha (relative slack 1e-9 on alpha^2).
struct CopyCounts {
  std::size_t wide = 0;
  std::size_t narrow = 0;
};

/// Closed form: per row, the contained triangles are an intersection of
/// integer intervals.
CopyCounts strip_counts_closed_form(const StripLayout& layout, double alpha);

/// Enumerates every triangle of every row and tests its vertices.
CopyCounts strip_counts_enumerated(const StripLayout& layout, double alpha);

struct QuotientValues {
  double Q_wide = 0.0;    // F/A of the wide triangle
  double Q_narrow = 0.0;
  double Q = 0.0;         // (F_wide + F_narrow)/(A_wide + A_narrow)
  double gap = 0.0;       // |Q_wide - Q|
  double F_wide = 0.0, F_narrow = 0.0, A_wide = 0.0, A_narrow = 0.0;
  bool degenerate = false;  // Q_wide == Q_narrow up to 1e-12 relative
};

QuotientValues strip_quotients(const StripConfig& cfg, const FunctionalSpec& F);

/// Grows m_2..m_k from 1 by m -> 2m+1 until g_i is within gap_fraction * gap
/// of Q_wide (odd i) or Q (even i), using closed-form counts. m_1 = cfg.m[0]
/// (3 if empty). Throws degenerate_strips when Q_wide == Q_narrow.
std::vector<int> choose_block_sizes(StripConfig cfg, const FunctionalSpec& F, int k,
                                    double gap_fraction = 1.0 / 3.0);

struct StripSequence {
  std::vector<int> m;
  std::vector<double> alphas;
  std::vector<std::size_t> k_counts;
  std::vector<std::size_t> l_counts;
  std::vector<double> f;
  std::vector<double> g;
  QuotientValues quotients;
  double q = 0.0;  // max circumradius
  // Oscillation report.
  bool degenerate = false;
  bool odd_near_wide = false;   // |g_i - Q_wide| < gap/3 for odd i
  bool even_near_Q = false;     // |g_i - Q| < gap/3 for even i
  double separation = 0.0;      // min |g_odd - g_even|
  bool oscillates() const noexcept;
};

/// f_i and g_i for i = 1..k, counting by enumeration of the strip triangles.
/// Uses cfg.m as given when it has k entries, else choose_block_sizes.
/// A degenerate pair (Q_wide == Q_narrow) is reported, not thrown.
StripSequence strip_gi_sequence(StripConfig cfg, const FunctionalSpec& F, int k);

}  // namespace delone
