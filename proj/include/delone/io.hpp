/* Apache License, Version 2.0 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "delone/complex.hpp"
#include "delone/density.hpp"
#include "delone/window.hpp"

namespace delone {

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Point file: a "d r R W" header line, then one point per line.
void write_point_file(std::ostream& out, const PointSetWindow& w);
PointSetWindow read_point_file(std::istream& in);
void save_point_file(const std::string& path, const PointSetWindow& w);
PointSetWindow load_point_file(const std::string& path);

/// {"dimension", "points", "cells", "window"?, "provenance"?} with
/// round-trip doubles. Loading rebuilds and validates the complex without
/// a hull-coverage requirement.
std::string complex_to_json(const TriangulationComplex& cx, const Provenance* provenance = nullptr);
TriangulationComplex complex_from_json(std::string_view text);
void save_complex(const std::string& path, const TriangulationComplex& cx, const Provenance* provenance = nullptr);
TriangulationComplex load_complex(const std::string& path);

/// Rows alpha, cells_vertexrule, cells_ballrule, sum_F, f_value, f_z_value,
/// gap. Counts and sums are for the origin-centered balls; both sequences
/// must share the grid.
std::string density_csv(const DensitySequence& origin, const DensitySequence& shifted);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace delone
