/* Apache License, Version 2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "delone/point.hpp"

namespace delone {

/// Where a point set came from, enough to regenerate it.
struct Provenance {
  std::string generator;
  std::vector<std::pair<std::string, double>> params;
  std::uint64_t seed = 0;
  double jitter = 0.0;  // magnitude of the genericity perturbation, 0 if none
  std::string note;
};

/// Finite window B_W(0) of a point set with declared packing radius r and
/// covering radius R.
struct PointSetWindow {
  int dimension = 2;
  std::vector<Point> points;
  double r = 0.0;
  double R = 0.0;
  double W = 0.0;
  Provenance provenance;
};

}  // namespace delone
