/* Apache License, Version 2.0 */
// Python bindings: plain lists/tuples in, dicts out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "delone/cube.hpp"
#include "delone/delaunay.hpp"
#include "delone/density.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/generators.hpp"
#include "delone/geometry.hpp"
#include "delone/io.hpp"
#include "delone/oracle.hpp"
#include "delone/strips.hpp"
#include "delone/triangulation.hpp"

namespace py = pybind11;
using namespace delone;

namespace {

using Coords = std::vector<std::vector<double>>;

std::vector<Point> to_points(const Coords& in) {
  std::vector<Point> out;
  out.reserve(in.size());
  for (const auto& c : in) {
    if (c.empty() || c.size() > static_cast<std::size_t>(kMaxDim))
      throw Error(ErrorCode::dimension_mismatch, "points need 1 to 4 coordinates");
    out.emplace_back(std::span<const double>(c));
  }
  return out;
}

Coords from_points(const std::vector<Point>& in) {
  Coords out;
  out.reserve(in.size());
  for (const Point& p : in) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

std::vector<std::vector<int>> from_ids(const std::vector<IdTuple>& in) {
  std::vector<std::vector<int>> out;
  for (const IdTuple& t : in) out.emplace_back(t.begin(), t.end());
  return out;
}

py::dict class_report(const ClassReport& r) {
  py::dict d;
  d["functional"] = r.functional.to_string();
  d["trials"] = r.trials;
  d["violations"] = r.violations;
  d["min_margin"] = r.min_margin;
  d["pass"] = r.pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_delone, m) {
  m.doc() = "Delaunay-set triangulations, simplex functionals and windowed densities";

  py::register_exception<Error>(m, "DeloneError", PyExc_ValueError);

  py::class_<PointSetWindow>(m, "Window")
      .def_readonly("dimension", &PointSetWindow::dimension)
      .def_readonly("r", &PointSetWindow::r)
      .def_readonly("R", &PointSetWindow::R)
      .def_readonly("W", &PointSetWindow::W)
      .def_property_readonly("points", [](const PointSetWindow& w) { return from_points(w.points); })
      .def("__len__", [](const PointSetWindow& w) { return w.points.size(); });

  py::class_<TriangulationComplex>(m, "Complex")
      .def_property_readonly("dimension", &TriangulationComplex::dimension)
      .def_property_readonly("points", [](const TriangulationComplex& c) { return from_points(c.points()); })
      .def_property_readonly("cells", [](const TriangulationComplex& c) { return from_ids(c.cells()); })
      .def_property_readonly("num_cells", &TriangulationComplex::num_cells)
      .def("max_circumradius", &TriangulationComplex::max_circumradius)
      .def("to_json", [](const TriangulationComplex& c) { return complex_to_json(c); })
      .def_static("from_json", [](const std::string& s) { return complex_from_json(s); });

  m.def("lattice_window", &lattice_window, py::arg("d"), py::arg("W"), py::arg("jitter_seed") = py::none());
  m.def("poisson_window", &poisson_delone_window, py::arg("d"), py::arg("r"), py::arg("R"), py::arg("W"),
        py::arg("seed"));
  m.def("distorted_cubic_window", &distorted_cubic_window, py::arg("W"));

  m.def("delaunay", [](const Coords& pts) { return delaunay(to_points(pts)); }, py::arg("points"));
  m.def("delaunay_of_window", [](PointSetWindow w, std::uint64_t seed) { return delaunay_of_window(w, seed); },
        py::arg("window"), py::arg("seed") = 1);
  m.def("random_flip_walk", &random_flip_walk, py::arg("complex"), py::arg("steps"), py::arg("seed"));
  m.def(
      "legalize",
      [](const TriangulationComplex& cx) {
        LegalizeResult r = legalize_to_delaunay(cx);
        py::list flips;
        for (const FlipRecord& f : r.flips)
          flips.append(py::make_tuple(std::vector<int>(f.facet.begin(), f.facet.end()),
                                      std::vector<int>(f.new_facet.begin(), f.new_facet.end()),
                                      f.before_max_circumradius, f.after_max_circumradius));
        return py::make_tuple(std::move(r.complex), flips);
      },
      py::arg("complex"));

  m.def("area_via_circumradius", &area_via_circumradius);
  m.def("measure", [](const Coords& s) { return measure(to_points(s)); });
  m.def("circumradius", [](const Coords& s) { return circumsphere(to_points(s)).radius; });
  m.def(
      "evaluate", [](const std::string& F, const Coords& s) { return eval(parse_functional(F), to_points(s)); },
      py::arg("functional"), py::arg("simplex"));
  m.def("fe_lifted_volume", [](const Coords& s) { return fe_lifted_volume(to_points(s)); });
  m.def("fe_quadrature", [](const Coords& s, int n) { return fe_quadrature(to_points(s), n); }, py::arg("simplex"),
        py::arg("s"));

  m.def(
      "flip_class_suite",
      [](const std::string& F, std::size_t trials, std::uint64_t seed, int d) {
        return class_report(flip_class_suite(parse_functional(F), trials, seed, d));
      },
      py::arg("functional"), py::arg("trials"), py::arg("seed"), py::arg("d") = 2);
  m.def(
      "min_sum_triangulation",
      [](const Coords& pts, const std::string& F) {
        const MinSumResult r = min_sum_triangulation(to_points(pts), parse_functional(F));
        py::dict d;
        d["triangulations"] = r.triangulations;
        d["best_value"] = r.best_value;
        d["best_cells"] = from_ids(r.best.cells());
        d["ties"] = r.ties;
        d["delaunay_value"] = r.delaunay_value;
        d["delaunay_is_minimum"] = r.delaunay_is_minimum;
        d["sums"] = r.sums;
        return d;
      },
      py::arg("points"), py::arg("functional"));

  m.def("geometric_grid", &geometric_grid, py::arg("lo"), py::arg("hi"), py::arg("ratio") = 1.1);
  m.def(
      "density",
      [](const TriangulationComplex& cx, const std::string& F, const std::vector<double>& center,
         const std::vector<double>& alphas) {
        const DensitySequence s =
            density_sequence(cx, parse_functional(F), to_points({center}).front(), alphas);
        py::dict d;
        d["alphas"] = s.alphas;
        d["cell_counts"] = s.cell_counts;
        d["ball_counts"] = s.ball_counts;
        d["sums"] = s.sums;
        d["values"] = s.values;
        d["liminf_tail"] = s.liminf_tail;
        return d;
      },
      py::arg("complex"), py::arg("functional"), py::arg("center"), py::arg("alphas"));
  m.def(
      "count_certificate",
      [](PointSetWindow w, std::uint64_t seed) {
        const TriangulationComplex cx = delaunay_of_window(w, seed);
        const BoundsCertificate c = count_certificate(w, cx);
        py::dict d;
        d["q"] = c.q;
        d["min_cell_measure"] = c.min_cell_measure;
        d["point_exponent"] = c.point_exponent;
        d["cell_exponent"] = c.cell_exponent;
        d["annulus_point_exponent"] = c.annulus_point_exponent;
        d["annulus_cell_exponent"] = c.annulus_cell_exponent;
        d["bounds_ok"] = c.bounds_ok();
        d["exponents_ok"] = c.exponents_ok();
        return d;
      },
      py::arg("window"), py::arg("seed") = 1);
  m.def(
      "compare",
      [](const PointSetWindow& w, const std::string& F, std::size_t flips, std::uint64_t seed) {
        const ComparisonReport r = main_theorem_comparison(w, parse_functional(F), flips, seed);
        py::dict d;
        std::vector<double> alphas, fD, fT;
        for (const ComparisonRow& row : r.rows) {
          alphas.push_back(row.alpha);
          fD.push_back(row.f_D);
          fT.push_back(row.f_T);
        }
        d["alphas"] = alphas;
        d["f_D"] = fD;
        d["f_T"] = fT;
        d["reversed_edges"] = from_ids(r.reversed_edges);
        d["all_ordered"] = r.all_ordered();
        d["brackets_nonnegative"] = r.brackets_nonnegative();
        d["containments_hold"] = r.containments_hold();
        return d;
      },
      py::arg("window"), py::arg("functional"), py::arg("flips"), py::arg("seed"));
  m.def(
      "strip_sequence",
      [](const std::string& F, int blocks, double a, double phi, double c, double psi, std::vector<int> ms) {
        const IsocelesPair p = compatible_isoceles(a, phi, c, psi);
        StripConfig cfg;
        cfg.L = p.L;
        cfg.a = a;
        cfg.c = c;
        cfg.m = std::move(ms);
        const StripSequence s = strip_gi_sequence(cfg, parse_functional(F), blocks);
        py::dict d;
        d["m"] = s.m;
        d["alphas"] = s.alphas;
        d["f"] = s.f;
        d["g"] = s.g;
        d["q"] = s.q;
        d["Q_wide"] = s.quotients.Q_wide;
        d["Q"] = s.quotients.Q;
        d["gap"] = s.quotients.gap;
        d["degenerate"] = s.degenerate;
        d["oscillates"] = s.oscillates();
        return d;
      },
      py::arg("functional"), py::arg("blocks"), py::arg("a") = 1.0, py::arg("phi") = 0.5235987755982988,
      py::arg("c") = 1.6, py::arg("psi") = 0.6283185307179586, py::arg("m") = std::vector<int>{});
  m.def(
      "distorted_cubes",
      [](double W) {
        const CubeReport r = analyze_distorted_cubes(W);
        py::list cubes;
        for (const CubeCell& c : r.cubes)
          cubes.append(py::make_tuple(std::vector<long>(c.corner.begin(), c.corner.end()), c.tets, c.top_volume,
                                      c.bottom_volume));
        py::dict d;
        d["cubes"] = cubes;
        d["stray_tets"] = r.stray_tets;
        d["cospherical_interior"] = r.cospherical_interior;
        d["min_volume_certified"] = r.min_volume_certified;
        return d;
      },
      py::arg("W"));
  m.def("cube_delta", &cube_delta);
}
