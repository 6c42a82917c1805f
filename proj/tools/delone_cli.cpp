/* Apache License, Version 2.0 */
// delone: command-line experiments over Delaunay sets and their triangulations.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delone/cube.hpp"
#include "delone/delaunay.hpp"
#include "delone/density.hpp"
#include "delone/error.hpp"
#include "delone/functionals.hpp"
#include "delone/generators.hpp"
#include "delone/geometry.hpp"
#include "delone/io.hpp"
#include "delone/oracle.hpp"
#include "delone/parallel.hpp"
#include "delone/strips.hpp"
#include "delone/triangulation.hpp"

using nlohmann::json;

namespace delone {
namespace {

// Outcome of one subcommand: exit 0 iff every asserted check passed.
struct Run {
  bool ok = true;
};

std::vector<double> coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

json ids_json(const IdTuple& t) { return std::vector<int>(t.begin(), t.end()); }

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Point parse_center(const std::string& s, int d) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "bad center coordinate '" + tok + "'");
    }
  }
  if (static_cast<int>(v.size()) != d)
    throw Error(ErrorCode::dimension_mismatch, "center needs " + std::to_string(d) + " coordinates");
  return Point(std::span<const double>(v));
}

json class_report_json(const ClassReport& r) {
  json j{{"functional", r.functional.to_string()},
         {"trials", r.trials},
         {"violations", r.violations},
         {"min_margin", r.min_margin},
         {"pass", r.pass()}};
  if (r.witness) {
    json w = json::array();
    for (const Point& p : *r.witness) w.push_back(coords(p));
    j["witness"] = w;
  }
  if (r.e_hat) j["e_hat"] = *r.e_hat;
  if (r.E_hat) j["E_hat"] = *r.E_hat;
  return j;
}

json certificate_json(const BoundsCertificate& c, std::size_t points) {
  json theo = json::array();
  for (const NamedBound& b : c.theoretical)
    theo.push_back({{"name", b.name}, {"value", std::isnan(b.value) ? json(nullptr) : json(b.value)},
                    {"formula", b.formula}});
  return {{"d", c.d},
          {"r", c.r},
          {"R", c.R},
          {"W", c.W},
          {"points", points},
          {"q", c.q},
          {"theoretical", theo},
          {"min_cell_measure", c.min_cell_measure},
          {"max_cell_measure", c.max_cell_measure},
          {"max_vertex_degree", c.max_vertex_degree},
          {"degree_bound", c.degree_bound},
          {"alphas", c.alphas},
          {"point_counts", c.point_counts},
          {"cell_counts", c.cell_counts},
          {"annulus_point_counts", c.annulus_point_counts},
          {"annulus_cell_counts", c.annulus_cell_counts},
          {"point_exponent", c.point_exponent},
          {"cell_exponent", c.cell_exponent},
          {"annulus_point_exponent", c.annulus_point_exponent},
          {"annulus_cell_exponent", c.annulus_cell_exponent},
          {"volume_lower_ok", c.volume_lower_ok},
          {"volume_upper_ok", c.volume_upper_ok},
          {"point_counts_ok", c.point_counts_ok},
          {"cell_counts_ok", c.cell_counts_ok},
          {"degree_ok", c.degree_ok},
          {"bounds_ok", c.bounds_ok()},
          {"exponents_ok", c.exponents_ok()}};
}

StripConfig strip_config(double a, double phi, double c, double psi, std::vector<int> m) {
  const IsocelesPair p = compatible_isoceles(a, phi, c, psi);
  StripConfig cfg;
  cfg.L = p.L;
  cfg.a = a;
  cfg.c = c;
  cfg.m = std::move(m);
  return cfg;
}

struct Options {
  std::uint64_t seed = 1;
  std::string out, manifest;

  // gen
  std::string gen_kind;
  int d = 2;
  double W = 10, r = 0.4, R = 1.5;
  bool jitter = false;
  std::string complex_out;

  // tri
  std::string pointfile, complexfile, legalize, log;
  bool d3 = false;
  std::size_t random_flips = 0;

  // functionals and experiments
  std::string F = "F5";
  double alpha_min = 0, alpha_max = 0, ratio = 1.1;
  std::string center;
  std::size_t trials = 1000;
  std::string n_range = "5..8";
  int blocks = 6;
  double a = 1.0, phi = std::numbers::pi / 6, c = 1.6, psi = std::numbers::pi / 5;
  std::vector<int> m;
  std::size_t reverse_flips = 50;
};

class Cli {
 public:
  explicit Cli(std::vector<std::string> args) : args_(std::move(args)) {}

  int main() {
    CLI::App app{"Delaunay-set triangulation experiments", "delone"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o_.seed, "64-bit seed for every random stream");
    app.add_option("--manifest", o_.manifest, "write a rerun manifest (JSON) here");

    auto* gen = app.add_subcommand("gen", "generate a point-set window");
    gen->add_option("kind", o_.gen_kind, "lattice | cube3d | poisson | strips")
        ->required()
        ->check(CLI::IsMember({"lattice", "cube3d", "poisson", "strips"}));
    gen->add_option("--d", o_.d, "dimension (lattice, poisson)");
    gen->add_option("--W,--window", o_.W, "window radius");
    gen->add_option("--r", o_.r, "packing radius (poisson)");
    gen->add_option("--R", o_.R, "covering radius (poisson)");
    gen->add_flag("--jitter", o_.jitter, "jitter the lattice by 1e-6 r (seeded)");
    gen->add_option("--out", o_.out, "point file (default stdout)");
    gen->add_option("--complex-out", o_.complex_out, "triangulation JSON (strips)");
    add_strip_options(gen);

    auto* tri = app.add_subcommand("tri", "Delaunay complex of a point file, or legalize a complex");
    tri->add_option("pointfile", o_.pointfile);
    tri->add_flag("--d3", o_.d3, "require a 3D point file");
    tri->add_option("--random-flips", o_.random_flips, "apply seeded random flips after building (2D)");
    tri->add_option("--legalize", o_.legalize, "complex JSON to legalize");
    tri->add_option("--log", o_.log, "flip log JSON (with --legalize)");
    tri->add_option("--out", o_.out, "complex JSON (default stdout)");

    auto* density = app.add_subcommand("density", "windowed density sequence");
    density->add_option("complexfile", o_.complexfile)->required();
    density->add_option("--F", o_.F);
    density->add_option("--alpha-min", o_.alpha_min)->required();
    density->add_option("--alpha-max", o_.alpha_max)->required();
    density->add_option("--ratio", o_.ratio);
    density->add_option("--center", o_.center, "x,y[,z]");
    density->add_option("--out", o_.out, "CSV (default stdout)");

    auto* flipcheck = app.add_subcommand("flipcheck", "flip inequality on random convex configurations");
    flipcheck->add_option("--F", o_.F);
    flipcheck->add_option("--trials", o_.trials);
    flipcheck->add_option("--d", o_.d);
    flipcheck->add_option("--out", o_.out);

    auto* gcheck = app.add_subcommand("gcheck", "subcomplex inequality against the enumeration oracle");
    gcheck->add_option("--F", o_.F);
    gcheck->add_option("--trials", o_.trials);
    gcheck->add_option("--n", o_.n_range, "point counts lo..hi");
    gcheck->add_option("--out", o_.out);

    auto* strips = app.add_subcommand("strips", "g_i / f_i along layered strip blocks");
    strips->add_option("--F", o_.F);
    strips->add_option("--out", o_.out, "CSV (default stdout)");
    strips->add_option("--report", o_.log, "verdict JSON (default: one line on stderr)");
    add_strip_options(strips);

    auto* cube = app.add_subcommand("cube3d", "per-cube tetrahedra of the distorted cubic lattice");
    cube->add_option("pointfile", o_.pointfile, "optional cube3d point file; its W is used");
    cube->add_option("--W,--window", o_.W);
    cube->add_option("--out", o_.out, "CSV (default stdout)");
    cube->add_option("--report", o_.log, "trend JSON");

    auto* counts = app.add_subcommand("counts", "point and cell count certificate");
    counts->add_option("pointfile", o_.pointfile)->required();
    counts->add_option("--out", o_.out);

    auto* compare = app.add_subcommand("compare", "Delaunay versus reverse-flipped densities");
    compare->add_option("pointfile", o_.pointfile)->required();
    compare->add_option("--F", o_.F);
    compare->add_option("--reverse-flips", o_.reverse_flips);
    compare->add_option("--out", o_.out);

    auto* oracle = app.add_subcommand("oracle", "enumerate all triangulations of a small planar set");
    oracle->add_option("pointfile", o_.pointfile)->required();
    oracle->add_option("--F", o_.F);
    oracle->add_option("--out", o_.out);

    auto* rerun = app.add_subcommand("rerun", "rerun the command recorded in a manifest");
    std::string rerun_path;
    rerun->add_option("manifest", rerun_path)->required();

    std::vector<std::string> rev(args_.rbegin(), args_.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      fail("invalid_argument", e.what());
      return 1;
    }

    try {
      if (*rerun) return rerun_manifest(rerun_path);
      Run run;
      if (*gen) run = cmd_gen();
      else if (*tri) run = cmd_tri();
      else if (*density) run = cmd_density();
      else if (*flipcheck) run = cmd_flipcheck();
      else if (*gcheck) run = cmd_gcheck();
      else if (*strips) run = cmd_strips();
      else if (*cube) run = cmd_cube3d();
      else if (*counts) run = cmd_counts();
      else if (*compare) run = cmd_compare();
      else if (*oracle) run = cmd_oracle();
      if (!o_.manifest.empty()) write_manifest(app.get_subcommands().front()->get_name());
      return run.ok ? 0 : 1;
    } catch (const Error& e) {
      fail(std::string(to_string(e.code())), e.what());
    } catch (const std::exception& e) {
      fail("internal", e.what());
    }
    return 1;
  }

 private:
  std::vector<std::string> args_;
  Options o_;

  static void fail(const std::string& code, const std::string& message) {
    std::cerr << json{{"error", code}, {"message", message}}.dump() << std::endl;
  }

  void add_strip_options(CLI::App* app) {
    app->add_option("--blocks", o_.blocks, "number of blocks k");
    app->add_option("--a", o_.a, "wide base length");
    app->add_option("--phi", o_.phi, "wide base angle bound (radians)");
    app->add_option("--c", o_.c, "narrow base length");
    app->add_option("--psi", o_.psi, "narrow base angle bound (radians)");
    app->add_option("--m", o_.m, "block sizes (odd); chosen automatically when omitted")->delimiter(',');
  }

  void write_manifest(const std::string& command) const {
    std::vector<std::string> argv = args_;
    // Drop the manifest flag itself so reruns do not overwrite the manifest.
    for (std::size_t i = 0; i < argv.size(); ++i) {
      if (argv[i] == "--manifest" && i + 1 < argv.size()) {
        argv.erase(argv.begin() + static_cast<long>(i), argv.begin() + static_cast<long>(i) + 2);
        break;
      }
      if (argv[i].rfind("--manifest=", 0) == 0) {
        argv.erase(argv.begin() + static_cast<long>(i));
        break;
      }
    }
    const json m{{"schema", 1},
                 {"command", command},
                 {"argv", argv},
                 {"seed", o_.seed},
                 {"threads", worker_count()}};
    write_text(o_.manifest, dump(m));
  }

  int rerun_manifest(const std::string& path) {
    json m;
    try {
      m = json::parse(read_text(path));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::io, std::string("manifest: ") + e.what());
    }
    if (m.value("schema", 0) != 1) throw Error(ErrorCode::io, "unsupported manifest schema");
    Cli again(m.at("argv").get<std::vector<std::string>>());
    return again.main();
  }

  FunctionalSpec functional() const { return parse_functional(o_.F); }

  Run cmd_gen() {
    PointSetWindow w;
    if (o_.gen_kind == "lattice") {
      w = lattice_window(o_.d, o_.W, o_.jitter ? std::optional<std::uint64_t>(o_.seed) : std::nullopt);
    } else if (o_.gen_kind == "cube3d") {
      w = distorted_cubic_window(o_.W);
    } else if (o_.gen_kind == "poisson") {
      w = poisson_delone_window(o_.d, o_.r, o_.R, o_.W, o_.seed);
    } else {
      StripConfig cfg = strip_config(o_.a, o_.phi, o_.c, o_.psi, o_.m);
      if (cfg.m.empty()) cfg.m = choose_block_sizes(cfg, functional(), o_.blocks);
      const StripTriangulation st = strip_block_triangulation(cfg, o_.blocks);
      w = st.window;
      if (!o_.complex_out.empty()) save_complex(o_.complex_out, st.complex, &st.window.provenance);
    }
    std::ostringstream s;
    write_point_file(s, w);
    emit(o_.out, s.str());
    return {};
  }

  Run cmd_tri() {
    if (!o_.legalize.empty()) {
      const TriangulationComplex cx = load_complex(o_.legalize);
      const LegalizeResult res = legalize_to_delaunay(cx);
      bool monotone = true;
      json log = json::array();
      for (const FlipRecord& f : res.flips) {
        monotone = monotone && f.after_max_circumradius <= f.before_max_circumradius + kGeoTolerance;
        log.push_back({{"removed", ids_json(f.facet)},
                       {"inserted", ids_json(f.new_facet)},
                       {"before_max_circumradius", f.before_max_circumradius},
                       {"after_max_circumradius", f.after_max_circumradius}});
      }
      if (!o_.log.empty())
        write_text(o_.log, dump({{"flips", log}, {"count", res.flips.size()}, {"radius_monotone", monotone}}));
      emit(o_.out, complex_to_json(res.complex) + "\n");
      return {monotone};
    }
    if (o_.pointfile.empty()) throw Error(ErrorCode::invalid_argument, "tri needs a point file or --legalize");
    PointSetWindow w = load_point_file(o_.pointfile);
    if (o_.d3 != (w.dimension == 3))
      throw Error(ErrorCode::dimension_mismatch, o_.d3 ? "--d3 given for a planar point file"
                                                       : "3D point file needs --d3");
    TriangulationComplex cx = delaunay_of_window(w, o_.seed);
    if (o_.random_flips > 0) cx = random_flip_walk(std::move(cx), o_.random_flips, o_.seed);
    emit(o_.out, complex_to_json(cx, &w.provenance) + "\n");
    return {};
  }

  Run cmd_density() {
    const TriangulationComplex cx = load_complex(o_.complexfile);
    const FunctionalSpec F = functional();
    const Point z = o_.center.empty() ? Point(cx.dimension()) : parse_center(o_.center, cx.dimension());
    const auto grid = geometric_grid(o_.alpha_min, o_.alpha_max, o_.ratio);
    const DensitySequence at_origin = density_sequence(cx, F, Point(cx.dimension()), grid);
    const DensitySequence at_z = density_sequence(cx, F, z, grid);
    emit(o_.out, density_csv(at_origin, at_z));
    return {};
  }

  Run cmd_flipcheck() {
    const ClassReport r = flip_class_suite(functional(), o_.trials, o_.seed, o_.d);
    emit(o_.out, dump(class_report_json(r)));
    return {r.pass()};
  }

  Run cmd_gcheck() {
    const auto dots = o_.n_range.find("..");
    int lo = 0, hi = 0;
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(o_.n_range);
      } else {
        lo = std::stoi(o_.n_range.substr(0, dots));
        hi = std::stoi(o_.n_range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "--n expects lo..hi");
    }
    const ClassReport r = g_class_suite(functional(), o_.trials, lo, hi, o_.seed);
    emit(o_.out, dump(class_report_json(r)));
    return {r.pass()};
  }

  Run cmd_strips() {
    StripConfig cfg = strip_config(o_.a, o_.phi, o_.c, o_.psi, o_.m);
    const FunctionalSpec F = functional();
    const StripSequence seq = strip_gi_sequence(cfg, F, o_.blocks);
    std::string csv = "i,m,alpha,k_wide,l_narrow,f,g\n";
    for (std::size_t i = 0; i < seq.g.size(); ++i)
      csv += std::to_string(i + 1) + ',' + std::to_string(seq.m[i]) + ',' + format_double(seq.alphas[i]) + ',' +
             std::to_string(seq.k_counts[i]) + ',' + std::to_string(seq.l_counts[i]) + ',' +
             format_double(seq.f[i]) + ',' + format_double(seq.g[i]) + '\n';
    const QuotientValues& q = seq.quotients;
    bool ok;
    json verdict{{"functional", F.to_string()},
                 {"m", seq.m},
                 {"Q_wide", q.Q_wide},
                 {"Q_narrow", q.Q_narrow},
                 {"Q", q.Q},
                 {"gap", q.gap},
                 {"q", seq.q},
                 {"degenerate", seq.degenerate}};
    if (seq.degenerate) {
      // F is proportional to area: f_k settles at the common quotient.
      const double dev = std::abs(seq.f.back() - q.Q_wide);
      const double bound = 3 * seq.q / seq.alphas.back() * std::abs(q.Q_wide);
      ok = dev <= bound;
      verdict["f_k_deviation"] = dev;
      verdict["f_k_bound"] = bound;
    } else {
      ok = seq.oscillates();
      verdict["odd_near_wide"] = seq.odd_near_wide;
      verdict["even_near_Q"] = seq.even_near_Q;
      verdict["separation"] = seq.separation;
    }
    verdict["oscillates"] = seq.oscillates();
    verdict["pass"] = ok;
    emit(o_.out, csv);
    if (!o_.log.empty()) write_text(o_.log, dump(verdict));
    else std::cerr << verdict.dump() << std::endl;
    return {ok};
  }

  Run cmd_cube3d() {
    double W = o_.W;
    if (!o_.pointfile.empty()) {
      const PointSetWindow w = load_point_file(o_.pointfile);
      W = w.W;
      if (w.points != distorted_cubic_window(W).points)
        throw Error(ErrorCode::invalid_argument, "point file is not a distorted cubic window");
    }
    const CubeReport rep = analyze_distorted_cubes(W);
    bool ok = rep.stray_tets == 0 && rep.cospherical_interior == 0 && !rep.cubes.empty();
    std::string csv = "i,j,k,tets,volume,top_volume,top_expected,bottom_volume,bottom_expected,min_volume\n";
    for (const CubeCell& c : rep.cubes) {
      const double top = 2.0 / 3.0 * cube_delta(c.corner[2] + 1), bottom = 2.0 / 3.0 * cube_delta(c.corner[2]);
      ok = ok && c.tets == 7 && std::abs(c.top_volume - top) <= 1e-9 && std::abs(c.bottom_volume - bottom) <= 1e-9;
      csv += std::to_string(c.corner[0]) + ',' + std::to_string(c.corner[1]) + ',' + std::to_string(c.corner[2]) +
             ',' + std::to_string(c.tets) + ',' + format_double(c.volume) + ',' + format_double(c.top_volume) +
             ',' + format_double(top) + ',' + format_double(c.bottom_volume) + ',' + format_double(bottom) + ',' +
             format_double(c.min_volume) + '\n';
    }
    json trend = json::array();
    double prev = INFINITY;
    for (double w = 4; w <= W + 1e-12; w += 2) {
      const CubeReport r = w == W ? rep : analyze_distorted_cubes(w);
      ok = ok && r.min_volume_certified <= prev;
      prev = r.min_volume_certified;
      trend.push_back({{"W", w}, {"min_volume_certified", r.min_volume_certified}, {"min_volume_all", r.min_volume_all}});
    }
    emit(o_.out, csv);
    const json report{{"W", W},
                      {"points", rep.points},
                      {"cells", rep.cells},
                      {"interior_cubes", rep.cubes.size()},
                      {"stray_tets", rep.stray_tets},
                      {"cospherical_facets", rep.cospherical_facets},
                      {"cospherical_interior", rep.cospherical_interior},
                      {"min_volume_trend", trend},
                      {"pass", ok}};
    if (!o_.log.empty()) write_text(o_.log, dump(report));
    else std::cerr << report.dump() << std::endl;
    return {ok};
  }

  Run cmd_counts() {
    PointSetWindow w = load_point_file(o_.pointfile);
    const std::size_t n = w.points.size();
    const TriangulationComplex cx = delaunay_of_window(w, o_.seed);
    const BoundsCertificate c = count_certificate(w, cx);
    emit(o_.out, dump(certificate_json(c, n)));
    return {c.bounds_ok()};
  }

  Run cmd_compare() {
    const PointSetWindow w = load_point_file(o_.pointfile);
    const ComparisonReport rep = main_theorem_comparison(w, functional(), o_.reverse_flips, o_.seed);
    json rows = json::array();
    for (const ComparisonRow& r : rep.rows)
      rows.push_back({{"alpha", r.alpha},
                      {"f_D", r.f_D},
                      {"f_T", r.f_T},
                      {"sigma_T", r.sigma_T},
                      {"sigma_D_prime", r.sigma_D_prime},
                      {"sigma_D", r.sigma_D},
                      {"first_bracket", r.first_bracket},
                      {"second_bracket", r.second_bracket},
                      {"slack", r.slack},
                      {"tolerance", r.tolerance},
                      {"ordered", r.ordered},
                      {"shrunk_in_prime", r.shrunk_in_prime},
                      {"shrunk_in_legalized", r.shrunk_in_legalized}});
    json edges = json::array();
    for (const IdTuple& e : rep.reversed_edges) edges.push_back(ids_json(e));
    const json j{{"functional", rep.functional.to_string()},
                 {"requested_flips", rep.requested_flips},
                 {"reversed_edges", edges},
                 {"q_D", rep.q_D},
                 {"q_T", rep.q_T},
                 {"rows", rows},
                 {"all_ordered", rep.all_ordered()},
                 {"brackets_nonnegative", rep.brackets_nonnegative()},
                 {"containments_hold", rep.containments_hold()}};
    emit(o_.out, dump(j));
    return {rep.all_ordered() && rep.containments_hold()};
  }

  Run cmd_oracle() {
    const PointSetWindow w = load_point_file(o_.pointfile);
    if (w.dimension != 2) throw Error(ErrorCode::dimension_mismatch, "the oracle is planar only");
    const FunctionalSpec F = functional();
    const MinSumResult r = min_sum_triangulation(w.points, F);
    json best = json::array();
    for (const IdTuple& c : r.best.cells()) best.push_back(ids_json(c));
    // Functionals with the subcomplex property must be minimized by Delaunay.
    const bool asserted = F.kind == FunctionalKind::F5 || F.kind == FunctionalKind::FR ||
                          F.kind == FunctionalKind::FE || F.kind == FunctionalKind::AREA;
    const json j{{"functional", F.to_string()},
                 {"points", w.points.size()},
                 {"triangulations", r.triangulations},
                 {"sums", r.sums},
                 {"best_value", r.best_value},
                 {"best_cells", best},
                 {"ties", r.ties},
                 {"delaunay_value", r.delaunay_value},
                 {"delaunay_is_minimum", r.delaunay_is_minimum},
                 {"asserted", asserted}};
    emit(o_.out, dump(j));
    return {!asserted || r.delaunay_is_minimum};
  }
};

}  // namespace
}  // namespace delone

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return delone::Cli(std::move(args)).main();
}
