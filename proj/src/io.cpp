/* Apache License, Version 2.0 */

#include "delone/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "delone/error.hpp"

namespace delone {
namespace {

using nlohmann::json;

json provenance_json(const Provenance& p) {
  json params = json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  return {{"generator", p.generator}, {"params", params}, {"seed", p.seed}, {"jitter", p.jitter}, {"note", p.note}};
}

double parse_double(const std::string& tok) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::io, "not a number: '" + tok + "'");
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_point_file(std::ostream& out, const PointSetWindow& w) {
  out << w.dimension << ' ' << format_double(w.r) << ' ' << format_double(w.R) << ' ' << format_double(w.W) << '\n';
  for (const Point& p : w.points) {
    for (int i = 0; i < p.dim(); ++i) out << (i ? " " : "") << format_double(p[i]);
    out << '\n';
  }
}

PointSetWindow read_point_file(std::istream& in) {
  PointSetWindow w;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::io, "empty point file");
  {
    std::istringstream hs(line);
    std::string d, r, R, W, extra;
    if (!(hs >> d >> r >> R >> W) || (hs >> extra)) throw Error(ErrorCode::io, "header must be 'd r R W'");
    w.dimension = static_cast<int>(parse_double(d));
    if (w.dimension < 2 || w.dimension > 3 || w.dimension != parse_double(d))
      throw Error(ErrorCode::io, "dimension must be 2 or 3");
    w.r = parse_double(r);
    w.R = parse_double(R);
    w.W = parse_double(W);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    Point p(w.dimension);
    int n = 0;
    while (ls >> tok) {
      if (n == w.dimension) throw Error(ErrorCode::io, "too many coordinates on line " + std::to_string(lineno));
      p[n++] = parse_double(tok);
    }
    if (n == 0) continue;
    if (n != w.dimension) throw Error(ErrorCode::io, "too few coordinates on line " + std::to_string(lineno));
    w.points.push_back(p);
  }
  w.provenance.generator = "file";
  return w;
}

void save_point_file(const std::string& path, const PointSetWindow& w) {
  std::ostringstream s;
  write_point_file(s, w);
  write_text(path, s.str());
}

PointSetWindow load_point_file(const std::string& path) {
  std::istringstream s(read_text(path));
  return read_point_file(s);
}

std::string complex_to_json(const TriangulationComplex& cx, const Provenance* provenance) {
  json j;
  j["dimension"] = cx.dimension();
  json pts = json::array();
  for (const Point& p : cx.points()) pts.push_back(std::vector<double>(p.coords().begin(), p.coords().end()));
  j["points"] = std::move(pts);
  json cells = json::array();
  for (const IdTuple& c : cx.cells()) cells.push_back(std::vector<int>(c.begin(), c.end()));
  j["cells"] = std::move(cells);
  if (cx.window()) {
    const auto& c = cx.window()->center;
    j["window"] = {{"center", std::vector<double>(c.coords().begin(), c.coords().end())},
                   {"radius", cx.window()->radius}};
  }
  if (provenance) j["provenance"] = provenance_json(*provenance);
  return j.dump();
}

TriangulationComplex complex_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::io, std::string("complex JSON: ") + e.what());
  }
  try {
    const int d = j.at("dimension").get<int>();
    if (d < 2 || d > 3) throw Error(ErrorCode::io, "complex dimension must be 2 or 3");
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
      const auto v = p.get<std::vector<double>>();
      if (static_cast<int>(v.size()) != d) throw Error(ErrorCode::io, "point of wrong dimension");
      pts.emplace_back(std::span<const double>(v));
    }
    std::vector<IdTuple> cells;
    for (const auto& c : j.at("cells")) {
      const auto v = c.get<std::vector<int>>();
      if (static_cast<int>(v.size()) != d + 1) throw Error(ErrorCode::io, "cell of wrong size");
      cells.emplace_back(std::span<const int>(v));
    }
    TriangulationComplex cx = TriangulationComplex::build(std::move(pts), std::move(cells), Coverage::none);
    if (j.contains("window")) {
      const auto c = j["window"].at("center").get<std::vector<double>>();
      cx.set_window(WindowInfo{Point(std::span<const double>(c)), j["window"].at("radius").get<double>()});
    }
    return cx;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::io, std::string("complex JSON: ") + e.what());
  }
}

void save_complex(const std::string& path, const TriangulationComplex& cx, const Provenance* provenance) {
  write_text(path, complex_to_json(cx, provenance) + "\n");
}

TriangulationComplex load_complex(const std::string& path) { return complex_from_json(read_text(path)); }

std::string density_csv(const DensitySequence& origin, const DensitySequence& shifted) {
  if (origin.alphas != shifted.alphas) throw Error(ErrorCode::invalid_argument, "density grids differ");
  std::string out = "alpha,cells_vertexrule,cells_ballrule,sum_F,f_value,f_z_value,gap\n";
  for (std::size_t i = 0; i < origin.alphas.size(); ++i) {
    out += format_double(origin.alphas[i]) + ',' + std::to_string(origin.cell_counts[i]) + ',' +
           std::to_string(origin.ball_counts[i]) + ',' + format_double(origin.sums[i]) + ',' +
           format_double(origin.values[i]) + ',' + format_double(shifted.values[i]) + ',' +
           format_double(std::abs(origin.values[i] - shifted.values[i])) + '\n';
  }
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

}  // namespace delone
