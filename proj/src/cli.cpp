#include "horo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "horo/io/json.hpp"
#include "horo/io/parse.hpp"
#include "horo/io/svg.hpp"

namespace horo::cli {

namespace {

using io::json;

std::vector<NonzeroSpinor<double>> parse_all(const std::vector<std::string>& tokens) {
  std::vector<NonzeroSpinor<double>> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(io::parse_spinor(t));
  return out;
}

void emit(std::ostream& out, const json& j) { out << io::rounded(j).dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

json cmd_map(const NonzeroSpinor<double>& k) {
  json j;
  j["spinor"] = io::to_json(k);
  j["gf"] = io::to_json(gf(k));
  j["flag"] = io::to_json(flag_of_spinor(k));
  j["horosphere"] = io::to_json(K_map(k));
  return j;
}

json cmd_lambda(const NonzeroSpinor<double>& k1, const NonzeroSpinor<double>& k2, const Tolerance& tol) {
  json j;
  j["lambda"] = io::to_json(lambda(k1, k2));
  j["spin"] = io::to_json(complex_distance_spin(k1, k2, tol));
  j["decorated"] = io::to_json(complex_distance_geometric(K_map(k1), K_map(k2), tol));
  return j;
}

json cmd_ptolemy(const std::vector<NonzeroSpinor<double>>& k, const Tolerance& tol) {
  const Complex<double> res = ptolemy_residual(k[0], k[1], k[2], k[3]);
  const ShapeTriple<double> shape = shape_parameters(k[0], k[1], k[2], k[3], tol);
  json j;
  j["residual"] = io::to_json(res);
  j["scaled_residual"] = std::abs(res) / ptolemy_scale<double>(k[0], k[1], k[2], k[3]);
  j["shape"] = io::to_json(shape);
  return j;
}

json cmd_classify(const std::vector<NonzeroSpinor<double>>& k) {
  std::vector<Spinor<double>> cols(k.begin(), k.end());
  const auto m = SpinorMatrix<double>::from_columns(std::move(cols));
  json j;
  j["field"] = m.field() == Field::Real ? "real" : "complex";
  j["columns"] = static_cast<std::int64_t>(m.size());
  const PolygonClass c = classify_polygon_matrix(m);
  const json cj = io::to_json(c);
  for (const auto& [key, value] : cj.items()) j[key] = value;
  return j;
}

json cmd_ford(int depth) {
  json circles = json::array();
  for (const auto& c : farey_enumerate(depth)) {
    json e = io::to_json(c);
    e["diameter"] = 1.0 / static_cast<double>(c.q() * c.q());
    circles.push_back(e);
  }
  json j;
  j["depth"] = depth;
  j["count"] = static_cast<std::int64_t>(circles.size());
  j["circles"] = circles;
  return j;
}

io::SceneU make_scene(const std::vector<NonzeroSpinor<double>>& k, std::optional<double> xmin,
                      std::optional<double> xmax, const std::vector<std::string>& labels) {
  io::SceneU scene;
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto& s : k) {
    scene.horospheres.push_back(K_map(s));
    const auto& h = scene.horospheres.back();
    if (h.center().is_finite()) {
      const double x = h.center().value().real(), r = 0.5 * h.size();
      lo = any ? std::min(lo, x - r) : x - r;
      hi = any ? std::max(hi, x + r) : x + r;
      any = true;
    }
  }
  if (any && hi > lo) {
    const double pad = 0.1 * (hi - lo);
    scene.xmin = lo - pad;
    scene.xmax = hi + pad;
  } else if (any) {
    scene.xmin = lo - 1;
    scene.xmax = hi + 1;
  }
  if (xmin) scene.xmin = *xmin;
  if (xmax) scene.xmax = *xmax;
  scene.labels = labels;
  return scene;
}

}  // namespace

Tolerance tolerance_from_env(const char* value) {
  Tolerance tol;
  if (value == nullptr || *value == '\0') return tol;
  char* end = nullptr;
  const double r = std::strtod(value, &end);
  if (end == value || *end != '\0' || !(r > 0) || !std::isfinite(r))
    throw io::ParseError("HOROLIB_TOL", "expected a positive number");
  tol.rtol = r;
  return tol;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Tolerance& tol) {
  CLI::App app{"Spinors, horospheres and lambda lengths", "horo"};
  app.require_subcommand(1);

  std::vector<std::string> single, pair, quad, columns, scene_tokens, labels;
  int depth = 0;
  std::string ford_svg, scene_svg;
  std::optional<double> xmin, xmax;

  auto* map = app.add_subcommand("map", "Flag, Minkowski point and decorated horosphere of a spinor");
  map->add_option("spinor", single, "spinor xi,eta")->required()->expected(1);
  auto* lam = app.add_subcommand("lambda", "Lambda length and complex distances of two spinors");
  lam->add_option("spinors", pair, "two spinors")->required()->expected(2);
  auto* pto = app.add_subcommand("ptolemy", "Ptolemy residual and shape parameters of four spinors");
  pto->add_option("spinors", quad, "four spinors")->required()->expected(4);
  auto* cls = app.add_subcommand("classify", "Classify the 2 x d matrix with the given spinor columns");
  cls->add_option("columns", columns, "spinor columns")->required()->expected(1, 1 << 20);
  auto* ford = app.add_subcommand("ford", "Ford circles over [0, 1]");
  ford->add_option("--depth", depth, "maximum denominator (1..30)")->required();
  ford->add_option("--svg", ford_svg, "write an SVG diagram");
  auto* scene = app.add_subcommand("scene", "Draw horosphere cross-sections in the upper half plane");
  scene->add_option("--svg", scene_svg, "output SVG file")->required();
  scene->add_option("--xmin", xmin, "left edge of the viewport");
  scene->add_option("--xmax", xmax, "right edge of the viewport");
  scene->add_option("--label", labels, "label for each horosphere, in order");
  scene->add_option("spinors", scene_tokens, "spinors")->required()->expected(1, 1 << 20);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*map) {
      emit(out, cmd_map(io::parse_spinor(single.at(0))));
    } else if (*lam) {
      const auto k = parse_all(pair);
      emit(out, cmd_lambda(k[0], k[1], tol));
    } else if (*pto) {
      const auto k = parse_all(quad);
      emit(out, cmd_ptolemy(k, tol));
    } else if (*cls) {
      emit(out, cmd_classify(parse_all(columns)));
    } else if (*ford) {
      const json j = cmd_ford(depth);
      if (!ford_svg.empty()) write_file(ford_svg, io::render_ford_svg(farey_enumerate(depth)));
      emit(out, j);
    } else if (*scene) {
      const auto k = parse_all(scene_tokens);
      const io::SceneU s = make_scene(k, xmin, xmax, labels);
      write_file(scene_svg, io::render_scene_svg(s));
      json j;
      j["svg"] = scene_svg;
      j["viewport"] = json::array({s.xmin, s.xmax});
      json hs = json::array();
      for (const auto& h : s.horospheres) hs.push_back(io::to_json(h));
      j["horospheres"] = hs;
      emit(out, j);
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace horo::cli
