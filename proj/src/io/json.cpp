#include "horo/io/json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace horo::io {

namespace {

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

double read_number(const json& j, const std::string& path, const char* key) {
  return read_number(member(j, path, key), join(path, key));
}

Complex<double> read_complex(const json& j, const std::string& path) {
  return {read_number(j, path, "re"), read_number(j, path, "im")};
}

MinkVec<double> read_minkvec(const json& j, const std::string& path) {
  return {read_number(j, path, "T"), read_number(j, path, "X"), read_number(j, path, "Y"), read_number(j, path, "Z")};
}

BoundaryPoint<double> read_boundary(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return BoundaryPoint<double>::infinity();
    throw ParseError(path, "expected \"inf\" or a complex number");
  }
  return BoundaryPoint<double>::finite(read_complex(j, path));
}

template <typename F>
auto domain_checked(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

}  // namespace

json to_json(const Complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Spinor<double>& k) { return {{"xi", to_json(k.xi())}, {"eta", to_json(k.eta())}}; }

json to_json(const MinkVec<double>& p) { return {{"T", p.T()}, {"X", p.X()}, {"Y", p.Y()}, {"Z", p.Z()}}; }

json to_json(const Flag<double>& f) { return {{"base", to_json(f.base())}, {"dir", to_json(f.dir())}}; }

json to_json(const BoundaryPoint<double>& c) { return c.is_infinite() ? json("inf") : to_json(c.value()); }

json to_json(const DecoratedHorosphere<double>& h) {
  return {{"center", to_json(h.center())}, {"delta", to_json(h.delta())}};
}

json to_json(const ComplexDistance<double>& d) {
  json j;
  j["rho"] = d.same_center() ? json("-inf") : json(d.rho());
  j["theta"] = d.theta();
  j["mode"] = d.mode() == AngleMode::Spin ? "spin" : "decorated";
  j["same_center"] = d.same_center();
  return j;
}

json to_json(const LambdaLength<double>& l) { return to_json(l.value); }

json to_json(const ShapeTriple<double>& s) {
  return {{"z", to_json(s.z)}, {"z_prime", to_json(s.z_prime)}, {"z_dprime", to_json(s.z_dprime)}};
}

json to_json(const PolygonClass& c) {
  const char* name = c.spin_coherent ? "spin_coherent" : c.ideal ? "ideal" : c.nondegenerate ? "nondegenerate" : "generalized";
  return {{"class", name},
          {"generalized", c.generalized},
          {"nondegenerate", c.nondegenerate},
          {"ideal", c.ideal},
          {"spin_coherent", c.spin_coherent}};
}

json to_json(const FordCircle& c) { return {{"p", c.p()}, {"q", c.q()}}; }

json to_json(const FrameBasis<double>& b) {
  auto v = [](const Vector3<double>& x) { return json::array({x.x(), x.y(), x.z()}); };
  return {{"e1", v(b.e1)}, {"e2", v(b.e2)}, {"e3", v(b.e3)}};
}

template <>
Complex<double> from_json(const json& j) {
  return read_complex(j, "");
}

template <>
NonzeroSpinor<double> from_json(const json& j) {
  const Complex<double> xi = read_complex(member(j, "", "xi"), "xi");
  const Complex<double> eta = read_complex(member(j, "", "eta"), "eta");
  return domain_checked("spinor", [&] { return NonzeroSpinor<double>(xi, eta); });
}

template <>
MinkVec<double> from_json(const json& j) {
  return read_minkvec(j, "");
}

template <>
Flag<double> from_json(const json& j) {
  const MinkVec<double> base = read_minkvec(member(j, "", "base"), "base");
  const MinkVec<double> dir = read_minkvec(member(j, "", "dir"), "dir");
  return domain_checked("flag", [&] { return Flag<double>(base, dir); });
}

template <>
BoundaryPoint<double> from_json(const json& j) {
  return read_boundary(j, "");
}

template <>
DecoratedHorosphere<double> from_json(const json& j) {
  const BoundaryPoint<double> c = read_boundary(member(j, "", "center"), "center");
  const Complex<double> delta = read_complex(member(j, "", "delta"), "delta");
  return domain_checked("delta", [&] { return DecoratedHorosphere<double>(c, delta); });
}

template <>
ComplexDistance<double> from_json(const json& j) {
  const json& mode_j = member(j, "", "mode");
  if (!mode_j.is_string() || (mode_j != "spin" && mode_j != "decorated"))
    throw ParseError("mode", "expected \"spin\" or \"decorated\"");
  const AngleMode mode = mode_j == "spin" ? AngleMode::Spin : AngleMode::Decorated;
  const json& rho = member(j, "", "rho");
  if (rho.is_string()) {
    if (rho != "-inf") throw ParseError("rho", "expected a number or \"-inf\"");
    return ComplexDistance<double>::common_center(mode);
  }
  return {read_number(rho, "rho"), read_number(j, "", "theta"), mode};
}

template <>
FordCircle from_json(const json& j) {
  auto read_int = [&](const char* key) {
    const json& v = member(j, "", key);
    if (!v.is_number_integer()) throw ParseError(key, "expected an integer");
    return v.get<std::int64_t>();
  };
  const std::int64_t p = read_int("p"), q = read_int("q");
  return domain_checked("ford", [&] { return FordCircle(p, q); });
}

json rounded(const json& j, int digits) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) return j;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? json(0.0) : json(r);
  }
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it, digits);
    return out;
  }
  return j;
}

}  // namespace horo::io
