#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "horo/io/json.hpp"
#include "horo/io/parse.hpp"
#include "horo/io/svg.hpp"
#include "support/testing.hpp"

namespace horo::io {
namespace {

using testing::C;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1"), C(1, 0));
  EXPECT_EQ(parse_complex("-2.5"), C(-2.5, 0));
  EXPECT_EQ(parse_complex("i"), C(0, 1));
  EXPECT_EQ(parse_complex("-i"), C(0, -1));
  EXPECT_EQ(parse_complex("3i"), C(0, 3));
  EXPECT_EQ(parse_complex("1+2i"), C(1, 2));
  EXPECT_EQ(parse_complex("1-i"), C(1, -1));
  EXPECT_EQ(parse_complex(" 1 + 2 i "), C(1, 2));
  EXPECT_EQ(parse_complex("1e-3+2.5e1i"), C(1e-3, 25));
  EXPECT_EQ(parse_complex("-1E+2-3e-1i"), C(-100, -0.3));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "x", "1+", "1++2i", "inf", "nan", "1i2", "2j", "1,2"}) {
    EXPECT_THROW(parse_complex(bad), ParseError) << bad;
  }
}

TEST(ParseSpinor, Forms) {
  const auto k = parse_spinor("1+i, -2");
  EXPECT_EQ(k.xi(), C(1, 1));
  EXPECT_EQ(k.eta(), C(-2, 0));
  EXPECT_THROW(parse_spinor("1"), ParseError);
  EXPECT_THROW(parse_spinor("1,2,3"), ParseError);
  try {
    parse_spinor("0,0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "spinor");
  }
}

TEST(Json, KMapRoundTrip) {
  for (const auto& k : {NonzeroSpinor<double>(1, 0), NonzeroSpinor<double>(0, 1), NonzeroSpinor<double>(C(1, -2), C(0.5, 3))}) {
    const auto h = K_map(k);
    const json j = to_json(h);
    const auto back = from_json<DecoratedHorosphere<double>>(json::parse(j.dump()));
    EXPECT_EQ(back.center(), h.center());
    EXPECT_EQ(back.delta(), h.delta());
  }
  EXPECT_EQ(to_json(K_map(NonzeroSpinor<double>(1, 0)))["center"], "inf");
}

TEST(Json, FlagRoundTripKeepsCanonicalForm) {
  testing::Rng rng(100);
  for (int n = 0; n < 50; ++n) {
    const auto f = flag_of_spinor(rng.spinor());
    const auto back = from_json<Flag<double>>(json::parse(to_json(f).dump()));
    EXPECT_EQ(back.base().vector(), f.base().vector());
    EXPECT_LT((back.dir().vector() - f.dir().vector()).norm(), 1e-14 * f.base().T());
    EXPECT_EQ(back.dir().T(), 0.0);
  }
}

TEST(Json, ScalarTypesRoundTrip) {
  const C z(1.25, -3);
  EXPECT_EQ(from_json<C>(to_json(z)), z);
  const MinkVec<double> p(1, 2, 3, 4);
  EXPECT_EQ(from_json<MinkVec<double>>(to_json(p)).vector(), p.vector());
  const auto k = from_json<NonzeroSpinor<double>>(to_json(Spinor<double>(C(1, 2), C(3, 4))));
  EXPECT_EQ(k.xi(), C(1, 2));
  EXPECT_EQ(k.eta(), C(3, 4));
  const FordCircle f(-3, 7);
  EXPECT_EQ(from_json<FordCircle>(to_json(f)), f);
  const ComplexDistance<double> d(0.5, 1.0, AngleMode::Spin);
  const auto dd = from_json<ComplexDistance<double>>(to_json(d));
  EXPECT_EQ(dd.rho(), 0.5);
  EXPECT_EQ(dd.theta(), 1.0);
  EXPECT_EQ(dd.mode(), AngleMode::Spin);
  const auto cc = ComplexDistance<double>::common_center(AngleMode::Decorated);
  EXPECT_EQ(to_json(cc)["rho"], "-inf");
  EXPECT_TRUE(from_json<ComplexDistance<double>>(to_json(cc)).same_center());
}

TEST(Json, ErrorsNameTheField) {
  auto field_of = [](auto fn) -> std::string {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.field();
    }
    return "<no error>";
  };
  EXPECT_EQ(field_of([] { from_json<NonzeroSpinor<double>>(json::parse(R"({"xi":{"re":0,"im":0},"eta":{"re":0,"im":0}})")); }),
            "spinor");
  EXPECT_EQ(field_of([] { from_json<NonzeroSpinor<double>>(json::parse(R"({"xi":{"re":1,"im":0}})")); }), "eta");
  EXPECT_EQ(field_of([] { from_json<DecoratedHorosphere<double>>(json::parse(R"({"center":"inf","delta":{"re":1}})")); }),
            "delta.im");
  EXPECT_EQ(field_of([] { from_json<DecoratedHorosphere<double>>(json::parse(R"({"center":"oops","delta":{"re":1,"im":0}})")); }),
            "center");
  EXPECT_EQ(field_of([] { from_json<DecoratedHorosphere<double>>(json::parse(R"({"center":"inf","delta":{"re":0,"im":0}})")); }),
            "delta");
  EXPECT_EQ(field_of([] { from_json<Flag<double>>(json::parse(R"({"base":{"T":1,"X":0,"Y":0,"Z":0},"dir":{"T":0,"X":1,"Y":0,"Z":0}})")); }),
            "flag");
  EXPECT_EQ(field_of([] { from_json<FordCircle>(json::parse(R"({"p":1.5,"q":2})")); }), "p");
  EXPECT_EQ(field_of([] { from_json<ComplexDistance<double>>(json::parse(R"({"rho":0,"theta":0,"mode":"x"})")); }), "mode");
}

TEST(Json, RoundedIsDeterministic) {
  json j;
  j["a"] = 0.1 + 0.2;
  j["b"] = -0.0;
  j["c"] = json::array({1.0 / 3, 2});
  const json r = rounded(j);
  EXPECT_EQ(r.dump(), R"({"a":0.3,"b":0.0,"c":[0.333333333333,2]})");
}

// Parses the SVG as XML and collects the element names.
std::set<std::string> svg_elements(const std::string& svg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(svg);
  pt::read_xml(in, tree);
  std::set<std::string> names;
  const auto& root = tree.get_child("svg");
  EXPECT_EQ(root.get<std::string>("<xmlattr>.xmlns"), "http://www.w3.org/2000/svg");
  EXPECT_EQ(root.get<std::string>("<xmlattr>.version"), "1.1");
  for (const auto& [name, child] : root) {
    (void)child;
    if (name != "<xmlattr>") names.insert(name);
  }
  return names;
}

TEST(Svg, SceneIsWellFormed) {
  SceneU scene;
  scene.horospheres = {K_map(NonzeroSpinor<double>(1, 0)), K_map(NonzeroSpinor<double>(0, 1)),
                       K_map(NonzeroSpinor<double>(C(1), C(1, 1))), K_map(NonzeroSpinor<double>(C(0, 3), C(1)))};
  scene.labels = {"k1", "k2 & <k3>"};
  const std::string svg = render_scene_svg(scene);
  const auto names = svg_elements(svg);
  const std::set<std::string> allowed{"title", "line", "circle", "path", "text"};
  for (const auto& n : names) EXPECT_TRUE(allowed.count(n)) << n;
  EXPECT_TRUE(names.count("circle"));
  EXPECT_TRUE(names.count("path"));
  EXPECT_NE(svg.find("k2 &amp; &lt;k3&gt;"), std::string::npos);
  EXPECT_EQ(render_scene_svg(scene), svg);
  scene.xmax = scene.xmin;
  EXPECT_THROW(render_scene_svg(scene), DomainError);
}

TEST(Svg, FordIsWellFormed) {
  const auto circles = farey_enumerate(5);
  const std::string svg = render_ford_svg(circles);
  const auto names = svg_elements(svg);
  EXPECT_TRUE(names.count("circle"));
  std::size_t count = 0, pos = 0;
  while ((pos = svg.find("<circle", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  EXPECT_EQ(count, circles.size());
  EXPECT_NE(svg.find(">2/5</text>"), std::string::npos);
}

}  // namespace
}  // namespace horo::io
