#include "horo/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace horo::io {

namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 40.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps math coordinates (x, height) to screen pixels with the y-axis flipped.
struct Viewport {
  double xmin;
  double scale;
  double height_px;

  double sx(double x) const { return kMargin + (x - xmin) * scale; }
  double sy(double h) const { return height_px - kMargin - h * scale; }
};

void header(std::ostringstream& os, double w, double h) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
}

void line(std::ostringstream& os, double x1, double y1, double x2, double y2, const char* stroke, double width) {
  os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
     << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

void circle(std::ostringstream& os, double cx, double cy, double r, const char* stroke) {
  os << "  <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\""
     << stroke << "\" stroke-width=\"1.000\"/>\n";
}

void text(std::ostringstream& os, double x, double y, double size, const std::string& s) {
  os << "  <text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << escape(s) << "</text>\n";
}

// Arrow of screen length `len` from (x, y) along the decoration direction u.
void arrow(std::ostringstream& os, double x, double y, Complex<double> u, double len) {
  const double r = std::sqrt(0.5) * 0.5;
  double dx = u.real() + r * u.imag();
  double dy = -r * u.imag();  // screen y points down
  const double n = std::hypot(dx, dy);
  if (n == 0) return;
  dx /= n;
  dy /= n;
  const double ex = x + len * dx * n, ey = y + len * dy * n;
  const double hx = -dx * 6, hy = -dy * 6;  // head segments, rotated +-30 degrees
  const double c = std::cos(0.5236), s = std::sin(0.5236);
  os << "  <path d=\"M " << num(x) << " " << num(y) << " L " << num(ex) << " " << num(ey) << " M " << num(ex) << " "
     << num(ey) << " l " << num(hx * c - hy * s) << " " << num(hx * s + hy * c) << " M " << num(ex) << " " << num(ey)
     << " l " << num(hx * c + hy * s) << " " << num(-hx * s + hy * c)
     << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.500\"/>\n";
}

}  // namespace

std::string render_scene_svg(const SceneU& scene) {
  if (!(scene.xmax > scene.xmin)) throw DomainError("scene viewport is empty");
  const double span = scene.xmax - scene.xmin;
  const double scale = (kWidth - 2 * kMargin) / span;

  // Tallest visible feature, clipped so that huge horospheres do not squash the picture.
  double top = 0.25 * span;
  for (const auto& h : scene.horospheres) {
    const double r = 0.5 * h.size();
    if (h.center().is_infinite())
      top = std::max(top, h.size());
    else if (std::abs(h.center().value().imag()) < r)
      top = std::max(top, 2 * r);
  }
  top = std::min(top * 1.1, 2 * span);
  const double height_px = top * scale + 2 * kMargin;
  const Viewport vp{scene.xmin, scale, height_px};

  std::ostringstream os;
  header(os, kWidth, height_px);
  os << "  <title>Horosphere cross-sections in the upper half space</title>\n";
  line(os, vp.sx(scene.xmin), vp.sy(0), vp.sx(scene.xmax), vp.sy(0), "black", 1.0);

  for (std::size_t i = 0; i < scene.horospheres.size(); ++i) {
    const auto& h = scene.horospheres[i];
    const Complex<double> u = h.delta() / std::abs(h.delta());
    const std::string label = i < scene.labels.size() ? scene.labels[i] : std::string();
    if (h.center().is_infinite()) {
      line(os, vp.sx(scene.xmin), vp.sy(h.size()), vp.sx(scene.xmax), vp.sy(h.size()), "#2c3e50", 1.0);
      const double mid = 0.5 * (scene.xmin + scene.xmax);
      arrow(os, vp.sx(mid), vp.sy(h.size()), u, 24);
      if (!label.empty()) text(os, vp.sx(scene.xmax) - 20, vp.sy(h.size()) - 6, 12, label);
      continue;
    }
    const Complex<double> z = h.center().value();
    const double r = 0.5 * h.size();
    if (std::abs(z.imag()) >= r) continue;  // misses the plane
    const double rc = std::sqrt(r * r - z.imag() * z.imag());
    circle(os, vp.sx(z.real()), vp.sy(r), rc * scale, "#2c3e50");
    if (z.imag() == 0.0) arrow(os, vp.sx(z.real()), vp.sy(2 * r), u, 24);
    if (!label.empty()) text(os, vp.sx(z.real()), vp.sy(0) + 16, 12, label);
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ford_svg(const std::vector<FordCircle>& circles) {
  const double scale = kWidth - 2 * kMargin;
  const double height_px = scale * 1.0 + 2 * kMargin + 20;
  const Viewport vp{0.0, scale, height_px - 20};

  std::ostringstream os;
  header(os, kWidth, height_px);
  os << "  <title>Ford circles and Farey fractions</title>\n";
  line(os, vp.sx(0), vp.sy(0), vp.sx(1), vp.sy(0), "black", 1.0);
  for (const auto& c : circles) {
    if (c.q() == 0) continue;
    const auto h = ford_circle<double>(c);
    const double x = h.center().value().real();
    const double r = 0.5 * h.size();
    circle(os, vp.sx(x), vp.sy(r), r * scale, "#2c3e50");
    line(os, vp.sx(x), vp.sy(0), vp.sx(x), vp.sy(0) + 5, "black", 1.0);
    const double size = std::max(4.0, 14.0 - 0.5 * static_cast<double>(c.q()));
    text(os, vp.sx(x), vp.sy(0) + 8 + size, size, std::to_string(c.p()) + "/" + std::to_string(c.q()));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace horo::io
