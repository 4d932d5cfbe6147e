#pragma once

#include <string>
#include <vector>

#include "horo/horo.hpp"

namespace horo::io {

/// Horospheres to draw in the vertical half-plane Im z = 0 of upper half space.
struct SceneU {
  std::vector<DecoratedHorosphere<double>> horospheres;
  std::vector<std::string> labels;  // optional, matched by index
  double xmin = -2.0;
  double xmax = 2.0;
};

/// Cross-section of each horosphere with the plane Im z = 0: a circle for a
/// finite centre, a horizontal line for ∞, plus an arrow for the decoration
/// at the north pole. The out-of-plane part of a decoration is drawn
/// obliquely (45 degrees, half length). Throws DomainError on an empty viewport.
std::string render_scene_svg(const SceneU& scene);

/// Ford circles over [0, 1] with the real axis and p/q tick labels.
std::string render_ford_svg(const std::vector<FordCircle>& circles);

}  // namespace horo::io
