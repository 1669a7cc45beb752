// Copyright 2026 The jordangeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jordangeo/svg.hpp"

#include <cstdio>

namespace jordangeo {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const SimplePolygon& poly) {
    const Point lo = poly.bbox_min();
    const Point hi = poly.bbox_max();
    const double margin = 0.05 * std::max(hi.x - lo.x, hi.y - lo.y);
    min_x_ = lo.x - margin;
    width_ = (hi.x - lo.x) + 2 * margin;
    min_y_ = lo.y - margin;
    height_ = (hi.y - lo.y) + 2 * margin;
    stroke_ = 0.005 * std::max(width_, height_);
  }

  std::string header() const {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += fmt(min_x_) + " " + fmt(min_y_) + " " + fmt(width_) + " " + fmt(height_);
    s += "\" width=\"640\" height=\"" + fmt(640.0 * height_ / width_) + "\">\n";
    return s;
  }

  std::string polyline(const std::vector<Point>& pts, const std::string& color,
                       double width_scale, bool closed,
                       const std::string& fill = "none",
                       bool dashed = false) const {
    std::string s = closed ? "<polygon points=\"" : "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += " ";
      s += fmt(pts[i].x) + "," + fmt(flip(pts[i].y));
    }
    s += "\" fill=\"" + fill + "\" stroke=\"" + color + "\" stroke-width=\"" +
         fmt(stroke_ * width_scale) + "\"";
    if (dashed) s += " stroke-dasharray=\"" + fmt(stroke_ * 3) + "\"";
    s += " stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
    return s;
  }

  std::string circle(const Point& c, double r, const std::string& color,
                     bool filled) const {
    std::string s = "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(flip(c.y)) +
                    "\" r=\"" + fmt(r) + "\" ";
    if (filled) {
      s += "fill=\"" + color + "\" stroke=\"none\"";
    } else {
      s += "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           fmt(stroke_) + "\" stroke-dasharray=\"" + fmt(stroke_ * 2) + "\"";
    }
    s += "/>\n";
    return s;
  }

  double marker_radius() const { return stroke_ * 2.5; }

 private:
  double flip(double y) const { return 2 * min_y_ + height_ - y; }

  double min_x_, min_y_, width_, height_, stroke_;
};

}  // namespace

std::string render_svg(const SvgScene& scene) {
  const Canvas canvas(scene.polygon);
  std::string svg = canvas.header();
  svg += canvas.polyline(scene.polygon.vertices(), "#333333", 1.0, true,
                         "#f5f2ea");

  for (const GeodesicPath& g : scene.geodesics) {
    svg += canvas.polyline(g.points(), "#1f5fa8", 1.2, false);
  }
  if (scene.triangle) {
    const JordanTriangle& t = *scene.triangle;
    for (const GeodesicPath& side : t.sides) {
      svg += canvas.polyline(side.points(), "#1f5fa8", 1.0, false);
    }
    if (!t.degenerate) {
      for (const GeodesicPath& core : t.core_sides) {
        svg += canvas.polyline(core.points(), "#c22e2e", 1.6, false);
      }
      for (const Point& b : t.bifurcation_points) {
        svg += canvas.circle(b, canvas.marker_radius(), "#c22e2e", true);
      }
    }
    for (const Point& v : t.outer_vertices) {
      svg += canvas.circle(v, canvas.marker_radius(), "#1f5fa8", true);
    }
  }
  for (const SvgCircle& c : scene.circles) {
    svg += canvas.circle(c.center, c.radius, c.color, false);
  }
  for (const Point& m : scene.markers) {
    svg += canvas.circle(m, canvas.marker_radius(), "#2c8a4b", true);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace jordangeo
