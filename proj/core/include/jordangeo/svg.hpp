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

#ifndef JORDANGEO_SVG_HPP_
#define JORDANGEO_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jordangeo/asymptotics.hpp"
#include "jordangeo/cat0.hpp"
#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"

namespace jordangeo {

struct SvgCircle {
  Point center;
  double radius = 0.0;
  std::string color = "#7b2d8b";
};

// Figure scene: the domain plus optional geodesics, a decomposed triangle
// with its bifurcation points, and cone/disk circles.
struct SvgScene {
  SimplePolygon polygon;
  std::vector<GeodesicPath> geodesics;
  std::optional<JordanTriangle> triangle;
  std::vector<SvgCircle> circles;
  std::vector<Point> markers;
};

// Deterministic standalone SVG; the viewBox is the polygon bounding box with
// a 5% margin, y-axis flipped to the usual math orientation.
std::string render_svg(const SvgScene& scene);

}  // namespace jordangeo

#endif  // JORDANGEO_SVG_HPP_
