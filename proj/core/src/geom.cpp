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

#include "jordangeo/geom.hpp"

#include <algorithm>
#include <numbers>

#include "jordangeo/errors.hpp"

namespace jordangeo {

int orient(const Point& a, const Point& b, const Point& c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double mag =
      std::max({std::fabs(a.x), std::fabs(a.y), std::fabs(b.x), std::fabs(b.y),
                std::fabs(c.x), std::fabs(c.y)});
  const double bound = kOrientEps * mag * mag;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

double turning_angle(const Point& incoming, const Point& outgoing) {
  if ((incoming.x == 0.0 && incoming.y == 0.0) ||
      (outgoing.x == 0.0 && outgoing.y == 0.0)) {
    throw InvalidParameter("turning_angle: zero-length direction");
  }
  double angle = std::atan2(cross(incoming, outgoing), dot(incoming, outgoing));
  if (angle == -std::numbers::pi) angle = std::numbers::pi;  // pin range to (-pi, pi]
  return angle;
}

bool segments_properly_intersect(const Segment& s1, const Segment& s2) {
  const int d1 = orient(s2.a, s2.b, s1.a);
  const int d2 = orient(s2.a, s2.b, s1.b);
  const int d3 = orient(s1.a, s1.b, s2.a);
  const int d4 = orient(s1.a, s1.b, s2.b);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) - 1e-15 <= p.x && p.x <= std::max(a.x, b.x) + 1e-15 &&
         std::min(a.y, b.y) - 1e-15 <= p.y && p.y <= std::max(a.y, b.y) + 1e-15;
}

bool segments_touch(const Segment& s1, const Segment& s2) {
  if (segments_properly_intersect(s1, s2)) return true;
  return point_on_segment(s1.a, s2.a, s2.b) || point_on_segment(s1.b, s2.a, s2.b) ||
         point_on_segment(s2.a, s1.a, s1.b) || point_on_segment(s2.b, s1.a, s1.b);
}

Point closest_point_on_segment(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len_sq = norm_sq(d);
  if (len_sq == 0.0) return a;
  double t = dot(p - a, d) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return a + d * t;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  return distance(p, closest_point_on_segment(p, a, b));
}

}  // namespace jordangeo
