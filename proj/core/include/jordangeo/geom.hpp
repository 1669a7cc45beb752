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

#ifndef JORDANGEO_GEOM_HPP_
#define JORDANGEO_GEOM_HPP_

#include <cmath>

namespace jordangeo {

// Orientation of the plane is fixed counterclockwise throughout; all angles
// are in radians.

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Point& a, double s) { return {a.x * s, a.y * s}; }
  friend Point operator*(double s, const Point& a) { return a * s; }
};

struct Segment {
  Point a;
  Point b;
};

inline double dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline double cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline double norm(const Point& u) { return std::hypot(u.x, u.y); }
inline double norm_sq(const Point& u) { return u.x * u.x + u.y * u.y; }
inline double distance(const Point& a, const Point& b) { return norm(b - a); }
inline double distance_sq(const Point& a, const Point& b) { return norm_sq(b - a); }

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

// Relative error-bound factor for the orientation filter: determinants whose
// magnitude does not exceed kOrientEps * max(|coord|)^2 are snapped to zero.
// The double-precision evaluation of the 2x2 determinant is accurate to a few
// ulps of max(|coord|)^2 (~1e-16), so 1e-12 leaves a wide safety margin while
// still resolving every non-degenerate configuration the suites produce.
inline constexpr double kOrientEps = 1e-12;

// Sign of the signed area of triangle abc: +1 counterclockwise, -1 clockwise,
// 0 when the determinant falls below the error bound.
int orient(const Point& a, const Point& b, const Point& c);

// Signed exterior angle from direction `incoming` to direction `outgoing`,
// in (-pi, pi]. Throws InvalidParameter on a zero direction.
double turning_angle(const Point& incoming, const Point& outgoing);

// True iff the open interiors of the two segments cross. Endpoint contact and
// collinear overlap do not count.
bool segments_properly_intersect(const Segment& s1, const Segment& s2);

// True iff p lies on the closed segment ab (orientation-filtered).
bool point_on_segment(const Point& p, const Point& a, const Point& b);

// True iff the closed segments share at least one point.
bool segments_touch(const Segment& s1, const Segment& s2);

// Euclidean distance from p to the closed segment ab.
double point_segment_distance(const Point& p, const Point& a, const Point& b);

// Closest point of the closed segment ab to p.
Point closest_point_on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace jordangeo

#endif  // JORDANGEO_GEOM_HPP_
