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

#include "jordangeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jordangeo/errors.hpp"

namespace jordangeo {

// --- GeodesicPath ----------------------------------------------------------

GeodesicPath::GeodesicPath(std::vector<Point> points) {
  if (points.empty()) throw InvalidParameter("GeodesicPath: empty point list");
  points_.reserve(points.size());
  for (const Point& p : points) {
    if (points_.empty() || !(points_.back() == p)) points_.push_back(p);
  }
  cum_.resize(points_.size());
  cum_[0] = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    cum_[i] = cum_[i - 1] + distance(points_[i - 1], points_[i]);
  }
}

Point GeodesicPath::point_at_arclength(double s) const {
  const double len = total_length();
  const double slack = 1e-12 * std::max(1.0, len);
  if (s < -slack || s > len + slack) {
    throw ArclengthOutOfRange("point_at_arclength: s out of [0, length]");
  }
  s = std::clamp(s, 0.0, len);
  if (points_.size() == 1) return points_[0];
  if (s <= 0.0) return points_.front();
  if (s >= len) return points_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cum_.begin());
  if (i >= cum_.size()) i = cum_.size() - 1;
  const std::size_t a = i - 1;
  const double seg = cum_[i] - cum_[a];
  if (seg <= 0.0) return points_[a];
  const double t = (s - cum_[a]) / seg;
  if (t <= 0.0) return points_[a];
  if (t >= 1.0) return points_[i];
  return points_[a] + (points_[i] - points_[a]) * t;
}

GeodesicPath GeodesicPath::reversed() const {
  std::vector<Point> pts(points_.rbegin(), points_.rend());
  return GeodesicPath(std::move(pts));
}

GeodesicPath GeodesicPath::slice(double s_begin, double s_end) const {
  if (s_end < s_begin) throw InvalidParameter("slice: s_end < s_begin");
  const Point first = point_at_arclength(s_begin);
  if (s_end == s_begin) return GeodesicPath({first});
  // Vertices within an ulp-scale band of a cut are replaced by the cut point
  // itself; otherwise reversed-order arclength sums leave phantom slivers.
  const double tol = 1e-12 * total_length();
  std::vector<Point> pts{first};
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (cum_[i] > s_begin + tol && cum_[i] < s_end - tol) pts.push_back(points_[i]);
  }
  pts.push_back(point_at_arclength(s_end));
  return GeodesicPath(std::move(pts));
}

Point point_at_arclength(const GeodesicPath& path, double s) {
  return path.point_at_arclength(s);
}

std::vector<Point> canonicalize_polyline(std::vector<Point> pts) {
  // Drop consecutive duplicates, exact or within ulp scale.
  double scale = 0.0;
  for (const Point& p : pts) {
    scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
  }
  const double dup_tol = 1e-13 * scale;
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (out.empty() || distance(out.back(), p) > dup_tol) out.push_back(p);
  }
  // Merge interior vertices with a vanishing turn until stable.
  bool changed = true;
  while (changed && out.size() > 2) {
    changed = false;
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      const Point u = out[i] - out[i - 1];
      const Point w = out[i + 1] - out[i];
      if (std::fabs(turning_angle(u, w)) <= kZeroTurnEps) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  return out;
}

// --- query preparation ------------------------------------------------------

Point prepare_query_point(const SimplePolygon& poly, const Point& p) {
  if (!is_finite(p)) throw PointOutsideDomain("query point is not finite");
  switch (poly.locate(p)) {
    case PointLocation::kInside:
      return p;
    case PointLocation::kBoundary:
      return poly.closest_boundary_point(p);
    case PointLocation::kOutside:
      throw PointOutsideDomain("query point outside the closed polygon");
  }
  throw InternalError("unreachable");
}

namespace {

// Triangle containing p, or the nearest one when the filtered predicates
// miss by a hair on the boundary.
int locate_with_fallback(const SimplePolygon& poly, const Triangulation& tri,
                         const Point& p) {
  const int t = tri.locate(poly, p);
  if (t >= 0) return t;
  const std::vector<Point>& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  int best_t = -1;
  for (int i = 0; i < tri.size(); ++i) {
    const auto& tr = tri.triangles()[i];
    for (int e = 0; e < 3; ++e) {
      const double d =
          point_segment_distance(p, v[tr[e]], v[tr[(e + 1) % 3]]);
      if (d < best) {
        best = d;
        best_t = i;
      }
    }
  }
  return best_t;
}

// Unique triangle path in the dual tree.
std::vector<int> sleeve(const Triangulation& tri, int from, int to) {
  std::vector<int> parent(tri.size(), -2);
  std::vector<int> stack{from};
  parent[from] = -1;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    if (cur == to) break;
    for (const auto& nb : tri.adjacency()[cur]) {
      if (parent[nb.tri] == -2) {
        parent[nb.tri] = cur;
        stack.push_back(nb.tri);
      }
    }
  }
  if (parent[to] == -2) throw InternalError("sleeve: dual graph disconnected");
  std::vector<int> path;
  for (int cur = to; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

struct Portal {
  Point left;
  Point right;
};

// Portal through the shared edge, oriented for travel out of triangle `t`.
// With CCW triangles, crossing the cyclic edge (a -> b) has a on the right.
Portal portal_for_step(const SimplePolygon& poly, const Triangulation& tri,
                       int t, int t_next) {
  for (const auto& nb : tri.adjacency()[t]) {
    if (nb.tri != t_next) continue;
    const auto& tr = tri.triangles()[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tr[k];
      const int b = tr[(k + 1) % 3];
      if ((a == nb.edge_u && b == nb.edge_v) ||
          (a == nb.edge_v && b == nb.edge_u)) {
        return {poly.vertices()[b], poly.vertices()[a]};
      }
    }
  }
  throw InternalError("portal_for_step: triangles not adjacent");
}

std::vector<Point> run_funnel(const std::vector<Portal>& portals,
                              const Point& p, const Point& q) {
  std::vector<Point> path{p};
  Point apex = p, left = p, right = p;
  int left_idx = -1, right_idx = -1;
  const int m = static_cast<int>(portals.size());
  for (int i = 0; i <= m; ++i) {
    const Point pl = (i < m) ? portals[i].left : q;
    const Point pr = (i < m) ? portals[i].right : q;

    if (orient(apex, pl, left) >= 0) {  // pl narrows the left boundary
      if (left == apex || right == apex || orient(apex, right, pl) > 0) {
        left = pl;
        left_idx = i;
      } else {  // crossed the right boundary: right becomes the apex
        path.push_back(right);
        apex = right;
        left = apex;
        left_idx = right_idx;
        i = right_idx;
        continue;
      }
    }
    if (orient(apex, right, pr) >= 0) {  // pr narrows the right boundary
      if (right == apex || left == apex || orient(apex, pr, left) > 0) {
        right = pr;
        right_idx = i;
      } else {
        path.push_back(left);
        apex = left;
        right = apex;
        right_idx = left_idx;
        i = left_idx;
        continue;
      }
    }
  }
  path.push_back(q);
  return path;
}

}  // namespace

GeodesicPath shortest_path(const SimplePolygon& poly, const Triangulation& tri,
                           const Point& p_in, const Point& q_in) {
  const Point p = prepare_query_point(poly, p_in);
  const Point q = prepare_query_point(poly, q_in);
  if (p == q) return GeodesicPath({p});

  const int ts = locate_with_fallback(poly, tri, p);
  const int tt = locate_with_fallback(poly, tri, q);
  if (ts < 0 || tt < 0) throw InternalError("shortest_path: location failed");
  if (ts == tt) return GeodesicPath({p, q});

  const std::vector<int> walk = sleeve(tri, ts, tt);
  std::vector<Portal> portals;
  portals.reserve(walk.size() - 1);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    portals.push_back(portal_for_step(poly, tri, walk[i], walk[i + 1]));
  }
  return GeodesicPath(canonicalize_polyline(run_funnel(portals, p, q)));
}

// --- taut validation --------------------------------------------------------

namespace {

// CCW angle from direction `base` to `d`, in [0, 2*pi).
double ccw_angle_from(const Point& base, const Point& d) {
  const double a = std::atan2(cross(base, d), dot(base, d));
  return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace

TautReport validate_taut(const SimplePolygon& poly, const GeodesicPath& path) {
  TautReport report;
  const std::vector<Point> pts = canonicalize_polyline(path.points());
  const double eps = poly.boundary_eps();
  constexpr double kAngTol = 1e-9;

  for (int k = 1; k + 1 < static_cast<int>(pts.size()); ++k) {
    const Point& x = pts[k];
    int vi = -1;
    for (int i = 0; i < poly.size(); ++i) {
      if (distance(poly.vertex(i), x) <= eps) {
        vi = i;
        break;
      }
    }
    if (vi < 0) {
      report.violations.push_back({k, "bend at a non-vertex point"});
      continue;
    }
    if (!poly.is_reflex(vi)) {
      report.violations.push_back({k, "bend at a non-reflex vertex"});
      continue;
    }
    // Domain wedge at the vertex, swept CCW from the outgoing boundary edge
    // to the incoming one; both path branches must fit in it and span >= pi.
    const Point g1 = poly.vertex(vi + 1) - poly.vertex(vi);
    const Point g0 = poly.vertex(vi - 1) - poly.vertex(vi);
    const double theta = ccw_angle_from(g1, g0);
    const Point b1 = pts[k - 1] - x;
    const Point b2 = pts[k + 1] - x;
    const double a1 = ccw_angle_from(g1, b1);
    const double a2 = ccw_angle_from(g1, b2);
    if (a1 > theta + kAngTol || a2 > theta + kAngTol) {
      report.violations.push_back({k, "branch leaves the domain wedge"});
      continue;
    }
    if (std::fabs(a2 - a1) < std::numbers::pi - kAngTol) {
      report.violations.push_back({k, "branch angle below pi (shortcut exists)"});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

// --- chords and separation --------------------------------------------------

namespace {

// Crossing-number test against a raw closed loop, with an eps-thick boundary.
bool point_in_loop(const std::vector<Point>& loop, const Point& p, double eps) {
  const int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    if (point_segment_distance(p, loop[i], loop[(i + 1) % n]) <= eps) {
      return true;
    }
  }
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside;
}

// Cyclic boundary position of a point as edge index plus edge parameter.
double boundary_position(const SimplePolygon& poly, const Point& p) {
  int edge = 0;
  double t = 0.0;
  const Point c = poly.closest_boundary_point(p, &edge, &t);
  if (distance(c, p) > poly.boundary_eps()) {
    throw InvalidChord("chord endpoint is not on the boundary");
  }
  return edge + std::clamp(t, 0.0, 1.0);
}

// The component of J minus the chord bounded by the CCW arc from a to b.
std::vector<Point> arc_side_loop(const SimplePolygon& poly, const Chord& chord) {
  const double pos_a = boundary_position(poly, chord.a);
  const double pos_b = boundary_position(poly, chord.b);
  const int n = poly.size();
  std::vector<Point> loop{chord.a};
  // Walk vertex positions strictly inside the cyclic interval (pos_a, pos_b).
  double span = pos_b - pos_a;
  if (span <= 0.0) span += n;
  for (int step = 1; step <= n; ++step) {
    const int v = (static_cast<int>(std::floor(pos_a)) + step) % n;
    double rel = v - pos_a;
    if (rel <= 0.0) rel += n;
    if (rel >= span) break;
    if (!(loop.back() == poly.vertex(v))) loop.push_back(poly.vertex(v));
  }
  if (!(loop.back() == chord.b)) loop.push_back(chord.b);
  return loop;
}

}  // namespace

ChordSide side_of_chord(const SimplePolygon& poly, const Chord& chord,
                        const Point& x) {
  const double eps = poly.boundary_eps();
  if (point_segment_distance(x, chord.a, chord.b) <= eps) return ChordSide::kOn;
  const std::vector<Point> loop_a = arc_side_loop(poly, chord);
  if (loop_a.size() >= 3 && point_in_loop(loop_a, x, eps)) return ChordSide::kA;
  return ChordSide::kB;
}

SeparationReport check_separation(const SimplePolygon& poly,
                                  const GeodesicPath& path,
                                  const std::vector<Chord>& chords) {
  for (const Chord& c : chords) {
    if (!is_chord(poly, Segment{c.a, c.b})) {
      throw InvalidChord("check_separation: supplied segment is not a chord");
    }
  }
  // Sample polyline vertices, segment midpoints, and 17 uniform parameters.
  std::vector<Point> samples = path.points();
  for (std::size_t i = 0; i + 1 < path.points().size(); ++i) {
    samples.push_back((path.points()[i] + path.points()[i + 1]) * 0.5);
  }
  for (int j = 0; j <= 16; ++j) {
    samples.push_back(path.point_at_arclength(path.total_length() * j / 16.0));
  }

  SeparationReport report;
  report.chords_checked = static_cast<int>(chords.size());
  report.points_checked = static_cast<int>(samples.size());
  for (const Chord& c : chords) {
    const ChordSide sa = side_of_chord(poly, c, path.source());
    const ChordSide sb = side_of_chord(poly, c, path.target());
    if (sa != sb || sa == ChordSide::kOn) continue;
    for (const Point& x : samples) {
      const ChordSide sx = side_of_chord(poly, c, x);
      if (sx != ChordSide::kOn && sx != sa) {
        report.counterexamples.push_back({c, x});
      }
    }
  }
  report.ok = report.counterexamples.empty();
  return report;
}

namespace {

// First boundary hit of the ray from `origin` along `dir`, excluding hits at
// the origin itself.
std::optional<Point> cast_ray(const SimplePolygon& poly, const Point& origin,
                              const Point& dir) {
  const double eps_t = 1e-9;
  double best_t = std::numeric_limits<double>::infinity();
  Point best_pt;
  for (int i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    const Point e = b - a;
    const double denom = cross(dir, e);
    if (denom == 0.0) continue;
    const double t = cross(a - origin, e) / denom;
    const double u = cross(a - origin, dir) / denom;
    if (t > eps_t && u >= -1e-12 && u <= 1.0 + 1e-12 && t < best_t) {
      best_t = t;
      best_pt = origin + dir * t;
    }
  }
  if (!std::isfinite(best_t)) return std::nullopt;
  return best_pt;
}

}  // namespace

std::vector<Chord> sample_chords(const SimplePolygon& poly, int cap) {
  std::vector<Chord> chords;
  const int n = poly.size();
  for (int i = 0; i < n && static_cast<int>(chords.size()) < cap; ++i) {
    for (int j = i + 1; j < n && static_cast<int>(chords.size()) < cap; ++j) {
      const Segment s{poly.vertex(i), poly.vertex(j)};
      if (is_chord(poly, s)) chords.push_back({s.a, s.b});
    }
  }
  // Window chords: extend each edge at a reflex vertex through the interior.
  for (int i = 0; i < n; ++i) {
    if (!poly.is_reflex(i)) continue;
    const Point v = poly.vertex(i);
    for (const Point& from : {poly.vertex(i - 1), poly.vertex(i + 1)}) {
      const Point dir = v - from;
      if (const auto hit = cast_ray(poly, v, dir)) {
        const Segment s{v, *hit};
        if (is_chord(poly, s)) chords.push_back({s.a, s.b});
      }
    }
  }
  return chords;
}

std::optional<Chord> find_separating_chord(const SimplePolygon& poly,
                                           const Point& x, const Point& a,
                                           const Point& b, int cap) {
  for (const Chord& c : sample_chords(poly, cap)) {
    const ChordSide sa = side_of_chord(poly, c, a);
    const ChordSide sb = side_of_chord(poly, c, b);
    if (sa != sb || sa == ChordSide::kOn) continue;
    const ChordSide sx = side_of_chord(poly, c, x);
    if (sx != ChordSide::kOn && sx != sa) return c;
  }
  return std::nullopt;
}

}  // namespace jordangeo
