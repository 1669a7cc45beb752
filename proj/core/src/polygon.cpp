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

#include "jordangeo/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <utility>

#include "jordangeo/errors.hpp"
#include "jordangeo/rng.hpp"

namespace jordangeo {

namespace {

double shoelace_area(const std::vector<Point>& v) {
  double a = 0.0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % n];
    a += cross(p, q);
  }
  return 0.5 * a;
}

}  // namespace

// --- SimplePolygon -------------------------------------------------------

void SimplePolygon::finish() {
  const int n = static_cast<int>(vertices_.size());
  reflex_.assign(n, false);
  for (int i = 0; i < n; ++i) {
    reflex_[i] = orient(vertex(i - 1), vertex(i), vertex(i + 1)) < 0;
  }
  area_ = shoelace_area(vertices_);
  diameter_ = diameter_brute_force(vertices_);
  bbox_min_ = bbox_max_ = vertices_[0];
  for (const Point& p : vertices_) {
    bbox_min_.x = std::min(bbox_min_.x, p.x);
    bbox_min_.y = std::min(bbox_min_.y, p.y);
    bbox_max_.x = std::max(bbox_max_.x, p.x);
    bbox_max_.y = std::max(bbox_max_.y, p.y);
  }
}

Point SimplePolygon::closest_boundary_point(const Point& p, int* edge,
                                            double* t) const {
  const int n = size();
  double best = std::numeric_limits<double>::infinity();
  Point best_pt = vertices_[0];
  int best_edge = 0;
  for (int i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point c = closest_point_on_segment(p, a, b);
    const double d = distance_sq(p, c);
    if (d < best) {
      best = d;
      best_pt = c;
      best_edge = i;
    }
  }
  if (edge) *edge = best_edge;
  if (t) {
    const Point& a = vertices_[best_edge];
    const Point& b = vertices_[(best_edge + 1) % n];
    const double len_sq = distance_sq(a, b);
    *t = len_sq > 0.0 ? dot(best_pt - a, b - a) / len_sq : 0.0;
  }
  return best_pt;
}

PointLocation SimplePolygon::locate(const Point& p) const {
  const double eps = boundary_eps();
  if (p.x < bbox_min_.x - eps || p.x > bbox_max_.x + eps ||
      p.y < bbox_min_.y - eps || p.y > bbox_max_.y + eps) {
    return PointLocation::kOutside;
  }
  const Point c = closest_boundary_point(p);
  if (distance(p, c) <= eps) return PointLocation::kBoundary;

  // Crossing number with the half-open rule, so edges through vertices are
  // counted once.
  bool inside = false;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_int) inside = !inside;
    }
  }
  return inside ? PointLocation::kInside : PointLocation::kOutside;
}

// --- validate ------------------------------------------------------------

SimplePolygon validate(const std::vector<Point>& raw_vertices,
                       bool keep_collinear) {
  if (raw_vertices.size() < 3) {
    throw DegenerateInput("validate: need at least 3 vertices");
  }
  for (const Point& p : raw_vertices) {
    if (!is_finite(p)) throw DegenerateInput("validate: non-finite coordinate");
  }

  // Drop exact consecutive duplicates (the closing duplicate included).
  std::vector<Point> v;
  v.reserve(raw_vertices.size());
  for (const Point& p : raw_vertices) {
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw DegenerateInput("validate: fewer than 3 distinct vertices");

  const double area = shoelace_area(v);
  if (area < 0.0) std::reverse(v.begin(), v.end());

  if (!keep_collinear && area != 0.0) {
    // Strip midpoints of forward-collinear runs; spikes are left in place so
    // the simplicity check can report them.
    bool changed = true;
    while (changed && v.size() > 3) {
      changed = false;
      for (int i = 0; i < static_cast<int>(v.size()) && v.size() > 3; ++i) {
        const int n = static_cast<int>(v.size());
        const Point& a = v[(i + n - 1) % n];
        const Point& b = v[i];
        const Point& c = v[(i + 1) % n];
        if (orient(a, b, c) == 0 && dot(b - a, c - b) > 0.0) {
          v.erase(v.begin() + i);
          changed = true;
          --i;
        }
      }
    }
  }
  if (v.size() < 3) throw DegenerateInput("validate: degenerate after normalization");

  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Segment ei{v[i], v[(i + 1) % n]};
    for (int j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint only; a spike folds one edge back along the other.
        const Point& shared = (j == i + 1) ? v[j] : v[0];
        const Point& ai = (j == i + 1) ? v[i] : v[1];
        const Point& bj = (j == i + 1) ? v[(j + 1) % n] : v[n - 1];
        if (orient(ai, shared, bj) == 0 && dot(ai - shared, bj - shared) > 0.0) {
          throw SimplicityViolation("validate: spike at shared vertex", i, j);
        }
        continue;
      }
      const Segment ej{v[j], v[(j + 1) % n]};
      if (segments_touch(ei, ej)) {
        throw SimplicityViolation("validate: non-adjacent edges intersect", i, j);
      }
    }
  }
  // A simple loop always bounds area; a flat one would have tripped the scan.
  if (area == 0.0) throw DegenerateInput("validate: zero signed area");

  SimplePolygon poly;
  poly.vertices_ = std::move(v);
  poly.finish();
  return poly;
}

// --- diameter ------------------------------------------------------------

double diameter_brute_force(const std::vector<Point>& vertices) {
  double best = 0.0;
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      best = std::max(best, distance_sq(vertices[i], vertices[j]));
    }
  }
  return std::sqrt(best);
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int n = static_cast<int>(points.size());
  if (n < 3) return points;
  std::vector<Point> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper chain
    while (k >= lower && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double diameter_rotating_calipers(const std::vector<Point>& vertices) {
  const std::vector<Point> hull = convex_hull(vertices);
  const int h = static_cast<int>(hull.size());
  if (h == 1) return 0.0;
  if (h == 2) return distance(hull[0], hull[1]);
  auto area2 = [&](int i, int j, int k) {
    return std::fabs(cross(hull[j] - hull[i], hull[k] - hull[i]));
  };
  double best = 0.0;
  int j = 1;
  for (int i = 0; i < h; ++i) {
    const int ni = (i + 1) % h;
    while (area2(i, ni, (j + 1) % h) > area2(i, ni, j)) j = (j + 1) % h;
    best = std::max({best, distance_sq(hull[i], hull[j]),
                     distance_sq(hull[ni], hull[j])});
  }
  return std::sqrt(best);
}

// --- triangulation -------------------------------------------------------

namespace {

// Closed containment in the CCW triangle abc.
bool point_in_or_on_triangle(const Point& p, const Point& a, const Point& b,
                             const Point& c) {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

}  // namespace

Triangulation triangulate(const SimplePolygon& poly) {
  const std::vector<Point>& v = poly.vertices();
  const int n = poly.size();

  // Active loop over vertices with a genuine corner; straight vertices of
  // retained collinear chains do not change the region.
  std::vector<int> active;
  active.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (orient(poly.vertex(i - 1), v[i], poly.vertex(i + 1)) != 0) {
      active.push_back(i);
    }
  }
  if (active.size() < 3) throw InternalError("triangulate: no corners");

  std::vector<int> next(n, -1), prev(n, -1);
  const int m = static_cast<int>(active.size());
  for (int k = 0; k < m; ++k) {
    next[active[k]] = active[(k + 1) % m];
    prev[active[k]] = active[(k + m - 1) % m];
  }

  auto is_ear = [&](int i) {
    const int p = prev[i], q = next[i];
    if (orient(v[p], v[i], v[q]) <= 0) return false;
    for (int w = next[q]; w != p; w = next[w]) {
      if (point_in_or_on_triangle(v[w], v[p], v[i], v[q])) return false;
    }
    return true;
  };

  Triangulation tri;
  tri.tris_.reserve(m - 2);
  int remaining = m;
  int cursor = active[0];
  int since_clip = 0;
  while (remaining > 3) {
    if (is_ear(cursor)) {
      tri.tris_.push_back({prev[cursor], cursor, next[cursor]});
      const int p = prev[cursor], q = next[cursor];
      next[p] = q;
      prev[q] = p;
      cursor = p;
      --remaining;
      since_clip = 0;
    } else {
      cursor = next[cursor];
      if (++since_clip > remaining) {
        throw InternalError("triangulate: no ear found");
      }
    }
  }
  tri.tris_.push_back({prev[cursor], cursor, next[cursor]});

  // Shared-edge adjacency.
  tri.adj_.assign(tri.tris_.size(), {});
  std::map<std::pair<int, int>, int> edge_owner;
  for (int t = 0; t < static_cast<int>(tri.tris_.size()); ++t) {
    for (int e = 0; e < 3; ++e) {
      const int a = tri.tris_[t][e];
      const int b = tri.tris_[t][(e + 1) % 3];
      const auto key = std::minmax(a, b);
      auto it = edge_owner.find(key);
      if (it == edge_owner.end()) {
        edge_owner.emplace(key, t);
      } else {
        tri.adj_[t].push_back({it->second, a, b});
        tri.adj_[it->second].push_back({t, a, b});
      }
    }
  }
  return tri;
}

int Triangulation::locate(const SimplePolygon& poly, const Point& p) const {
  const std::vector<Point>& v = poly.vertices();
  for (int t = 0; t < size(); ++t) {
    if (point_in_or_on_triangle(p, v[tris_[t][0]], v[tris_[t][1]],
                                v[tris_[t][2]])) {
      return t;
    }
  }
  return -1;
}

double Triangulation::total_area(const SimplePolygon& poly) const {
  const std::vector<Point>& v = poly.vertices();
  double sum = 0.0;
  for (const auto& t : tris_) {
    sum += 0.5 * cross(v[t[1]] - v[t[0]], v[t[2]] - v[t[0]]);
  }
  return sum;
}

bool Triangulation::dual_is_tree() const {
  const int t = size();
  int shared_edges = 0;
  for (const auto& nbrs : adj_) shared_edges += static_cast<int>(nbrs.size());
  shared_edges /= 2;
  if (shared_edges != t - 1) return false;
  std::vector<bool> seen(t, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    const int cur = stack.back();
    stack.pop_back();
    ++count;
    for (const Neighbor& nb : adj_[cur]) {
      if (!seen[nb.tri]) {
        seen[nb.tri] = true;
        stack.push_back(nb.tri);
      }
    }
  }
  return count == t;
}

// --- chords ---------------------------------------------------------------

bool is_chord(const SimplePolygon& poly, const Segment& s) {
  const double eps = poly.boundary_eps();
  if (distance(s.a, s.b) <= eps) return false;
  if (poly.locate(s.a) != PointLocation::kBoundary ||
      poly.locate(s.b) != PointLocation::kBoundary) {
    return false;
  }
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Segment edge{poly.vertex(i), poly.vertex(i + 1)};
    if (segments_properly_intersect(s, edge)) return false;
  }
  for (int i = 0; i < n; ++i) {
    const Point& w = poly.vertex(i);
    if (point_on_segment(w, s.a, s.b) && distance(w, s.a) > eps &&
        distance(w, s.b) > eps) {
      return false;  // passes through a vertex
    }
  }
  // No crossings and no interior vertex contact: the open segment lies on one
  // side of the boundary, so its midpoint decides.
  const Point mid = (s.a + s.b) * 0.5;
  return poly.locate(mid) == PointLocation::kInside;
}

// --- generators ------------------------------------------------------------

SimplePolygon make_square() {
  return validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

SimplePolygon make_l_shape() {
  return validate({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

SimplePolygon make_equilateral(double side) {
  if (!(side > 0.0)) throw InvalidParameter("equilateral: side must be > 0");
  return validate({{0, 0}, {side, 0}, {side / 2, side * std::numbers::sqrt3 / 2}});
}

SimplePolygon make_comb(int teeth) {
  if (teeth < 1) throw InvalidParameter("comb: teeth must be >= 1");
  const double w = 2.0 * teeth - 1.0;
  std::vector<Point> v;
  v.push_back({0, 0});
  v.push_back({w, 0});
  // Top profile right to left: tooth tops at height 3, gaps at height 1.
  for (int i = teeth - 1; i >= 0; --i) {
    const double r = 2.0 * i + 1.0;
    const double l = 2.0 * i;
    v.push_back({r, 3});
    v.push_back({l, 3});
    if (i > 0) {
      v.push_back({l, 1});
      v.push_back({l - 1.0, 1});
    }
  }
  return validate(v);
}

namespace {

// Boundary of a union of unit grid cells, as a CCW vertex loop. The cell set
// must be edge-connected with no diagonal-only contacts.
std::vector<Point> trace_cell_boundary(const std::set<std::pair<int, int>>& cells) {
  auto has = [&](int x, int y) { return cells.count({x, y}) > 0; };
  // Directed boundary edges keyed by start corner, interior kept on the left.
  std::map<std::pair<int, int>, std::pair<int, int>> edge_out;
  for (const auto& [x, y] : cells) {
    if (!has(x, y - 1)) edge_out[{x, y}] = {x + 1, y};
    if (!has(x + 1, y)) edge_out[{x + 1, y}] = {x + 1, y + 1};
    if (!has(x, y + 1)) edge_out[{x + 1, y + 1}] = {x, y + 1};
    if (!has(x - 1, y)) edge_out[{x, y + 1}] = {x, y};
  }
  std::vector<std::pair<int, int>> loop;
  auto start = edge_out.begin()->first;
  auto cur = start;
  do {
    loop.push_back(cur);
    auto it = edge_out.find(cur);
    if (it == edge_out.end()) throw InternalError("trace_cell_boundary: open chain");
    cur = it->second;
  } while (cur != start && loop.size() <= 4 * edge_out.size());
  if (cur != start) throw InternalError("trace_cell_boundary: unterminated loop");

  // Collapse straight runs.
  std::vector<Point> v;
  const int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    const auto& a = loop[(i + n - 1) % n];
    const auto& b = loop[i];
    const auto& c = loop[(i + 1) % n];
    const bool straight = (a.first == b.first && b.first == c.first) ||
                          (a.second == b.second && b.second == c.second);
    if (!straight) {
      v.push_back({static_cast<double>(b.first), static_cast<double>(b.second)});
    }
  }
  return v;
}

}  // namespace

SimplePolygon make_spiral(int turns) {
  if (turns < 1) throw InvalidParameter("spiral: turns must be >= 1");
  const int n = 4 * turns + 3;
  std::set<std::pair<int, int>> cells;
  int x = 0, y = 0;
  cells.insert({x, y});
  auto walk = [&](int dx, int dy, int len) {
    for (int s = 0; s < len; ++s) {
      x += dx;
      y += dy;
      cells.insert({x, y});
    }
  };
  // Segment lengths n-1, n-1, n-1, then pairs decreasing by 2, directions
  // cycling right, up, left, down. Passes stay two cells apart, so the
  // corridor keeps a one-cell wall everywhere.
  static constexpr int kDx[4] = {1, 0, -1, 0};
  static constexpr int kDy[4] = {0, 1, 0, -1};
  std::vector<int> lengths{n - 1, n - 1, n - 1};
  for (int len = n - 3; len > 0; len -= 2) {
    lengths.push_back(len);
    lengths.push_back(len);
  }
  for (int k = 0; k < static_cast<int>(lengths.size()); ++k) {
    walk(kDx[k % 4], kDy[k % 4], lengths[k]);
  }
  return validate(trace_cell_boundary(cells));
}

namespace {

void koch_subdivide(std::vector<Point>& out, const Point& a, const Point& b,
                    int level) {
  if (level == 0) {
    out.push_back(a);
    return;
  }
  const Point d = b - a;
  const Point p1 = a + d * (1.0 / 3.0);
  const Point p2 = a + d * (2.0 / 3.0);
  // Outward bump: right of the travel direction for a CCW loop.
  const Point apex = (a + b) * 0.5 +
                     Point{d.y, -d.x} * (std::numbers::sqrt3 / 6.0);
  koch_subdivide(out, a, p1, level - 1);
  koch_subdivide(out, p1, apex, level - 1);
  koch_subdivide(out, apex, p2, level - 1);
  koch_subdivide(out, p2, b, level - 1);
}

}  // namespace

SimplePolygon make_koch_prefix(int level, double side) {
  if (level < 0) throw InvalidParameter("koch_prefix: level must be >= 0");
  if (!(side > 0.0)) throw InvalidParameter("koch_prefix: side must be > 0");
  const std::vector<Point> base{
      {0, 0}, {side, 0}, {side / 2, side * std::numbers::sqrt3 / 2}};
  std::vector<Point> v;
  for (int i = 0; i < 3; ++i) {
    koch_subdivide(v, base[i], base[(i + 1) % 3], level);
  }
  return validate(v);
}

Point random_interior_point(const SimplePolygon& poly, Rng& rng) {
  const Point lo = poly.bbox_min();
  const Point hi = poly.bbox_max();
  for (int i = 0; i < 1000000; ++i) {
    const Point p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (poly.locate(p) == PointLocation::kInside) return p;
  }
  throw InternalError("random_interior_point: rejection sampling failed");
}

SimplePolygon make_random_simple(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidParameter("random_simple: n must be >= 3");
  Rng master(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Rng rng(attempt == 0 ? seed : master.fork());
    std::vector<Point> v(n);
    for (Point& p : v) p = {rng.uniform(), rng.uniform()};

    // 2-opt untangling: reversing the arc between two touching edges removes
    // the crossing and strictly shortens the loop.
    bool clean = false;
    for (int pass = 0; pass < 4 * n * n && !clean; ++pass) {
      clean = true;
      for (int i = 0; i < n && clean; ++i) {
        for (int j = i + 1; j < n && clean; ++j) {
          const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
          if (adjacent) continue;
          const Segment ei{v[i], v[(i + 1) % n]};
          const Segment ej{v[j], v[(j + 1) % n]};
          if (segments_touch(ei, ej)) {
            std::reverse(v.begin() + i + 1, v.begin() + j + 1);
            clean = false;
          }
        }
      }
    }
    if (!clean) continue;
    try {
      return validate(v);
    } catch (const Error&) {
      continue;  // rare degeneracy; retry with a forked seed
    }
  }
  throw InternalError("random_simple: failed to build a simple polygon");
}

}  // namespace jordangeo
