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

#ifndef JORDANGEO_POLYGON_HPP_
#define JORDANGEO_POLYGON_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jordangeo/geom.hpp"

namespace jordangeo {

// Relative tolerance for "on the boundary" queries: a point counts as lying
// on the boundary when within kBoundaryEpsFactor * diameter of some edge.
inline constexpr double kBoundaryEpsFactor = 1e-9;

enum class PointLocation { kInside, kBoundary, kOutside };

// Closed CCW vertex loop modeling the Jordan domain. Immutable after
// construction; build through validate() or a generator.
class SimplePolygon {
 public:
  SimplePolygon() = default;

  const std::vector<Point>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Point& vertex(int i) const { return vertices_[wrap(i)]; }

  // Euclidean diameter, attained at a vertex pair.
  double diameter() const { return diameter_; }
  double area() const { return area_; }
  double boundary_eps() const { return kBoundaryEpsFactor * diameter_; }

  // Interior angle at vertex i exceeds pi.
  bool is_reflex(int i) const { return reflex_[wrap(i)]; }

  PointLocation locate(const Point& p) const;
  bool contains(const Point& p) const {  // closed containment
    return locate(p) != PointLocation::kOutside;
  }

  // Nearest point of the boundary; also reports the edge index (edge i runs
  // from vertex i to vertex i+1) and the parameter along it.
  Point closest_boundary_point(const Point& p, int* edge = nullptr,
                               double* t = nullptr) const;

  Point bbox_min() const { return bbox_min_; }
  Point bbox_max() const { return bbox_max_; }

 private:
  friend SimplePolygon validate(const std::vector<Point>&, bool);

  int wrap(int i) const {
    const int n = static_cast<int>(vertices_.size());
    return ((i % n) + n) % n;
  }
  void finish();  // fills the cached fields from vertices_

  std::vector<Point> vertices_;
  std::vector<bool> reflex_;
  double diameter_ = 0.0;
  double area_ = 0.0;
  Point bbox_min_, bbox_max_;
};

// Normalizes and checks a raw vertex loop: drops exact consecutive
// duplicates, strips collinear run midpoints (unless keep_collinear, used by
// refinement families that need stable vertex indexing), reverses CW input,
// and verifies simplicity. Throws SimplicityViolation or DegenerateInput.
SimplePolygon validate(const std::vector<Point>& raw_vertices,
                       bool keep_collinear = false);

// Ear-clipping triangulation. Triangles are CCW index triples into
// poly.vertices(); the dual adjacency graph of a simple polygon is a tree.
// Vertices with a straight interior angle contribute no triangle corner.
class Triangulation {
 public:
  struct Neighbor {
    int tri;     // adjacent triangle index
    int edge_u;  // shared edge, as vertex indices into the polygon
    int edge_v;
  };

  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  const std::vector<std::vector<Neighbor>>& adjacency() const { return adj_; }
  int size() const { return static_cast<int>(tris_.size()); }

  // Index of a triangle whose closed interior contains p, or -1.
  int locate(const SimplePolygon& poly, const Point& p) const;

  double total_area(const SimplePolygon& poly) const;
  bool dual_is_tree() const;

 private:
  friend Triangulation triangulate(const SimplePolygon&);
  std::vector<std::array<int, 3>> tris_;
  std::vector<std::vector<Neighbor>> adj_;
};

Triangulation triangulate(const SimplePolygon& poly);

// Straight segment with both ends on the boundary and open interior inside
// the open domain.
struct Chord {
  Point a;
  Point b;
};

bool is_chord(const SimplePolygon& poly, const Segment& s);

// Generator gallery ------------------------------------------------------

// Unit square (0,0),(1,0),(1,1),(0,1).
SimplePolygon make_square();

// L-shape (0,0),(2,0),(2,1),(1,1),(1,2),(0,2); one reflex vertex at (1,1).
SimplePolygon make_l_shape();

// Equilateral triangle with the given side; its diameter equals the side.
SimplePolygon make_equilateral(double side = 1.0);

// Rectilinear square spiral corridor with unit-wide passage and unit walls.
// The intrinsic diameter grows quadratically in `turns` while the Euclidean
// diameter grows linearly; turns = 3 exceeds 4x comfortably (the shared-tail
// suites rely on that).
SimplePolygon make_spiral(int turns);

// Comb with `teeth` rectangular prongs of height 3 on a height-1 spine.
SimplePolygon make_comb(int teeth);

// Koch snowflake prefix: level 0 is an equilateral triangle, level k has
// 3*4^k edges. Bumps point outward, so every prefix is simple.
SimplePolygon make_koch_prefix(int level, double side = 1.0);

// Random simple polygon: n seeded points untangled by 2-opt edge swaps.
SimplePolygon make_random_simple(int n, std::uint64_t seed);

class Rng;

// Uniform point strictly inside the polygon, by seeded rejection sampling.
Point random_interior_point(const SimplePolygon& poly, Rng& rng);

// Brute-force max distance over vertex pairs.
double diameter_brute_force(const std::vector<Point>& vertices);

// Rotating calipers over the convex hull; equals the brute-force value.
double diameter_rotating_calipers(const std::vector<Point>& vertices);

// Convex hull (CCW, no collinear points) by monotone chain.
std::vector<Point> convex_hull(std::vector<Point> points);

}  // namespace jordangeo

#endif  // JORDANGEO_POLYGON_HPP_
