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

#ifndef JORDANGEO_ORACLE_HPP_
#define JORDANGEO_ORACLE_HPP_

#include <vector>

#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"

namespace jordangeo {

// Brute-force engine for cross-validating the funnel paths. Deliberately
// simple and slow: O(n^2) visibility tests, Dijkstra on the result.
class VisibilityGraph {
 public:
  const std::vector<Point>& nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& neighbors() const { return adj_; }

  bool adjacent(int i, int j) const;

  // Node index with exactly these coordinates, or -1.
  int find_node(const Point& p) const;

 private:
  friend VisibilityGraph build_visibility(const SimplePolygon&,
                                          const std::vector<Point>&);
  std::vector<Point> nodes_;
  std::vector<std::vector<int>> adj_;
};

// Nodes are the polygon vertices followed by the extra points (snapped the
// same way the funnel snaps queries). An edge exists iff the open segment
// between its nodes stays in the closed polygon; grazing a reflex vertex is
// visible, matching geodesics that bend there.
VisibilityGraph build_visibility(const SimplePolygon& poly,
                                 const std::vector<Point>& extra_points);

// True iff the open segment uv lies in the closed polygon.
bool segment_in_closed_polygon(const SimplePolygon& poly, const Point& u,
                               const Point& v);

// Dijkstra over the visibility graph with lexicographic-predecessor ties;
// p and q must be graph nodes.
GeodesicPath oracle_shortest_path(const SimplePolygon& poly,
                                  const VisibilityGraph& g, const Point& p,
                                  const Point& q);

// Convenience wrapper: builds the graph with {p, q} and queries it.
GeodesicPath oracle_path(const SimplePolygon& poly, const Point& p,
                         const Point& q);

}  // namespace jordangeo

#endif  // JORDANGEO_ORACLE_HPP_
