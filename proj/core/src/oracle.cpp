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

#include "jordangeo/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "jordangeo/errors.hpp"

namespace jordangeo {

bool segment_in_closed_polygon(const SimplePolygon& poly, const Point& u,
                               const Point& v) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    const Segment edge{poly.vertex(i), poly.vertex(i + 1)};
    if (segments_properly_intersect(Segment{u, v}, edge)) return false;
  }
  // The segment may touch the boundary at vertices or run along edges; split
  // at every contact and test one interior point of each piece.
  std::vector<double> ts{0.0, 1.0};
  const Point d = v - u;
  const double len_sq = norm_sq(d);
  if (len_sq == 0.0) return poly.contains(u);
  for (int i = 0; i < n; ++i) {
    const Point& w = poly.vertex(i);
    if (point_on_segment(w, u, v)) {
      ts.push_back(std::clamp(dot(w - u, d) / len_sq, 0.0, 1.0));
    }
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 1e-12) continue;
    const Point mid = u + d * ((ts[i] + ts[i + 1]) * 0.5);
    if (poly.locate(mid) == PointLocation::kOutside) return false;
  }
  return true;
}

bool VisibilityGraph::adjacent(int i, int j) const {
  const auto& nb = adj_[i];
  return std::find(nb.begin(), nb.end(), j) != nb.end();
}

int VisibilityGraph::find_node(const Point& p) const {
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i] == p) return i;
  }
  return -1;
}

VisibilityGraph build_visibility(const SimplePolygon& poly,
                                 const std::vector<Point>& extra_points) {
  VisibilityGraph g;
  g.nodes_ = poly.vertices();
  for (const Point& p : extra_points) {
    g.nodes_.push_back(prepare_query_point(poly, p));
  }
  const int m = static_cast<int>(g.nodes_.size());
  g.adj_.assign(m, {});
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.nodes_[i] == g.nodes_[j]) continue;
      if (segment_in_closed_polygon(poly, g.nodes_[i], g.nodes_[j])) {
        g.adj_[i].push_back(j);
        g.adj_[j].push_back(i);
      }
    }
  }
  return g;
}

GeodesicPath oracle_shortest_path(const SimplePolygon& poly,
                                  const VisibilityGraph& g, const Point& p_in,
                                  const Point& q_in) {
  const Point p = prepare_query_point(poly, p_in);
  const Point q = prepare_query_point(poly, q_in);
  const int src = g.find_node(p);
  const int dst = g.find_node(q);
  if (src < 0 || dst < 0) {
    throw InvalidParameter("oracle_shortest_path: endpoint is not a graph node");
  }
  if (src == dst) return GeodesicPath({p});

  const int m = static_cast<int>(g.nodes().size());
  std::vector<double> dist(m, std::numeric_limits<double>::infinity());
  std::vector<int> pred(m, -1);
  std::vector<bool> done(m, false);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    for (int v : g.neighbors()[u]) {
      const double nd = d + distance(g.nodes()[u], g.nodes()[v]);
      if (nd < dist[v] || (nd == dist[v] && pred[v] >= 0 && u < pred[v])) {
        dist[v] = nd;
        pred[v] = u;
        heap.push({nd, v});
      }
    }
  }
  if (!done[dst]) throw InternalError("oracle_shortest_path: graph disconnected");

  std::vector<Point> pts;
  for (int cur = dst; cur != -1; cur = pred[cur]) pts.push_back(g.nodes()[cur]);
  std::reverse(pts.begin(), pts.end());
  return GeodesicPath(canonicalize_polyline(std::move(pts)));
}

GeodesicPath oracle_path(const SimplePolygon& poly, const Point& p,
                         const Point& q) {
  const VisibilityGraph g = build_visibility(poly, {p, q});
  return oracle_shortest_path(poly, g, p, q);
}

}  // namespace jordangeo
