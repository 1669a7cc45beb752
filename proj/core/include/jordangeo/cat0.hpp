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

#ifndef JORDANGEO_CAT0_HPP_
#define JORDANGEO_CAT0_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"

namespace jordangeo {

// Geodesic triangle split into its Jordan-triangle core plus the three tails.
// Sides are directed p->q, q->r, r->p; the core loop gamma, rho, tau runs
// pbar->qbar->rbar->pbar, so tau as stored traverses the pbar-rbar side from
// rbar. Tails are directed away from the outer vertices.
struct JordanTriangle {
  std::array<Point, 3> outer_vertices;                // p, q, r
  std::array<GeodesicPath, 3> sides;                  // pq, qr, rp
  std::array<Point, 3> bifurcation_points;            // pbar, qbar, rbar
  std::array<GeodesicPath, 3> tails;                  // at p, q, r
  std::array<GeodesicPath, 3> core_sides;             // gamma, rho, tau
  double core_perimeter = 0.0;
  bool degenerate = false;

  const GeodesicPath& gamma() const { return core_sides[0]; }  // pbar-qbar
  const GeodesicPath& rho() const { return core_sides[1]; }    // qbar-rbar
  const GeodesicPath& tau() const { return core_sides[2]; }    // rbar-pbar
};

// Euclidean triangle realizing the intrinsic side lengths of the full
// geodesic triangle, with the equal-arclength comparison-point map.
struct ComparisonTriangle {
  std::array<double, 3> side_lengths;  // |pq|, |qr|, |rp| intrinsic
  std::array<Point, 3> embedded;       // pbar, qbar, rbar images of p, q, r
  bool degenerate = false;

  // Side 0 runs p->q, side 1 q->r, side 2 r->p; s is arclength from the
  // side's start vertex.
  Point comparison_point(int side, double s) const;
};

struct DeltaEstimate {
  double delta_lower = 0.0;  // max observed over samples
  double bound = 0.0;        // sqrt(3) * D / 4
  int samples = 0;
  std::array<Point, 3> witness_triangle;
  Point witness_point;  // side point realizing delta_lower
  bool ok = false;      // delta_lower <= bound + 1e-7 * D
};

struct DeltaSamplerConfig {
  int triangle_count = 8;
  int points_per_side = 24;
  std::uint64_t seed = 0;
  // Seed triangle #0 with the vertex triple maximizing the min pairwise
  // distance; on an equilateral domain this is the sharp configuration.
  bool include_extremal_triangle = true;
};

// Arclength of the maximal common prefix of two paths leaving the same
// point, extended into a shared partial segment when the split happens
// mid-segment. Tolerance for coincidence is `tol`.
double common_prefix_arclength(const GeodesicPath& a, const GeodesicPath& b,
                               double tol);

JordanTriangle decompose_triangle(const SimplePolygon& poly,
                                  const Triangulation& tri, const Point& p,
                                  const Point& q, const Point& r);

ComparisonTriangle comparison_triangle(const JordanTriangle& t);

struct ThinnessReport {
  double max_excess = 0.0;  // max over pairs of d(x,y) - d(xbar,ybar)
  bool ok = true;
  int pairs_checked = 0;
  Point worst_x, worst_y;
};

// Samples points along all three full sides and compares every intrinsic
// pair distance against the comparison triangle.
ThinnessReport check_thinness(const SimplePolygon& poly,
                              const Triangulation& tri,
                              const JordanTriangle& t, int samples_per_side);

struct SideConvexityReport {
  std::array<double, 3> per_side_total_turn = {0, 0, 0};
  bool sign_consistent = true;   // interior turns of each side share a sign
  bool per_side_ok = true;       // each total turn <= 0 (+tol)
  bool sum_bound_ok = true;      // sum of the three turns >= -pi (-tol)
  double angle_sum = 0.0;        // interior angles at pbar, qbar, rbar
  bool angle_sum_ok = true;      // angle_sum <= 2*pi (+tol)
  bool ok = true;
};

// Turning/angle checks on the core loop, oriented CCW.
// Throws DegenerateTriangle on an empty core.
SideConvexityReport check_side_convexity(const JordanTriangle& t);

struct PerimeterReport {
  double core_perimeter = 0.0;
  double bound_4d = 0.0;
  bool ok = true;
};

PerimeterReport check_perimeter_bound(const JordanTriangle& t, double diameter);

struct IncenterWitness {
  Point m;                            // interior point seeing all three corners
  std::array<double, 3> segment_sums; // per core side: sum of the two distances
  bool ok = true;
};

// Searches the open core region for a point from which straight segments
// reach pbar, qbar, rbar without touching the core sides, and whose pairwise
// distance sums dominate the side lengths. nullopt = search exhausted
// (inconclusive, not a falsification). Throws DegenerateTriangle.
std::optional<IncenterWitness> incenter_witness(const SimplePolygon& poly,
                                                const Triangulation& tri,
                                                const JordanTriangle& t);

DeltaEstimate estimate_delta(const SimplePolygon& poly,
                             const Triangulation& tri,
                             const DeltaSamplerConfig& config);

struct ConvexityReport {
  bool ok = true;
  double max_violation = 0.0;  // max of f(mid) - (f(a)+f(b))/2 over pairs
  int samples = 0;
};

// Midpoint-convexity of t -> d(g1(t*L1), g2(t*L2)) on a uniform grid.
ConvexityReport check_distance_convexity(const SimplePolygon& poly,
                                         const Triangulation& tri,
                                         const GeodesicPath& g1,
                                         const GeodesicPath& g2, int n);

}  // namespace jordangeo

#endif  // JORDANGEO_CAT0_HPP_
