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

#ifndef JORDANGEO_ASYMPTOTICS_HPP_
#define JORDANGEO_ASYMPTOTICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"

namespace jordangeo {

// Polygons cannot realize boundary points at infinite intrinsic distance, so
// asymptote classes are approximated by geodesics toward a tracked boundary
// vertex across a refinement family. The stand-in is documented, not exact.
struct RefinementFamily {
  std::string generator;               // "koch_prefix" or "square"
  std::vector<SimplePolygon> levels;   // level 0 .. k
  Point basepoint;                     // interior at every level
  std::vector<Point> targets;          // tracked boundary vertex per level
};

// Koch family tracking the newest bump apex along the bottom side: at each
// refinement the tracked edge is subdivided and its apex becomes the target.
// The targets are Cauchy (edge lengths shrink by 3 per level). The basepoint
// defaults to the centroid of the level-0 triangle.
RefinementFamily make_koch_family(int max_level, double side = 1.0);
RefinementFamily make_square_family(int levels);

// (basepoint, ray, C, epsilon) datum; the ray stands in for a geodesic ray
// toward the target at its far end.
struct ConeNeighborhood {
  Point basepoint;
  GeodesicPath ray;  // from basepoint to the target
  double C = 0.0;
  double epsilon = 0.0;

  Point ball_center() const { return ray.point_at_arclength(C); }
};

// Validates C in (0, ray length) and epsilon > 0.
ConeNeighborhood make_cone_neighborhood(GeodesicPath ray, double C,
                                        double epsilon);

struct SharedTail {
  GeodesicPath tail;  // maximal common terminal subpath, directed toward r
  double tail_length = 0.0;
};

// Maximal common terminal subpath of the geodesics p->r and q->r; may be the
// single point r.
SharedTail shared_tail(const SimplePolygon& poly, const Triangulation& tri,
                       const Point& p, const Point& q, const Point& r);

// True iff d(p, x) > C and the geodesic p->x meets the closed Euclidean ball
// B(ray(C), epsilon).
bool cone_membership(const SimplePolygon& poly, const Triangulation& tri,
                     const ConeNeighborhood& nbhd, const Point& x);

struct DiskInConeResult {
  bool found = false;
  double disk_radius = 0.0;  // largest tested radius with all samples members
  int samples_tested = 0;
};

// Bisects the disk radius around the ray target; every sampled domain point
// inside the disk must be a cone member. sample_count scales the polar grid
// (default 1024 = 64 angles x 16 radii).
DiskInConeResult probe_disk_inside_cone(const SimplePolygon& poly,
                                        const Triangulation& tri,
                                        const ConeNeighborhood& nbhd,
                                        int sample_count = 1024);

struct ConeInDiskResult {
  bool found = false;
  double C = 0.0;
  double epsilon = 0.0;
  int samples_tested = 0;
  int members = 0;
};

// Searches (C, epsilon) so that every sampled member of N(ray, C, epsilon)
// lies within disk_radius of q in the plane: C is chosen with the ray suffix
// inside the half-radius ball, then epsilon shrinks until the sampled
// membership set fits. NotFound after the shrink schedule is exhausted.
ConeInDiskResult probe_cone_inside_disk(const SimplePolygon& poly,
                                        const Triangulation& tri,
                                        const Point& p, const Point& q,
                                        double disk_radius,
                                        int sample_count = 1024);

struct CoincidenceReport {
  double onset_p1 = 0.0;       // arclength from p1 to the tail start
  double onset_p2 = 0.0;
  double sum_at_onset = 0.0;   // onset_p1 + onset_p2
  double bound_4d = 0.0;
  double tail_length = 0.0;
  bool interior_segment = false;  // p1p2 is a straight interior segment
  bool ok = true;  // sum_at_onset <= 4D when the segment hypothesis holds
};

// Coincidence onset of the two geodesics from p1 and p2 to the tracked
// target of the given level; the 4D bound applies when the segment p1p2 is
// interior, matching the tail argument for nearby origins.
CoincidenceReport ray_family_coincidence(const RefinementFamily& family,
                                         const Point& p1, const Point& p2,
                                         int level);

}  // namespace jordangeo

#endif  // JORDANGEO_ASYMPTOTICS_HPP_
