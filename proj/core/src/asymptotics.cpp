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

#include "jordangeo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jordangeo/cat0.hpp"
#include "jordangeo/errors.hpp"
#include "jordangeo/oracle.hpp"

namespace jordangeo {

// --- refinement families -----------------------------------------------------

RefinementFamily make_koch_family(int max_level, double side) {
  if (max_level < 0) throw InvalidParameter("koch family: max_level >= 0");
  RefinementFamily family;
  family.generator = "koch_prefix";
  family.basepoint = {side / 2.0, side * std::numbers::sqrt3 / 6.0};

  // Deep-vertex rule: follow the apex of the tracked edge. The edge starts
  // as the level-0 bottom side; each refinement replaces it by its second
  // third [p1, apex], whose apex is the next target.
  Point edge_a{0, 0};
  Point edge_b{side, 0};
  for (int level = 0; level <= max_level; ++level) {
    family.levels.push_back(make_koch_prefix(level, side));
    if (level == 0) {
      family.targets.push_back(edge_b);
      continue;
    }
    const Point d = edge_b - edge_a;
    const Point p1 = edge_a + d * (1.0 / 3.0);
    const Point apex = (edge_a + edge_b) * 0.5 +
                       Point{d.y, -d.x} * (std::numbers::sqrt3 / 6.0);
    family.targets.push_back(apex);
    edge_a = p1;
    edge_b = apex;
  }
  return family;
}

RefinementFamily make_square_family(int levels) {
  if (levels < 0) throw InvalidParameter("square family: levels >= 0");
  RefinementFamily family;
  family.generator = "square";
  family.basepoint = {0.25, 0.25};
  for (int level = 0; level <= levels; ++level) {
    family.levels.push_back(make_square());
    family.targets.push_back({1, 1});
  }
  return family;
}

// --- cone neighborhoods --------------------------------------------------------

ConeNeighborhood make_cone_neighborhood(GeodesicPath ray, double C,
                                        double epsilon) {
  if (!(epsilon > 0.0)) {
    throw InvalidParameter("cone neighborhood: epsilon must be > 0");
  }
  if (!(C > 0.0) || !(C < ray.total_length())) {
    throw InvalidParameter("cone neighborhood: C must be in (0, ray length)");
  }
  ConeNeighborhood nbhd;
  nbhd.basepoint = ray.source();
  nbhd.ray = std::move(ray);
  nbhd.C = C;
  nbhd.epsilon = epsilon;
  return nbhd;
}

namespace {

double polyline_min_distance_to(const GeodesicPath& path, const Point& center) {
  const auto& pts = path.points();
  if (pts.size() == 1) return distance(pts[0], center);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    best = std::min(best, point_segment_distance(center, pts[i], pts[i + 1]));
  }
  return best;
}

}  // namespace

bool cone_membership(const SimplePolygon& poly, const Triangulation& tri,
                     const ConeNeighborhood& nbhd, const Point& x) {
  const GeodesicPath path = shortest_path(poly, tri, nbhd.basepoint, x);
  if (!(path.total_length() > nbhd.C)) return false;
  return polyline_min_distance_to(path, nbhd.ball_center()) <= nbhd.epsilon;
}

// --- shared tails ----------------------------------------------------------------

SharedTail shared_tail(const SimplePolygon& poly, const Triangulation& tri,
                       const Point& p, const Point& q, const Point& r) {
  if (p == q) {
    const GeodesicPath whole = shortest_path(poly, tri, p, r);
    return {whole, whole.total_length()};
  }
  const GeodesicPath pr = shortest_path(poly, tri, p, r);
  const GeodesicPath qr = shortest_path(poly, tri, q, r);
  const double tol = kBoundaryEpsFactor * poly.diameter();
  const double s =
      common_prefix_arclength(pr.reversed(), qr.reversed(), tol);
  const GeodesicPath tail =
      pr.slice(pr.total_length() - s, pr.total_length());
  return {tail, s};
}

// --- topology probes ----------------------------------------------------------------

namespace {

// Polar grid around `center` clipped to the domain, plus nearby vertices.
std::vector<Point> disk_samples(const SimplePolygon& poly, const Point& center,
                                double radius, int angles, int radii) {
  std::vector<Point> out;
  for (int ai = 0; ai < angles; ++ai) {
    const double phi = 2.0 * std::numbers::pi * ai / angles;
    for (int ri = 1; ri <= radii; ++ri) {
      const double rr = radius * ri / radii;
      const Point x{center.x + rr * std::cos(phi), center.y + rr * std::sin(phi)};
      if (poly.locate(x) != PointLocation::kOutside) out.push_back(x);
    }
  }
  for (const Point& v : poly.vertices()) {
    if (distance(v, center) <= radius) out.push_back(v);
  }
  return out;
}

}  // namespace

DiskInConeResult probe_disk_inside_cone(const SimplePolygon& poly,
                                        const Triangulation& tri,
                                        const ConeNeighborhood& nbhd,
                                        int sample_count) {
  if (sample_count < 16) {
    throw InvalidParameter("probe_disk_inside_cone: sample_count too small");
  }
  const Point q = nbhd.ray.target();
  const int angles = std::max(16, sample_count / 16);
  const int radii = 16;

  DiskInConeResult result;
  auto passes = [&](double radius) {
    const std::vector<Point> samples = disk_samples(poly, q, radius, angles, radii);
    result.samples_tested += static_cast<int>(samples.size()) + 1;
    if (!cone_membership(poly, tri, nbhd, q)) return false;
    for (const Point& x : samples) {
      if (!cone_membership(poly, tri, nbhd, x)) return false;
    }
    return true;
  };

  // The disk must stay clear of the ball center, where the distance gate
  // flips; bisect below that.
  double hi = 0.9 * distance(q, nbhd.ball_center());
  if (hi <= 0.0) return result;
  if (passes(hi)) {
    result.found = true;
    result.disk_radius = hi;
    return result;
  }
  double lo = 0.0;
  for (int it = 0; it < 12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.found = lo > 0.0;
  result.disk_radius = lo;
  return result;
}

ConeInDiskResult probe_cone_inside_disk(const SimplePolygon& poly,
                                        const Triangulation& tri,
                                        const Point& p, const Point& q_in,
                                        double disk_radius, int sample_count) {
  if (!(disk_radius > 0.0)) {
    throw InvalidParameter("probe_cone_inside_disk: disk_radius must be > 0");
  }
  const Point q = prepare_query_point(poly, q_in);
  const GeodesicPath ray = shortest_path(poly, tri, p, q);
  const double len = ray.total_length();
  ConeInDiskResult result;
  if (len <= 0.0) return result;

  // Smallest arclength whose suffix stays inside B(q, r/2): the Euclidean
  // distance to q is convex on each segment, so vertex checks suffice.
  const double half = disk_radius / 2.0;
  const auto& pts = ray.points();
  const auto& cum = ray.cumulative_arclength();
  double s_star = 0.0;
  for (std::size_t i = pts.size(); i-- > 0;) {
    if (distance(pts[i], q) >= half) {
      if (i + 1 >= pts.size()) {
        s_star = len;  // only the endpoint qualifies
      } else {
        // Crossing of |gamma(s) - q| = half on segment i.
        double lo = cum[i], hi = cum[i + 1];
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          (distance(ray.point_at_arclength(mid), q) >= half ? lo : hi) = mid;
        }
        s_star = hi;
      }
      break;
    }
  }
  double C = s_star + 0.5 * (len - s_star);
  if (!(C > 0.0)) C = len / 2.0;
  if (!(C < len)) return result;

  const double center_gap = half - distance(ray.point_at_arclength(C), q);
  double eps0 = std::min(center_gap, disk_radius / 4.0);
  if (!(eps0 > 0.0)) eps0 = disk_radius / 8.0;

  // Broad deterministic sampling: bbox grid, vertices, a polar patch at q,
  // and the ray itself. Geodesic lengths and ball distances are computed
  // once per sample; the epsilon schedule reuses them.
  std::vector<Point> samples;
  {
    const Point lo = poly.bbox_min(), hi_box = poly.bbox_max();
    const int g = std::max(4, static_cast<int>(std::sqrt(sample_count)));
    for (int i = 0; i <= g; ++i) {
      for (int j = 0; j <= g; ++j) {
        const Point x{lo.x + (hi_box.x - lo.x) * i / g,
                      lo.y + (hi_box.y - lo.y) * j / g};
        if (poly.locate(x) != PointLocation::kOutside) samples.push_back(x);
      }
    }
    for (const Point& v : poly.vertices()) samples.push_back(v);
    const auto polar = disk_samples(poly, q, 2.0 * disk_radius, 16, 8);
    samples.insert(samples.end(), polar.begin(), polar.end());
    for (int i = 1; i <= 32; ++i) {
      samples.push_back(ray.point_at_arclength(len * i / 32.0));
    }
  }
  const Point center = ray.point_at_arclength(C);
  struct Probe {
    double len;
    double ball_dist;
    double euclid_to_q;
  };
  std::vector<Probe> probes;
  probes.reserve(samples.size());
  for (const Point& x : samples) {
    const GeodesicPath path = shortest_path(poly, tri, p, x);
    probes.push_back({path.total_length(),
                      polyline_min_distance_to(path, center), distance(x, q)});
  }
  result.samples_tested = static_cast<int>(probes.size());

  for (int j = 0; j < 7; ++j) {
    const double eps = eps0 * std::pow(0.5, j);
    bool all_inside = true;
    int members = 0;
    for (const Probe& pr : probes) {
      const bool member = pr.len > C && pr.ball_dist <= eps;
      if (!member) continue;
      ++members;
      if (pr.euclid_to_q > disk_radius) {
        all_inside = false;
        break;
      }
    }
    if (all_inside) {
      result.found = true;
      result.C = C;
      result.epsilon = eps;
      result.members = members;
      return result;
    }
  }
  return result;
}

// --- ray coincidence -----------------------------------------------------------------

CoincidenceReport ray_family_coincidence(const RefinementFamily& family,
                                         const Point& p1, const Point& p2,
                                         int level) {
  if (level < 0 || level >= static_cast<int>(family.levels.size())) {
    throw InvalidParameter("ray_family_coincidence: level out of range");
  }
  const SimplePolygon& poly = family.levels[level];
  const Triangulation tri = triangulate(poly);
  const Point& target = family.targets[level];

  const GeodesicPath g1 = shortest_path(poly, tri, p1, target);
  const GeodesicPath g2 = shortest_path(poly, tri, p2, target);
  const double tol = kBoundaryEpsFactor * poly.diameter();
  const double s = common_prefix_arclength(g1.reversed(), g2.reversed(), tol);

  CoincidenceReport report;
  report.tail_length = s;
  report.onset_p1 = g1.total_length() - s;
  report.onset_p2 = g2.total_length() - s;
  report.sum_at_onset = report.onset_p1 + report.onset_p2;
  report.bound_4d = 4.0 * poly.diameter();
  report.interior_segment =
      poly.locate(p1) == PointLocation::kInside &&
      poly.locate(p2) == PointLocation::kInside &&
      segment_in_closed_polygon(poly, p1, p2);
  report.ok = !report.interior_segment ||
              report.sum_at_onset <= report.bound_4d + tol;
  return report;
}

}  // namespace jordangeo
