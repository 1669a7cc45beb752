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

#include "jordangeo/cat0.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "jordangeo/errors.hpp"
#include "jordangeo/rng.hpp"

namespace jordangeo {

namespace {

constexpr double kAngTol = 1e-9;

double rel_tol(double diameter, double factor) {
  return factor * std::max(diameter, 1e-300);
}

}  // namespace

// --- decomposition ----------------------------------------------------------

double common_prefix_arclength(const GeodesicPath& a, const GeodesicPath& b,
                               double tol) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  const std::size_t n = std::min(pa.size(), pb.size());
  std::size_t k = 0;
  while (k < n && distance(pa[k], pb[k]) <= tol) ++k;
  if (k == 0) return 0.0;
  double s = a.cumulative_arclength()[k - 1];
  if (k < pa.size() && k < pb.size()) {
    // Split mid-segment: extend along the shared direction.
    const Point d1 = pa[k] - pa[k - 1];
    const Point d2 = pb[k] - pb[k - 1];
    if (norm(d1) > 0 && norm(d2) > 0 &&
        std::fabs(turning_angle(d1, d2)) <= kAngTol) {
      s += std::min(norm(d1), norm(d2));
    }
  } else if (k < pa.size()) {
    // b is exhausted: the whole of b is shared.
    s = b.total_length();
  }
  return std::min(s, std::min(a.total_length(), b.total_length()));
}

JordanTriangle decompose_triangle(const SimplePolygon& poly,
                                  const Triangulation& tri, const Point& p,
                                  const Point& q, const Point& r) {
  JordanTriangle t;
  t.sides[0] = shortest_path(poly, tri, p, q);
  t.sides[1] = shortest_path(poly, tri, q, r);
  t.sides[2] = shortest_path(poly, tri, r, p);
  // Snapped endpoints are authoritative.
  t.outer_vertices = {t.sides[0].source(), t.sides[1].source(),
                      t.sides[2].source()};

  const double tol = rel_tol(poly.diameter(), 1e-9);
  const GeodesicPath from_p = t.sides[2].reversed();  // p -> r
  const GeodesicPath from_q = t.sides[0].reversed();  // q -> p
  const GeodesicPath from_r = t.sides[1].reversed();  // r -> q
  const double tail_p = common_prefix_arclength(t.sides[0], from_p, tol);
  const double tail_q = common_prefix_arclength(t.sides[1], from_q, tol);
  const double tail_r = common_prefix_arclength(t.sides[2], from_r, tol);

  const double len_pq = t.sides[0].total_length();
  const double len_qr = t.sides[1].total_length();
  const double len_rp = t.sides[2].total_length();

  t.degenerate = tail_p + tail_q > len_pq - tol ||
                 tail_q + tail_r > len_qr - tol ||
                 tail_r + tail_p > len_rp - tol;
  if (t.degenerate) {
    for (int i = 0; i < 3; ++i) {
      t.bifurcation_points[i] = t.outer_vertices[i];
      t.tails[i] = GeodesicPath({t.outer_vertices[i]});
      t.core_sides[i] = GeodesicPath({t.outer_vertices[i]});
    }
    t.core_perimeter = 0.0;
    return t;
  }

  t.tails[0] = t.sides[0].slice(0.0, tail_p);
  t.tails[1] = t.sides[1].slice(0.0, tail_q);
  t.tails[2] = t.sides[2].slice(0.0, tail_r);
  t.bifurcation_points = {t.tails[0].target(), t.tails[1].target(),
                          t.tails[2].target()};

  t.core_sides[0] = t.sides[0].slice(tail_p, len_pq - tail_q);  // gamma
  t.core_sides[1] = t.sides[1].slice(tail_q, len_qr - tail_r);  // rho
  t.core_sides[2] = t.sides[2].slice(tail_r, len_rp - tail_p);  // tau
  t.core_perimeter = t.core_sides[0].total_length() +
                     t.core_sides[1].total_length() +
                     t.core_sides[2].total_length();
  return t;
}

// --- comparison triangle ----------------------------------------------------

ComparisonTriangle comparison_triangle(const JordanTriangle& t) {
  ComparisonTriangle ct;
  const double c = t.sides[0].total_length();  // |pq|
  const double a = t.sides[1].total_length();  // |qr|
  const double b = t.sides[2].total_length();  // |rp|
  ct.side_lengths = {c, a, b};
  if (c <= 0.0) {
    ct.embedded = {Point{0, 0}, Point{0, 0}, Point{b, 0}};
    ct.degenerate = true;
    return ct;
  }
  const double x = (c * c + b * b - a * a) / (2.0 * c);
  const double y_sq = b * b - x * x;
  const double y = y_sq > 0.0 ? std::sqrt(y_sq) : 0.0;
  ct.embedded = {Point{0, 0}, Point{c, 0}, Point{x, y}};
  ct.degenerate = y <= 1e-12 * std::max({a, b, c});
  return ct;
}

Point ComparisonTriangle::comparison_point(int side, double s) const {
  const Point& from = embedded[side % 3];
  const Point& to = embedded[(side + 1) % 3];
  const double len = side_lengths[side % 3];
  if (len <= 0.0) return from;
  const double u = std::clamp(s / len, 0.0, 1.0);
  return from + (to - from) * u;
}

// --- thinness ----------------------------------------------------------------

ThinnessReport check_thinness(const SimplePolygon& poly,
                              const Triangulation& tri,
                              const JordanTriangle& t, int samples_per_side) {
  if (samples_per_side < 2) {
    throw InvalidParameter("check_thinness: samples_per_side must be >= 2");
  }
  const ComparisonTriangle ct = comparison_triangle(t);
  struct Sample {
    Point x;
    Point image;
  };
  std::vector<Sample> samples;
  samples.reserve(3 * samples_per_side);
  for (int side = 0; side < 3; ++side) {
    const GeodesicPath& g = t.sides[side];
    for (int j = 0; j < samples_per_side; ++j) {
      const double s = g.total_length() * j / (samples_per_side - 1);
      samples.push_back({g.point_at_arclength(s), ct.comparison_point(side, s)});
    }
  }
  ThinnessReport report;
  report.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const double intrinsic =
          shortest_path(poly, tri, samples[i].x, samples[j].x).total_length();
      const double comparison = distance(samples[i].image, samples[j].image);
      const double excess = intrinsic - comparison;
      ++report.pairs_checked;
      if (excess > report.max_excess) {
        report.max_excess = excess;
        report.worst_x = samples[i].x;
        report.worst_y = samples[j].x;
      }
    }
  }
  report.ok = report.max_excess <= rel_tol(poly.diameter(), 1e-7);
  return report;
}

// --- side convexity and angles ------------------------------------------------

namespace {

double loop_signed_area(const std::array<GeodesicPath, 3>& sides) {
  double a = 0.0;
  for (const GeodesicPath& g : sides) {
    const auto& pts = g.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      a += cross(pts[i], pts[i + 1]);
    }
  }
  return 0.5 * a;
}

}  // namespace

SideConvexityReport check_side_convexity(const JordanTriangle& t) {
  if (t.degenerate) {
    throw DegenerateTriangle("check_side_convexity: degenerate core");
  }
  // Orient the core loop CCW.
  std::array<GeodesicPath, 3> loop = t.core_sides;
  if (loop_signed_area(loop) < 0.0) {
    loop = {t.core_sides[2].reversed(), t.core_sides[1].reversed(),
            t.core_sides[0].reversed()};
  }

  SideConvexityReport report;
  for (int side = 0; side < 3; ++side) {
    const auto& pts = loop[side].points();
    double total = 0.0;
    bool any_pos = false, any_neg = false;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const double turn =
          turning_angle(pts[i] - pts[i - 1], pts[i + 1] - pts[i]);
      total += turn;
      if (turn > kAngTol) any_pos = true;
      if (turn < -kAngTol) any_neg = true;
    }
    report.per_side_total_turn[side] = total;
    if (any_pos && any_neg) report.sign_consistent = false;
    if (total > kAngTol) report.per_side_ok = false;
  }
  const double turn_sum = report.per_side_total_turn[0] +
                          report.per_side_total_turn[1] +
                          report.per_side_total_turn[2];
  report.sum_bound_ok = turn_sum >= -std::numbers::pi - kAngTol;

  // Interior angles between the initial segment directions of the two core
  // sides meeting at each corner.
  for (int corner = 0; corner < 3; ++corner) {
    const GeodesicPath& out = loop[corner];            // leaves the corner
    const GeodesicPath& in = loop[(corner + 2) % 3];   // arrives at it
    const auto& op = out.points();
    const auto& ip = in.points();
    const Point d_out = op[1] - op[0];
    const Point d_in = ip[ip.size() - 2] - ip.back();  // away from the corner
    report.angle_sum += std::fabs(turning_angle(d_out, d_in));
  }
  report.angle_sum_ok = report.angle_sum <= 2.0 * std::numbers::pi + kAngTol;
  report.ok = report.sign_consistent && report.per_side_ok &&
              report.sum_bound_ok && report.angle_sum_ok;
  return report;
}

PerimeterReport check_perimeter_bound(const JordanTriangle& t,
                                      double diameter) {
  PerimeterReport report;
  report.core_perimeter = t.core_perimeter;
  report.bound_4d = 4.0 * diameter;
  report.ok = report.core_perimeter <= report.bound_4d + rel_tol(diameter, 1e-9);
  return report;
}

// --- incenter witness ---------------------------------------------------------

namespace {

bool point_strictly_in_loop(const std::vector<Point>& loop, const Point& p,
                            double eps) {
  const int n = static_cast<int>(loop.size());
  for (int i = 0; i < n; ++i) {
    if (point_segment_distance(p, loop[i], loop[(i + 1) % n]) <= eps) {
      return false;
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

// Straight segment from m to a core corner, clear of the core sides except
// at the corner itself.
bool segment_reaches_corner(const Point& m, const Point& corner,
                            const std::array<GeodesicPath, 3>& sides,
                            double tol) {
  for (const GeodesicPath& g : sides) {
    const auto& pts = g.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Segment side_seg{pts[i], pts[i + 1]};
      if (segments_properly_intersect(Segment{m, corner}, side_seg)) return false;
      for (const Point& e : {side_seg.a, side_seg.b}) {
        if (point_on_segment(e, m, corner) && distance(e, corner) > tol &&
            distance(e, m) > tol) {
          return false;
        }
      }
      if (point_on_segment(m, side_seg.a, side_seg.b)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<IncenterWitness> incenter_witness(const SimplePolygon& poly,
                                                const Triangulation& /*tri*/,
                                                const JordanTriangle& t) {
  if (t.degenerate) throw DegenerateTriangle("incenter_witness: degenerate core");
  const double tol = rel_tol(poly.diameter(), 1e-9);
  const Point& pb = t.bifurcation_points[0];
  const Point& qb = t.bifurcation_points[1];
  const Point& rb = t.bifurcation_points[2];

  std::vector<Point> loop;
  for (const GeodesicPath& g : t.core_sides) {
    const auto& pts = g.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) loop.push_back(pts[i]);
  }
  if (loop.size() < 3) return std::nullopt;

  std::vector<Point> candidates;
  {
    // Incenter of the straight triangle on the bifurcation points.
    const double a = distance(qb, rb);
    const double b = distance(rb, pb);
    const double c = distance(pb, qb);
    if (a + b + c > 0) {
      candidates.push_back((pb * a + qb * b + rb * c) * (1.0 / (a + b + c)));
    }
    // Centroid of the core loop vertices.
    Point centroid{0, 0};
    for (const Point& v : loop) centroid = centroid + v;
    candidates.push_back(centroid * (1.0 / static_cast<double>(loop.size())));
  }
  Point lo = loop[0], hi = loop[0];
  for (const Point& v : loop) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  constexpr int kGrid = 24;
  for (int i = 1; i < kGrid; ++i) {
    for (int j = 1; j < kGrid; ++j) {
      candidates.push_back({lo.x + (hi.x - lo.x) * i / kGrid,
                            lo.y + (hi.y - lo.y) * j / kGrid});
    }
  }

  const double len_gamma = t.gamma().total_length();
  const double len_rho = t.rho().total_length();
  const double len_tau = t.tau().total_length();
  for (const Point& m : candidates) {
    if (!point_strictly_in_loop(loop, m, tol)) continue;
    if (!segment_reaches_corner(m, pb, t.core_sides, tol) ||
        !segment_reaches_corner(m, qb, t.core_sides, tol) ||
        !segment_reaches_corner(m, rb, t.core_sides, tol)) {
      continue;
    }
    const double dp = distance(m, pb);
    const double dq = distance(m, qb);
    const double dr = distance(m, rb);
    IncenterWitness w;
    w.m = m;
    w.segment_sums = {dp + dq, dq + dr, dr + dp};  // vs gamma, rho, tau
    if (len_gamma <= dp + dq + tol && len_rho <= dq + dr + tol &&
        len_tau <= dr + dp + tol) {
      return w;
    }
  }
  return std::nullopt;
}

// --- delta estimation -----------------------------------------------------------

namespace {

// Min intrinsic distance from x to points of `side`: coarse scan plus a few
// rounds of windowed densification around the best parameter.
double min_distance_to_side(const SimplePolygon& poly, const Triangulation& tri,
                            const Point& x, const GeodesicPath& side,
                            int coarse) {
  const double len = side.total_length();
  if (len == 0.0) {
    return shortest_path(poly, tri, x, side.source()).total_length();
  }
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (int j = 0; j < coarse; ++j) {
    const double s = len * j / (coarse - 1);
    const double d =
        shortest_path(poly, tri, x, side.point_at_arclength(s)).total_length();
    if (d < best) {
      best = d;
      best_s = s;
    }
  }
  double window = len / (coarse - 1);
  for (int round = 0; round < 6; ++round) {
    const double s0 = std::max(0.0, best_s - window);
    const double s1 = std::min(len, best_s + window);
    for (int j = 0; j <= 8; ++j) {
      const double s = s0 + (s1 - s0) * j / 8.0;
      const double d = shortest_path(poly, tri, x, side.point_at_arclength(s))
                           .total_length();
      if (d < best) {
        best = d;
        best_s = s;
      }
    }
    window *= 0.25;
  }
  return best;
}

// Hull-vertex triple maximizing the min pairwise distance.
std::array<Point, 3> extremal_triangle(const SimplePolygon& poly) {
  const std::vector<Point> hull = convex_hull(poly.vertices());
  const int h = static_cast<int>(hull.size());
  std::array<Point, 3> best{hull[0], hull[1 % h], hull[2 % h]};
  double best_score = -1.0;
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      for (int k = j + 1; k < h; ++k) {
        const double score =
            std::min({distance(hull[i], hull[j]), distance(hull[j], hull[k]),
                      distance(hull[k], hull[i])});
        if (score > best_score) {
          best_score = score;
          best = {hull[i], hull[j], hull[k]};
        }
      }
    }
  }
  return best;
}

}  // namespace

DeltaEstimate estimate_delta(const SimplePolygon& poly,
                             const Triangulation& tri,
                             const DeltaSamplerConfig& config) {
  if (config.points_per_side < 2 || config.triangle_count < 0) {
    throw InvalidParameter("estimate_delta: bad sampler config");
  }
  DeltaEstimate est;
  est.bound = std::numbers::sqrt3 * poly.diameter() / 4.0;

  std::vector<std::array<Point, 3>> triangles;
  if (config.include_extremal_triangle && poly.size() >= 3) {
    triangles.push_back(extremal_triangle(poly));
  }
  Rng rng(config.seed);
  for (int i = 0; i < config.triangle_count; ++i) {
    triangles.push_back({random_interior_point(poly, rng),
                         random_interior_point(poly, rng),
                         random_interior_point(poly, rng)});
  }

  for (const auto& tv : triangles) {
    std::array<GeodesicPath, 3> sides{
        shortest_path(poly, tri, tv[0], tv[1]),
        shortest_path(poly, tri, tv[1], tv[2]),
        shortest_path(poly, tri, tv[2], tv[0])};
    for (int side = 0; side < 3; ++side) {
      const GeodesicPath& g = sides[side];
      for (int j = 0; j < config.points_per_side; ++j) {
        const double s = g.total_length() * j / (config.points_per_side - 1);
        const Point x = g.point_at_arclength(s);
        const double d = std::min(
            min_distance_to_side(poly, tri, x, sides[(side + 1) % 3],
                                 config.points_per_side),
            min_distance_to_side(poly, tri, x, sides[(side + 2) % 3],
                                 config.points_per_side));
        ++est.samples;
        if (d > est.delta_lower) {
          est.delta_lower = d;
          est.witness_triangle = tv;
          est.witness_point = x;
        }
      }
    }
  }
  est.ok = est.delta_lower <= est.bound + rel_tol(poly.diameter(), 1e-7);
  return est;
}

// --- distance convexity ----------------------------------------------------------

ConvexityReport check_distance_convexity(const SimplePolygon& poly,
                                         const Triangulation& tri,
                                         const GeodesicPath& g1,
                                         const GeodesicPath& g2, int n) {
  if (n < 3) throw InvalidParameter("check_distance_convexity: n must be >= 3");
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) {
    const double ti = static_cast<double>(i) / (n - 1);
    f[i] = shortest_path(poly, tri,
                         g1.point_at_arclength(ti * g1.total_length()),
                         g2.point_at_arclength(ti * g2.total_length()))
               .total_length();
  }
  ConvexityReport report;
  report.samples = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; j += 2) {
      const double mid = f[(i + j) / 2];
      const double violation = mid - 0.5 * (f[i] + f[j]);
      report.max_violation = std::max(report.max_violation, violation);
    }
  }
  report.ok = report.max_violation <= rel_tol(poly.diameter(), 1e-7);
  return report;
}

}  // namespace jordangeo
