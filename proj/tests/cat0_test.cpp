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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "jordangeo/errors.hpp"
#include "jordangeo/rng.hpp"
#include "test_util.hpp"

namespace jordangeo {
namespace {

TEST(Decompose, LShapeSharedPrefixAtP) {
  const SimplePolygon poly = make_l_shape();
  const Triangulation tri = triangulate(poly);
  // Both sides leaving p bend at the notch corner, so pbar is (1,1).
  const JordanTriangle t =
      decompose_triangle(poly, tri, {1.9, 0.1}, {0.5, 1.9}, {0.1, 1.9});
  ASSERT_FALSE(t.degenerate);
  EXPECT_NEAR(distance(t.bifurcation_points[0], {1, 1}), 0.0, 1e-12);
  EXPECT_NEAR(distance(t.bifurcation_points[1], {0.5, 1.9}), 0.0, 1e-12);
  EXPECT_NEAR(distance(t.bifurcation_points[2], {0.1, 1.9}), 0.0, 1e-12);
  EXPECT_NEAR(t.tails[0].total_length(), std::hypot(0.9, 0.9), 1e-12);
  EXPECT_EQ(t.tails[1].total_length(), 0.0);
  EXPECT_EQ(t.tails[2].total_length(), 0.0);
}

TEST(Decompose, ConvexTrianglesHaveTrivialTails) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.1, 0.1}, {0.9, 0.2}, {0.5, 0.8});
  ASSERT_FALSE(t.degenerate);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(t.tails[i].total_length(), 0.0);
    EXPECT_NEAR(distance(t.bifurcation_points[i], t.outer_vertices[i]), 0.0,
                1e-12);
  }
  EXPECT_NEAR(t.core_perimeter,
              t.sides[0].total_length() + t.sides[1].total_length() +
                  t.sides[2].total_length(),
              1e-12);
}

TEST(Decompose, CollinearTripleIsDegenerate) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.2, 0.2}, {0.5, 0.5}, {0.8, 0.8});
  EXPECT_TRUE(t.degenerate);
  EXPECT_EQ(t.core_perimeter, 0.0);
}

TEST(Decompose, ReassemblyReproducesSides) {
  for (const auto& f : testutil::gallery()) {
    Rng rng(555);
    for (int i = 0; i < 8; ++i) {
      const JordanTriangle t = decompose_triangle(
          f.poly, f.tri, random_interior_point(f.poly, rng),
          random_interior_point(f.poly, rng), random_interior_point(f.poly, rng));
      if (t.degenerate) continue;
      // side pq = tail at p + gamma + reverse(tail at q), as polylines.
      for (int side = 0; side < 3; ++side) {
        std::vector<Point> rebuilt = t.tails[side].points();
        for (const Point& p : t.core_sides[side].points()) rebuilt.push_back(p);
        const auto& back_tail = t.tails[(side + 1) % 3].points();
        for (auto it = back_tail.rbegin(); it != back_tail.rend(); ++it) {
          rebuilt.push_back(*it);
        }
        EXPECT_TRUE(testutil::same_polyline(
            canonicalize_polyline(rebuilt),
            canonicalize_polyline(t.sides[side].points()),
            1e-9 * f.poly.diameter()))
            << f.name << " side " << side;
      }
    }
  }
}

TEST(ComparisonTriangle, PythagoreanEmbedding) {
  JordanTriangle t;
  t.sides = {GeodesicPath({{0, 0}, {3, 0}}), GeodesicPath({{3, 0}, {3, 4}}),
             GeodesicPath({{3, 4}, {0, 0}})};
  const ComparisonTriangle ct = comparison_triangle(t);
  EXPECT_FALSE(ct.degenerate);
  const double area =
      0.5 * std::fabs(cross(ct.embedded[1] - ct.embedded[0],
                            ct.embedded[2] - ct.embedded[0]));
  EXPECT_NEAR(area, 6.0, 1e-12);
}

TEST(ComparisonTriangle, EquilateralAltitude) {
  JordanTriangle t;
  const double h = std::numbers::sqrt3 / 2;
  t.sides = {GeodesicPath({{0, 0}, {1, 0}}), GeodesicPath({{1, 0}, {0.5, h}}),
             GeodesicPath({{0.5, h}, {0, 0}})};
  const ComparisonTriangle ct = comparison_triangle(t);
  EXPECT_NEAR(ct.embedded[2].y, h, 1e-12);
}

TEST(ComparisonTriangle, DegenerateLengthsEmbedCollinear) {
  JordanTriangle t;
  t.sides = {GeodesicPath({{0, 0}, {1, 0}}), GeodesicPath({{1, 0}, {3, 0}}),
             GeodesicPath({{3, 0}, {0, 0}})};
  const ComparisonTriangle ct = comparison_triangle(t);
  EXPECT_TRUE(ct.degenerate);
  EXPECT_NEAR(ct.embedded[2].y, 0.0, 1e-12);
}

TEST(ComparisonTriangle, RealizesSideLengthsExactly) {
  for (const auto& f : testutil::gallery()) {
    Rng rng(808);
    for (int i = 0; i < 10; ++i) {
      const JordanTriangle t = decompose_triangle(
          f.poly, f.tri, random_interior_point(f.poly, rng),
          random_interior_point(f.poly, rng), random_interior_point(f.poly, rng));
      const ComparisonTriangle ct = comparison_triangle(t);
      for (int side = 0; side < 3; ++side) {
        const double want = ct.side_lengths[side];
        const double got =
            distance(ct.embedded[side], ct.embedded[(side + 1) % 3]);
        EXPECT_NEAR(got, want, 1e-12 * std::max(1.0, want)) << f.name;
      }
      // Comparison points at the shared vertices coincide.
      EXPECT_EQ(ct.comparison_point(0, ct.side_lengths[0]),
                ct.comparison_point(1, 0.0));
    }
  }
}

TEST(Thinness, EuclideanTriangleHasNoExcess) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.1, 0.1}, {0.9, 0.2}, {0.5, 0.8});
  const ThinnessReport r = check_thinness(poly, tri, t, 8);
  EXPECT_TRUE(r.ok);
  EXPECT_NEAR(r.max_excess, 0.0, 1e-12);
}

TEST(Thinness, LShapeTriangleIsThin) {
  const SimplePolygon poly = make_l_shape();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {1.8, 0.2}, {0.2, 1.8}, {0.2, 0.2});
  const ThinnessReport r = check_thinness(poly, tri, t, 12);
  EXPECT_TRUE(r.ok);
  EXPECT_LE(r.max_excess, 1e-7 * poly.diameter());
}

TEST(Thinness, SpiralTrianglesAreThin) {
  const SimplePolygon poly = make_spiral(3);
  const Triangulation tri = triangulate(poly);
  Rng rng(4242);
  for (int i = 0; i < 3; ++i) {
    const JordanTriangle t = decompose_triangle(
        poly, tri, random_interior_point(poly, rng),
        random_interior_point(poly, rng), random_interior_point(poly, rng));
    const ThinnessReport r = check_thinness(poly, tri, t, 8);
    EXPECT_TRUE(r.ok) << "max_excess=" << r.max_excess;
  }
}

TEST(Thinness, RejectsBadSampleCount) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.1, 0.1}, {0.9, 0.2}, {0.5, 0.8});
  EXPECT_THROW(check_thinness(poly, tri, t, 1), InvalidParameter);
}

TEST(SideConvexity, EuclideanTriangleAngles) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.1, 0.1}, {0.9, 0.2}, {0.5, 0.8});
  const SideConvexityReport r = check_side_convexity(t);
  EXPECT_TRUE(r.ok);
  for (double turn : r.per_side_total_turn) EXPECT_EQ(turn, 0.0);
  EXPECT_NEAR(r.angle_sum, std::numbers::pi, 1e-12);
}

TEST(SideConvexity, BendingSideTurnsNonPositive) {
  const SimplePolygon poly = make_l_shape();
  const Triangulation tri = triangulate(poly);
  // The pq side is blocked by the notch and genuinely bends at (1,1).
  const JordanTriangle t =
      decompose_triangle(poly, tri, {1.9, 0.3}, {0.3, 1.9}, {0.2, 0.2});
  ASSERT_FALSE(t.degenerate);
  const SideConvexityReport r = check_side_convexity(t);
  EXPECT_TRUE(r.ok);
  // The side hugging the notch has a strictly negative total turn.
  const double min_turn = std::min({r.per_side_total_turn[0],
                                    r.per_side_total_turn[1],
                                    r.per_side_total_turn[2]});
  EXPECT_LT(min_turn, -1e-6);
  const double sum = r.per_side_total_turn[0] + r.per_side_total_turn[1] +
                     r.per_side_total_turn[2];
  EXPECT_GE(sum, -std::numbers::pi - 1e-9);
  EXPECT_LE(r.angle_sum, 2 * std::numbers::pi + 1e-9);
}

TEST(SideConvexity, CombTriangleSignsConsistent) {
  const SimplePolygon poly = make_comb(4);
  const Triangulation tri = triangulate(poly);
  Rng rng(99);
  int nondegenerate = 0;
  for (int i = 0; i < 10; ++i) {
    const JordanTriangle t = decompose_triangle(
        poly, tri, random_interior_point(poly, rng),
        random_interior_point(poly, rng), random_interior_point(poly, rng));
    if (t.degenerate) continue;
    ++nondegenerate;
    const SideConvexityReport r = check_side_convexity(t);
    EXPECT_TRUE(r.sign_consistent);
    EXPECT_TRUE(r.ok);
  }
  EXPECT_GT(nondegenerate, 0);
}

TEST(SideConvexity, DegenerateThrows) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.2, 0.2}, {0.5, 0.5}, {0.8, 0.8});
  EXPECT_THROW(check_side_convexity(t), DegenerateTriangle);
  EXPECT_THROW(incenter_witness(poly, tri, t), DegenerateTriangle);
}

TEST(PerimeterBound, HoldsOnGallery) {
  for (const auto& f : testutil::gallery()) {
    Rng rng(1234);
    for (int i = 0; i < 6; ++i) {
      const JordanTriangle t = decompose_triangle(
          f.poly, f.tri, random_interior_point(f.poly, rng),
          random_interior_point(f.poly, rng), random_interior_point(f.poly, rng));
      const PerimeterReport r = check_perimeter_bound(t, f.poly.diameter());
      EXPECT_TRUE(r.ok) << f.name << " perimeter=" << r.core_perimeter
                        << " bound=" << r.bound_4d;
    }
  }
}

TEST(PerimeterBound, DegenerateIsZero) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.2, 0.2}, {0.5, 0.5}, {0.8, 0.8});
  const PerimeterReport r = check_perimeter_bound(t, poly.diameter());
  EXPECT_EQ(r.core_perimeter, 0.0);
  EXPECT_TRUE(r.ok);
}

TEST(IncenterWitness, ConvexDomain) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {0.1, 0.1}, {0.9, 0.2}, {0.5, 0.8});
  const auto w = incenter_witness(poly, tri, t);
  ASSERT_TRUE(w.has_value());
  EXPECT_LE(t.gamma().total_length(), w->segment_sums[0] + 1e-9);
  EXPECT_LE(t.rho().total_length(), w->segment_sums[1] + 1e-9);
  EXPECT_LE(t.tau().total_length(), w->segment_sums[2] + 1e-9);
}

TEST(IncenterWitness, LShapeTriangle) {
  const SimplePolygon poly = make_l_shape();
  const Triangulation tri = triangulate(poly);
  const JordanTriangle t =
      decompose_triangle(poly, tri, {1.8, 0.2}, {0.2, 1.8}, {0.2, 0.2});
  ASSERT_FALSE(t.degenerate);
  EXPECT_TRUE(incenter_witness(poly, tri, t).has_value());
}

TEST(EstimateDelta, EquilateralApproachesSharpConstant) {
  const SimplePolygon poly = make_equilateral(1.0);
  const Triangulation tri = triangulate(poly);
  DeltaSamplerConfig config;
  config.triangle_count = 4;
  config.points_per_side = 64;
  config.seed = 31;
  const DeltaEstimate est = estimate_delta(poly, tri, config);
  EXPECT_TRUE(est.ok);
  EXPECT_GE(est.delta_lower, 0.42);
  EXPECT_LE(est.delta_lower, std::numbers::sqrt3 / 4 + 1e-7);
}

TEST(EstimateDelta, SquareStaysUnderBound) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  DeltaSamplerConfig config;
  config.triangle_count = 6;
  config.points_per_side = 16;
  config.seed = 7;
  const DeltaEstimate est = estimate_delta(poly, tri, config);
  EXPECT_TRUE(est.ok);
  EXPECT_LE(est.delta_lower,
            std::numbers::sqrt3 * poly.diameter() / 4 + 1e-7 * poly.diameter());
}

TEST(EstimateDelta, BadConfigThrows) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  DeltaSamplerConfig config;
  config.points_per_side = 1;
  EXPECT_THROW(estimate_delta(poly, tri, config), InvalidParameter);
}

TEST(DistanceConvexity, ParallelSegmentsAreLinear) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const GeodesicPath g1 = shortest_path(poly, tri, {0.1, 0.2}, {0.9, 0.2});
  const GeodesicPath g2 = shortest_path(poly, tri, {0.1, 0.8}, {0.9, 0.8});
  const ConvexityReport r = check_distance_convexity(poly, tri, g1, g2, 17);
  EXPECT_TRUE(r.ok);
  EXPECT_NEAR(r.max_violation, 0.0, 1e-12);
}

TEST(DistanceConvexity, CommonSourceInLShape) {
  const SimplePolygon poly = make_l_shape();
  const Triangulation tri = triangulate(poly);
  const GeodesicPath g1 = shortest_path(poly, tri, {1.9, 0.1}, {0.1, 1.9});
  const GeodesicPath g2 = shortest_path(poly, tri, {1.9, 0.1}, {0.5, 0.5});
  const ConvexityReport r = check_distance_convexity(poly, tri, g1, g2, 33);
  EXPECT_TRUE(r.ok) << "max_violation=" << r.max_violation;
}

TEST(DistanceConvexity, IdenticalGeodesicsAreZero) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const GeodesicPath g = shortest_path(poly, tri, {0.1, 0.1}, {0.9, 0.9});
  const ConvexityReport r = check_distance_convexity(poly, tri, g, g, 9);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.max_violation, 0.0);
}

TEST(DistanceConvexity, TooFewSamplesThrows) {
  const SimplePolygon poly = make_square();
  const Triangulation tri = triangulate(poly);
  const GeodesicPath g = shortest_path(poly, tri, {0.1, 0.1}, {0.9, 0.9});
  EXPECT_THROW(check_distance_convexity(poly, tri, g, g, 2), InvalidParameter);
}

}  // namespace
}  // namespace jordangeo
