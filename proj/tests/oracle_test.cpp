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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "jordangeo/errors.hpp"
#include "test_util.hpp"

namespace jordangeo {
namespace {

TEST(BuildVisibility, ConvexPolygonIsCompleteGraph) {
  const SimplePolygon poly = make_square();
  const VisibilityGraph g = build_visibility(poly, {});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) EXPECT_TRUE(g.adjacent(i, j));
    }
  }
}

TEST(BuildVisibility, LShapeVisibility) {
  const SimplePolygon poly = make_l_shape();
  const VisibilityGraph g = build_visibility(poly, {});
  const int v20 = g.find_node({2, 0});
  const int v02 = g.find_node({0, 2});
  const int v11 = g.find_node({1, 1});
  ASSERT_GE(v20, 0);
  ASSERT_GE(v02, 0);
  ASSERT_GE(v11, 0);
  // The notch corner sees everything.
  EXPECT_TRUE(g.adjacent(v20, v11));
  EXPECT_TRUE(g.adjacent(v02, v11));
  // The diagonal (2,0)-(0,2) grazes the reflex corner exactly and stays in
  // the closed domain, so it is visible under the closed-domain convention.
  EXPECT_TRUE(g.adjacent(v20, v02));
}

TEST(BuildVisibility, BlockedByNotch) {
  const SimplePolygon poly = make_l_shape();
  const VisibilityGraph g = build_visibility(poly, {{1.9, 0.5}, {0.5, 1.9}});
  const int a = g.find_node({1.9, 0.5});
  const int b = g.find_node({0.5, 1.9});
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  EXPECT_FALSE(g.adjacent(a, b));
}

TEST(BuildVisibility, AdjacentBoundaryVerticesAreVisible) {
  for (const auto& f : testutil::gallery()) {
    const VisibilityGraph g = build_visibility(f.poly, {});
    const int n = f.poly.size();
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(g.adjacent(i, (i + 1) % n)) << f.name << " edge " << i;
    }
  }
}

TEST(BuildVisibility, OutsideExtraPointThrows) {
  EXPECT_THROW(build_visibility(make_square(), {{3, 3}}), PointOutsideDomain);
}

TEST(OracleShortestPath, ConvexStraight) {
  const SimplePolygon poly = make_square();
  const GeodesicPath path = oracle_path(poly, {0.1, 0.1}, {0.9, 0.9});
  EXPECT_EQ(path.points().size(), 2u);
  EXPECT_NEAR(path.total_length(), 0.8 * std::numbers::sqrt2, 1e-12);
}

TEST(OracleShortestPath, LShapeViaNotch) {
  const SimplePolygon poly = make_l_shape();
  const GeodesicPath path = oracle_path(poly, {1.9, 0.5}, {0.5, 1.9});
  ASSERT_EQ(path.points().size(), 3u);
  EXPECT_EQ(path.points()[1], (Point{1, 1}));
  EXPECT_NEAR(path.total_length(), 2.0 * std::hypot(0.9, 0.5), 1e-12);
}

TEST(OracleShortestPath, IdenticalEndpoints) {
  const GeodesicPath path = oracle_path(make_square(), {0.4, 0.4}, {0.4, 0.4});
  EXPECT_EQ(path.total_length(), 0.0);
}

TEST(OracleShortestPath, Deterministic) {
  const SimplePolygon poly = make_comb(3);
  const GeodesicPath a = oracle_path(poly, {0.5, 2.5}, {4.5, 2.5});
  const GeodesicPath b = oracle_path(poly, {0.5, 2.5}, {4.5, 2.5});
  EXPECT_TRUE(testutil::same_polyline(a.points(), b.points(), 0.0));
}

TEST(OracleShortestPath, UnknownEndpointThrows) {
  const SimplePolygon poly = make_square();
  const VisibilityGraph g = build_visibility(poly, {{0.5, 0.5}});
  EXPECT_THROW(oracle_shortest_path(poly, g, {0.25, 0.25}, {0.5, 0.5}),
               InvalidParameter);
}

}  // namespace
}  // namespace jordangeo
