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

#include "jordangeo/geom.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "jordangeo/errors.hpp"
#include "jordangeo/rng.hpp"

namespace jordangeo {
namespace {

TEST(Orient, BasicSigns) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {2, 0}), 0);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {1, -1}), -1);
}

TEST(Orient, SnapsNearDegenerate) {
  // Off the line by far less than the documented error bound.
  EXPECT_EQ(orient({0, 0}, {1, 0}, {2, 1e-14}), 0);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {2, 1e-10}), 1);
}

TEST(Orient, AntisymmetricUnderSwaps) {
  Rng rng(123);
  for (int i = 0; i < 2000; ++i) {
    const Point a{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Point b{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Point c{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    EXPECT_EQ(orient(a, b, c), -orient(b, a, c));
    EXPECT_EQ(orient(a, b, c), -orient(a, c, b));
    EXPECT_EQ(orient(a, b, c), orient(b, c, a));
  }
}

TEST(TurningAngle, QuarterTurns) {
  EXPECT_NEAR(turning_angle({1, 0}, {0, 1}), std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(turning_angle({1, 0}, {1, 0}), 0.0);
  EXPECT_NEAR(turning_angle({1, 0}, {0, -1}), -std::numbers::pi / 2, 1e-15);
}

TEST(TurningAngle, ReversalIsPlusPi) {
  EXPECT_EQ(turning_angle({1, 0}, {-1, 0}), std::numbers::pi);
  EXPECT_EQ(turning_angle({0, 1}, {0, -1}), std::numbers::pi);
}

TEST(TurningAngle, ZeroDirectionThrows) {
  EXPECT_THROW(turning_angle({0, 0}, {1, 0}), InvalidParameter);
  EXPECT_THROW(turning_angle({1, 0}, {0, 0}), InvalidParameter);
}

TEST(TurningAngle, AntisymmetricOffCollinear) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Point u{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point v{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    if (norm(u) < 1e-3 || norm(v) < 1e-3) continue;
    const double a = turning_angle(u, v);
    if (std::fabs(a) > 1e-9 && std::fabs(a) < std::numbers::pi - 1e-9) {
      EXPECT_DOUBLE_EQ(a, -turning_angle(v, u));
    }
  }
}

TEST(ProperIntersection, Basics) {
  EXPECT_TRUE(segments_properly_intersect({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
  EXPECT_FALSE(segments_properly_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));
  EXPECT_FALSE(segments_properly_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
}

TEST(ProperIntersection, EndpointTouchIsNotProper) {
  EXPECT_FALSE(segments_properly_intersect({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
  // T-junction: endpoint in the other segment's interior.
  EXPECT_FALSE(segments_properly_intersect({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}));
}

TEST(ProperIntersection, CollinearOverlapIsNotProper) {
  EXPECT_FALSE(segments_properly_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));
}

TEST(ProperIntersection, Symmetric) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const Segment s1{{rng.uniform(0, 1), rng.uniform(0, 1)},
                     {rng.uniform(0, 1), rng.uniform(0, 1)}};
    const Segment s2{{rng.uniform(0, 1), rng.uniform(0, 1)},
                     {rng.uniform(0, 1), rng.uniform(0, 1)}};
    EXPECT_EQ(segments_properly_intersect(s1, s2),
              segments_properly_intersect(s2, s1));
  }
}

TEST(SegmentsTouch, DetectsAllContactKinds) {
  EXPECT_TRUE(segments_touch({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));   // cross
  EXPECT_TRUE(segments_touch({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));   // endpoint
  EXPECT_TRUE(segments_touch({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));   // overlap
  EXPECT_FALSE(segments_touch({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));  // disjoint
}

TEST(PointSegmentDistance, ClampsToEndpoints) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {0, 0}, {2, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({-3, 4}, {0, 0}, {2, 0}), 5.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({1, 0}, {0, 0}, {2, 0}), 0.0);
}

}  // namespace
}  // namespace jordangeo
