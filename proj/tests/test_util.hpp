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

#ifndef JORDANGEO_TESTS_TEST_UTIL_HPP_
#define JORDANGEO_TESTS_TEST_UTIL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"
#include "jordangeo/rng.hpp"

namespace jordangeo::testutil {

struct Fixture {
  std::string name;
  SimplePolygon poly;
  Triangulation tri;
};

// The generator gallery the certification suites sweep over.
inline std::vector<Fixture> gallery() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, SimplePolygon poly) {
    Triangulation tri = triangulate(poly);
    out.push_back({std::move(name), std::move(poly), std::move(tri)});
  };
  add("square", make_square());
  add("l_shape", make_l_shape());
  add("equilateral", make_equilateral(1.0));
  add("comb4", make_comb(4));
  add("spiral3", make_spiral(3));
  add("koch3", make_koch_prefix(3));
  return out;
}

inline bool same_polyline(const std::vector<Point>& a,
                          const std::vector<Point>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (distance(a[i], b[i]) > tol) return false;
  }
  return true;
}

}  // namespace jordangeo::testutil

#endif  // JORDANGEO_TESTS_TEST_UTIL_HPP_
