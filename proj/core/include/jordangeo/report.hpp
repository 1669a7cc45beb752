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

#ifndef JORDANGEO_REPORT_HPP_
#define JORDANGEO_REPORT_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "jordangeo/asymptotics.hpp"
#include "jordangeo/cat0.hpp"
#include "jordangeo/geodesic.hpp"
#include "jordangeo/polygon.hpp"

namespace jordangeo {

using ordered_json = nlohmann::ordered_json;

// Serializes with every float printed to 17 significant digits, so reports
// are reproducible byte for byte and round-trip exactly.
std::string dump_json17(const ordered_json& j, int indent = 2);

// FNV-1a over a canonical text rendering; keys check inputs across runs.
class Digest {
 public:
  Digest& add(double v);
  Digest& add(std::int64_t v);
  Digest& add(const std::string& s);
  Digest& add(const Point& p) { return add(p.x).add(p.y); }
  Digest& add(const SimplePolygon& poly);
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

struct CheckReport {
  std::string check;
  std::string inputs_digest;
  ordered_json metrics;
  bool ok = true;
  ordered_json witness;  // empty object when there is nothing to show
};

ordered_json to_json(const CheckReport& r);

// Polygon interchange format: {"vertices": [[x, y], ...]}, loop implicitly
// closed, orientation normalized on load.
SimplePolygon polygon_from_json(const ordered_json& j);
ordered_json polygon_to_json(const SimplePolygon& poly);

// Family manifest: {"generator": ..., "levels": k, "basepoint": [x, y],
// "target_path": "deep-vertex-rule"}.
RefinementFamily family_from_json(const ordered_json& j);

ordered_json point_to_json(const Point& p);
ordered_json path_to_json(const GeodesicPath& path);

ordered_json to_json(const ThinnessReport& r);
ordered_json to_json(const SideConvexityReport& r);
ordered_json to_json(const PerimeterReport& r);
ordered_json to_json(const DeltaEstimate& r);
ordered_json to_json(const ConvexityReport& r);
ordered_json to_json(const SeparationReport& r);
ordered_json to_json(const TautReport& r);
ordered_json to_json(const CoincidenceReport& r);
ordered_json to_json(const JordanTriangle& t);

}  // namespace jordangeo

#endif  // JORDANGEO_REPORT_HPP_
