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

#ifndef JORDANGEO_GEODESIC_HPP_
#define JORDANGEO_GEODESIC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jordangeo/polygon.hpp"

namespace jordangeo {

// Turns below this are merged away when canonicalizing polylines.
inline constexpr double kZeroTurnEps = 1e-10;

// Polyline realization of an intrinsic geodesic, arclength-parametrized.
// Interior vertices of a path produced by shortest_path are reflex polygon
// vertices with a strictly nonzero turn.
class GeodesicPath {
 public:
  GeodesicPath() = default;
  explicit GeodesicPath(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& cumulative_arclength() const { return cum_; }
  double total_length() const { return cum_.empty() ? 0.0 : cum_.back(); }
  const Point& source() const { return points_.front(); }
  const Point& target() const { return points_.back(); }
  bool is_degenerate() const { return points_.size() == 1; }

  // gamma(s) by linear interpolation; throws ArclengthOutOfRange.
  Point point_at_arclength(double s) const;

  GeodesicPath reversed() const;

  // Sub-path between two arclengths, endpoints interpolated.
  GeodesicPath slice(double s_begin, double s_end) const;

 private:
  std::vector<Point> points_;
  std::vector<double> cum_;
};

// Merges consecutive duplicates and interior vertices whose turn magnitude
// is below kZeroTurnEps.
std::vector<Point> canonicalize_polyline(std::vector<Point> pts);

// The unique shortest path from p to q in the closed polygon, via the funnel
// algorithm over the triangulation sleeve. Points within boundary tolerance
// are snapped onto the boundary; anything farther out throws
// PointOutsideDomain.
GeodesicPath shortest_path(const SimplePolygon& poly, const Triangulation& tri,
                           const Point& p, const Point& q);

Point point_at_arclength(const GeodesicPath& path, double s);

// Snaps a query point onto the boundary when within tolerance; throws
// PointOutsideDomain beyond it. Shared by the funnel and the oracle so both
// engines answer on identical inputs.
Point prepare_query_point(const SimplePolygon& poly, const Point& p);

struct TautViolation {
  int vertex_index;  // index into path.points()
  std::string reason;
};

struct TautReport {
  bool ok = true;
  std::vector<TautViolation> violations;
};

// Checks the discrete local-geodesic condition at every interior polyline
// vertex: the vertex is a reflex polygon vertex and the two branches span an
// angle >= pi inside the domain wedge (half-disk support).
TautReport validate_taut(const SimplePolygon& poly, const GeodesicPath& path);

enum class ChordSide { kA, kB, kOn };

// Which component of J minus the chord contains x. Component A is the one
// bounded by the CCW boundary arc from chord.a to chord.b.
ChordSide side_of_chord(const SimplePolygon& poly, const Chord& chord,
                        const Point& x);

struct SeparationCounterexample {
  Chord chord;
  Point path_point;
};

struct SeparationReport {
  bool ok = true;
  int chords_checked = 0;
  int points_checked = 0;
  std::vector<SeparationCounterexample> counterexamples;
};

// Falsification-style test of the separation criterion: no chord may place a
// point of the geodesic in the component away from both endpoints. Throws
// InvalidChord if a supplied chord fails is_chord.
SeparationReport check_separation(const SimplePolygon& poly,
                                  const GeodesicPath& path,
                                  const std::vector<Chord>& chords);

// Candidate chords for sampling: boundary-vertex pairs that form chords
// (up to `cap`) plus the window chords obtained by extending the two edges
// at each reflex vertex until they exit through the boundary.
std::vector<Chord> sample_chords(const SimplePolygon& poly, int cap = 200);

// Best-effort witness for the "only if" direction: searches the sampled
// chords for one separating x from both ends of the geodesic from a to b.
std::optional<Chord> find_separating_chord(const SimplePolygon& poly,
                                           const Point& x, const Point& a,
                                           const Point& b, int cap = 200);

}  // namespace jordangeo

#endif  // JORDANGEO_GEODESIC_HPP_
