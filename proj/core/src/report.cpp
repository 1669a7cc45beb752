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

#include "jordangeo/report.hpp"

#include <cinttypes>
#include <cstdio>

#include "jordangeo/errors.hpp"

namespace jordangeo {

namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const ordered_json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in;
        out += ordered_json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump_rec(j[i], out, indent, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format17(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json17(const ordered_json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

// --- digest -----------------------------------------------------------------

Digest& Digest::add(const std::string& s) {
  for (unsigned char c : s) {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
  state_ ^= '|';
  state_ *= 0x100000001b3ULL;
  return *this;
}

Digest& Digest::add(double v) { return add(format17(v)); }

Digest& Digest::add(std::int64_t v) { return add(std::to_string(v)); }

Digest& Digest::add(const SimplePolygon& poly) {
  add(static_cast<std::int64_t>(poly.size()));
  for (const Point& p : poly.vertices()) add(p);
  return *this;
}

std::string Digest::hex() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, state_);
  return buf;
}

// --- report -----------------------------------------------------------------

ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["inputs_digest"] = r.inputs_digest;
  j["metrics"] = r.metrics;
  j["ok"] = r.ok;
  j["witness"] = r.witness.is_null() ? ordered_json::object() : r.witness;
  return j;
}

// --- file formats --------------------------------------------------------------

SimplePolygon polygon_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InvalidParameter("polygon json: missing \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InvalidParameter("polygon json: vertex must be [x, y]");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  const bool keep_collinear =
      j.contains("keep_collinear") && j["keep_collinear"].is_boolean() &&
      j["keep_collinear"].get<bool>();
  return validate(pts, keep_collinear);
}

ordered_json polygon_to_json(const SimplePolygon& poly) {
  ordered_json verts = ordered_json::array();
  for (const Point& p : poly.vertices()) {
    verts.push_back(ordered_json::array({p.x, p.y}));
  }
  ordered_json j;
  j["vertices"] = verts;
  return j;
}

RefinementFamily family_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("generator") || !j.contains("levels")) {
    throw InvalidParameter("family manifest: need \"generator\" and \"levels\"");
  }
  const std::string generator = j["generator"].get<std::string>();
  const int levels = j["levels"].get<int>();
  if (j.contains("target_path") &&
      j["target_path"].get<std::string>() != "deep-vertex-rule") {
    throw InvalidParameter("family manifest: unknown target_path rule");
  }
  RefinementFamily family;
  if (generator == "koch_prefix") {
    family = make_koch_family(levels);
  } else if (generator == "square") {
    family = make_square_family(levels);
  } else {
    throw InvalidParameter("family manifest: unknown generator " + generator);
  }
  if (j.contains("basepoint")) {
    const auto& b = j["basepoint"];
    if (!b.is_array() || b.size() != 2) {
      throw InvalidParameter("family manifest: basepoint must be [x, y]");
    }
    const Point basepoint{b[0].get<double>(), b[1].get<double>()};
    for (const SimplePolygon& level : family.levels) {
      if (level.locate(basepoint) != PointLocation::kInside) {
        throw InvalidParameter(
            "family manifest: basepoint not interior to every level");
      }
    }
    family.basepoint = basepoint;
  }
  return family;
}

// --- typed reports ---------------------------------------------------------------

ordered_json point_to_json(const Point& p) {
  return ordered_json::array({p.x, p.y});
}

ordered_json path_to_json(const GeodesicPath& path) {
  ordered_json pts = ordered_json::array();
  for (const Point& p : path.points()) pts.push_back(point_to_json(p));
  ordered_json j;
  j["length"] = path.total_length();
  j["vertices"] = pts;
  return j;
}

ordered_json to_json(const ThinnessReport& r) {
  ordered_json j;
  j["max_excess"] = r.max_excess;
  j["pairs_checked"] = r.pairs_checked;
  j["worst_x"] = point_to_json(r.worst_x);
  j["worst_y"] = point_to_json(r.worst_y);
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const SideConvexityReport& r) {
  ordered_json j;
  j["per_side_total_turn"] = ordered_json::array(
      {r.per_side_total_turn[0], r.per_side_total_turn[1],
       r.per_side_total_turn[2]});
  j["sign_consistent"] = r.sign_consistent;
  j["per_side_ok"] = r.per_side_ok;
  j["sum_bound_ok"] = r.sum_bound_ok;
  j["angle_sum"] = r.angle_sum;
  j["angle_sum_ok"] = r.angle_sum_ok;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const PerimeterReport& r) {
  ordered_json j;
  j["core_perimeter"] = r.core_perimeter;
  j["bound_4d"] = r.bound_4d;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const DeltaEstimate& r) {
  ordered_json j;
  j["delta_lower"] = r.delta_lower;
  j["bound"] = r.bound;
  j["samples"] = r.samples;
  j["witness_triangle"] = ordered_json::array({point_to_json(r.witness_triangle[0]),
                                               point_to_json(r.witness_triangle[1]),
                                               point_to_json(r.witness_triangle[2])});
  j["witness_point"] = point_to_json(r.witness_point);
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const ConvexityReport& r) {
  ordered_json j;
  j["max_violation"] = r.max_violation;
  j["samples"] = r.samples;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const SeparationReport& r) {
  ordered_json j;
  j["chords_checked"] = r.chords_checked;
  j["points_checked"] = r.points_checked;
  ordered_json ce = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ordered_json item;
    item["chord"] = ordered_json::array({point_to_json(c.chord.a),
                                         point_to_json(c.chord.b)});
    item["path_point"] = point_to_json(c.path_point);
    ce.push_back(item);
  }
  j["counterexamples"] = ce;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const TautReport& r) {
  ordered_json j;
  ordered_json v = ordered_json::array();
  for (const auto& viol : r.violations) {
    ordered_json item;
    item["vertex_index"] = viol.vertex_index;
    item["reason"] = viol.reason;
    v.push_back(item);
  }
  j["violations"] = v;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const CoincidenceReport& r) {
  ordered_json j;
  j["onset_p1"] = r.onset_p1;
  j["onset_p2"] = r.onset_p2;
  j["sum_at_onset"] = r.sum_at_onset;
  j["bound_4d"] = r.bound_4d;
  j["tail_length"] = r.tail_length;
  j["interior_segment"] = r.interior_segment;
  j["ok"] = r.ok;
  return j;
}

ordered_json to_json(const JordanTriangle& t) {
  ordered_json j;
  j["outer_vertices"] = ordered_json::array({point_to_json(t.outer_vertices[0]),
                                             point_to_json(t.outer_vertices[1]),
                                             point_to_json(t.outer_vertices[2])});
  j["bifurcation_points"] =
      ordered_json::array({point_to_json(t.bifurcation_points[0]),
                           point_to_json(t.bifurcation_points[1]),
                           point_to_json(t.bifurcation_points[2])});
  j["degenerate"] = t.degenerate;
  j["core_perimeter"] = t.core_perimeter;
  j["tail_lengths"] = ordered_json::array({t.tails[0].total_length(),
                                           t.tails[1].total_length(),
                                           t.tails[2].total_length()});
  j["side_lengths"] = ordered_json::array({t.sides[0].total_length(),
                                           t.sides[1].total_length(),
                                           t.sides[2].total_length()});
  return j;
}

}  // namespace jordangeo
