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

// jordan-geo: intrinsic geodesics in simple polygons, Jordan-triangle
// decomposition, and the certification suites, as a command-line tool.
//
// Exit codes: 0 ok, 2 input error, 3 simplicity violation, 4 point outside
// the domain, 5 certification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jordangeo/cat0.hpp"
#include "jordangeo/errors.hpp"
#include "jordangeo/oracle.hpp"
#include "jordangeo/report.hpp"
#include "jordangeo/rng.hpp"
#include "jordangeo/svg.hpp"

namespace jg = jordangeo;
using jg::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSimplicity = 3;
constexpr int kExitOutside = 4;
constexpr int kExitCertification = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jg::InvalidParameter("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw jg::InvalidParameter("cannot write file: " + path);
  out << text;
}

jg::SimplePolygon load_polygon(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw jg::InvalidParameter(std::string("malformed JSON: ") + e.what());
  }
  return jg::polygon_from_json(j);
}

jg::Point parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw jg::InvalidParameter("point must be x,y: " + s);
  }
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw jg::InvalidParameter("point must be x,y: " + s);
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("JORDAN_GEO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw jg::InvalidParameter("JORDAN_GEO_SEED is not an integer");
    }
  }
  return 0;
}

// --- subcommands -----------------------------------------------------------

int cmd_validate(const std::string& input, const std::string& out) {
  const jg::SimplePolygon poly = load_polygon(input);
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "validate";
  j["vertex_count"] = poly.size();
  j["diameter"] = poly.diameter();
  j["area"] = poly.area();
  j["inputs_digest"] = jg::Digest().add(poly).hex();
  write_output(out, jg::dump_json17(j));
  return kExitOk;
}

int cmd_geodesic(const std::string& input, const std::string& p_str,
                 const std::string& q_str, const std::string& out,
                 const std::string& svg_path) {
  const jg::SimplePolygon poly = load_polygon(input);
  const jg::Triangulation tri = jg::triangulate(poly);
  const jg::Point p = parse_point(p_str);
  const jg::Point q = parse_point(q_str);
  const jg::GeodesicPath path = jg::shortest_path(poly, tri, p, q);

  ordered_json j;
  j["schema"] = 1;
  j["command"] = "geodesic";
  j["p"] = jg::point_to_json(path.source());
  j["q"] = jg::point_to_json(path.target());
  j["length"] = path.total_length();
  j["vertices"] = jg::path_to_json(path)["vertices"];
  write_output(out, jg::dump_json17(j));

  if (!svg_path.empty()) {
    jg::SvgScene scene;
    scene.polygon = poly;
    scene.geodesics.push_back(path);
    write_output(svg_path, jg::render_svg(scene));
  }
  return kExitOk;
}

struct CertifyOptions {
  std::string suite = "all";
  int triangles = 20;
  int samples_per_side = 12;
  int points_per_side = 24;
  std::uint64_t seed = 0;
  bool self_test_corrupt = false;
};

int cmd_certify(const std::string& input, const CertifyOptions& opt,
                const std::string& out) {
  const jg::SimplePolygon poly = load_polygon(input);
  const jg::Triangulation tri = jg::triangulate(poly);
  const double d = poly.diameter();
  const std::string digest = jg::Digest().add(poly).add(
      static_cast<std::int64_t>(opt.seed)).hex();

  const bool run_thin = opt.suite == "thin" || opt.suite == "all";
  const bool run_perimeter = opt.suite == "perimeter" || opt.suite == "all";
  const bool run_delta = opt.suite == "delta" || opt.suite == "all";
  const bool run_convexity = opt.suite == "convexity" || opt.suite == "all";
  const bool run_separation = opt.suite == "separation" || opt.suite == "all";
  if (!run_thin && !run_perimeter && !run_delta && !run_convexity &&
      !run_separation) {
    throw jg::InvalidParameter("unknown suite: " + opt.suite);
  }

  ordered_json j;
  j["schema"] = 1;
  j["command"] = "certify";
  j["suite"] = opt.suite;
  j["seed"] = opt.seed;
  j["triangles"] = opt.triangles;
  j["inputs_digest"] = digest;
  bool all_ok = true;

  if (run_thin || run_perimeter) {
    jg::Rng rng(opt.seed);
    ordered_json thin = ordered_json::array();
    ordered_json perim = ordered_json::array();
    ordered_json machinery = ordered_json::array();
    for (int i = 0; i < opt.triangles; ++i) {
      const jg::Point a = random_interior_point(poly, rng);
      const jg::Point b = random_interior_point(poly, rng);
      const jg::Point c = random_interior_point(poly, rng);
      const jg::JordanTriangle t = jg::decompose_triangle(poly, tri, a, b, c);
      if (run_thin) {
        const jg::ThinnessReport r =
            jg::check_thinness(poly, tri, t, opt.samples_per_side);
        ordered_json item = jg::to_json(r);
        item["sample"] = i;
        thin.push_back(item);
        all_ok = all_ok && r.ok;
      }
      if (run_perimeter) {
        const jg::PerimeterReport r = jg::check_perimeter_bound(t, d);
        ordered_json item = jg::to_json(r);
        item["sample"] = i;
        perim.push_back(item);
        all_ok = all_ok && r.ok;
        if (!t.degenerate) {
          const jg::SideConvexityReport sc = jg::check_side_convexity(t);
          ordered_json mitem = jg::to_json(sc);
          mitem["sample"] = i;
          machinery.push_back(mitem);
          all_ok = all_ok && sc.ok;
        }
      }
    }
    if (run_thin) j["thinness"] = thin;
    if (run_perimeter) {
      j["perimeter"] = perim;
      j["proof_machinery"] = machinery;
    }
  }

  if (run_delta) {
    jg::DeltaSamplerConfig config;
    config.triangle_count = opt.triangles;
    config.points_per_side = opt.points_per_side;
    config.seed = opt.seed;
    const jg::DeltaEstimate est = jg::estimate_delta(poly, tri, config);
    j["delta"] = jg::to_json(est);
    all_ok = all_ok && est.ok;
  }

  if (run_convexity) {
    jg::Rng rng(opt.seed + 1);
    ordered_json conv = ordered_json::array();
    for (int i = 0; i < opt.triangles; ++i) {
      const jg::GeodesicPath g1 = jg::shortest_path(
          poly, tri, random_interior_point(poly, rng),
          random_interior_point(poly, rng));
      const jg::GeodesicPath g2 = jg::shortest_path(
          poly, tri, random_interior_point(poly, rng),
          random_interior_point(poly, rng));
      const jg::ConvexityReport r =
          jg::check_distance_convexity(poly, tri, g1, g2, 33);
      ordered_json item = jg::to_json(r);
      item["sample"] = i;
      conv.push_back(item);
      all_ok = all_ok && r.ok;
    }
    j["convexity"] = conv;
  }

  if (run_separation) {
    jg::Rng rng(opt.seed + 2);
    const std::vector<jg::Chord> chords = jg::sample_chords(poly, 200);
    ordered_json sep = ordered_json::array();
    for (int i = 0; i < opt.triangles; ++i) {
      const jg::GeodesicPath g = jg::shortest_path(
          poly, tri, random_interior_point(poly, rng),
          random_interior_point(poly, rng));
      const jg::SeparationReport r = jg::check_separation(poly, g, chords);
      ordered_json item = jg::to_json(r);
      item["sample"] = i;
      sep.push_back(item);
      all_ok = all_ok && r.ok;
    }
    j["separation"] = sep;
  }

  if (opt.self_test_corrupt) {
    ordered_json item;
    item["check"] = "self_test_corruption";
    item["ok"] = false;
    j["self_test"] = item;
    all_ok = false;
  }

  j["ok"] = all_ok;
  write_output(out, jg::dump_json17(j));
  return all_ok ? kExitOk : kExitCertification;
}

int cmd_cone(const std::string& manifest_path, int level,
             const std::string& probe, double c_param, double eps,
             double radius, int samples, const std::string& out) {
  ordered_json manifest;
  try {
    manifest = ordered_json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw jg::InvalidParameter(std::string("malformed manifest: ") + e.what());
  }
  const jg::RefinementFamily family = jg::family_from_json(manifest);
  if (level < 0 || level >= static_cast<int>(family.levels.size())) {
    throw jg::InvalidParameter("level out of range for the family");
  }
  const jg::SimplePolygon& poly = family.levels[level];
  const jg::Triangulation tri = jg::triangulate(poly);
  const jg::Point target = family.targets[level];
  const jg::GeodesicPath ray =
      jg::shortest_path(poly, tri, family.basepoint, target);

  ordered_json j;
  j["schema"] = 1;
  j["command"] = "cone";
  j["generator"] = family.generator;
  j["level"] = level;
  j["basepoint"] = jg::point_to_json(family.basepoint);
  j["target"] = jg::point_to_json(target);
  j["ray_length"] = ray.total_length();

  if (probe == "disk_in_cone") {
    const double c_val = c_param > 0 ? c_param : 0.6 * ray.total_length();
    const double eps_val = eps > 0 ? eps : 0.05 * poly.diameter();
    const jg::ConeNeighborhood nbhd =
        jg::make_cone_neighborhood(ray, c_val, eps_val);
    const jg::DiskInConeResult r =
        jg::probe_disk_inside_cone(poly, tri, nbhd, samples);
    j["probe"] = "disk_in_cone";
    j["C"] = c_val;
    j["epsilon"] = eps_val;
    j["found"] = r.found;
    j["disk_radius"] = r.disk_radius;
    j["samples_tested"] = r.samples_tested;
    write_output(out, jg::dump_json17(j));
    return r.found ? kExitOk : kExitCertification;
  }
  if (probe == "cone_in_disk") {
    const double radius_val = radius > 0 ? radius : 0.1 * poly.diameter();
    const jg::ConeInDiskResult r = jg::probe_cone_inside_disk(
        poly, tri, family.basepoint, target, radius_val, samples);
    j["probe"] = "cone_in_disk";
    j["disk_radius"] = radius_val;
    j["found"] = r.found;
    j["C"] = r.C;
    j["epsilon"] = r.epsilon;
    j["samples_tested"] = r.samples_tested;
    j["members"] = r.members;
    write_output(out, jg::dump_json17(j));
    return r.found ? kExitOk : kExitCertification;
  }
  throw jg::InvalidParameter("unknown probe: " + probe);
}

int cmd_svg(const std::string& scene_path, const std::string& out) {
  ordered_json spec;
  try {
    spec = ordered_json::parse(read_file(scene_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw jg::InvalidParameter(std::string("malformed scene: ") + e.what());
  }
  if (!spec.is_object() || !spec.contains("polygon")) {
    throw jg::InvalidParameter("scene: missing \"polygon\"");
  }
  jg::SvgScene scene;
  if (spec["polygon"].is_string()) {
    scene.polygon = load_polygon(spec["polygon"].get<std::string>());
  } else {
    scene.polygon = jg::polygon_from_json(spec["polygon"]);
  }
  const jg::Triangulation tri = jg::triangulate(scene.polygon);

  if (spec.contains("geodesics")) {
    for (const auto& pair : spec["geodesics"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw jg::InvalidParameter("scene: geodesic entry must be [[x,y],[x,y]]");
      }
      const jg::Point a{pair[0][0].get<double>(), pair[0][1].get<double>()};
      const jg::Point b{pair[1][0].get<double>(), pair[1][1].get<double>()};
      scene.geodesics.push_back(jg::shortest_path(scene.polygon, tri, a, b));
    }
  }
  if (spec.contains("triangle")) {
    const auto& tv = spec["triangle"];
    if (!tv.is_array() || tv.size() != 3) {
      throw jg::InvalidParameter("scene: triangle must be three points");
    }
    scene.triangle = jg::decompose_triangle(
        scene.polygon, tri, {tv[0][0].get<double>(), tv[0][1].get<double>()},
        {tv[1][0].get<double>(), tv[1][1].get<double>()},
        {tv[2][0].get<double>(), tv[2][1].get<double>()});
  }
  if (spec.contains("circles")) {
    for (const auto& c : spec["circles"]) {
      scene.circles.push_back({{c["center"][0].get<double>(),
                                c["center"][1].get<double>()},
                               c["radius"].get<double>()});
    }
  }
  if (spec.contains("markers")) {
    for (const auto& m : spec["markers"]) {
      scene.markers.push_back({m[0].get<double>(), m[1].get<double>()});
    }
  }
  write_output(out, jg::render_svg(scene));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic geodesics and CAT(0) certifications in simple polygons"};
  app.require_subcommand(1);

  std::string input, out, p_str, q_str, svg_path;
  CertifyOptions cert;
  std::string probe = "disk_in_cone";
  int level = 0;
  double c_param = 0.0, eps = 0.0, radius = 0.0;
  int samples = 1024;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a polygon file");
  validate_cmd->add_option("input", input)->required();
  validate_cmd->add_option("--out", out);

  auto* geodesic_cmd =
      app.add_subcommand("geodesic", "Shortest path between two points");
  geodesic_cmd->add_option("input", input)->required();
  geodesic_cmd->add_option("--p", p_str)->required();
  geodesic_cmd->add_option("--q", q_str)->required();
  geodesic_cmd->add_option("--out", out);
  geodesic_cmd->add_option("--svg", svg_path);

  auto* certify_cmd =
      app.add_subcommand("certify", "Run certification suites");
  certify_cmd->add_option("input", input)->required();
  certify_cmd->add_option("--suite", cert.suite)
      ->check(CLI::IsMember({"thin", "perimeter", "delta", "convexity",
                             "separation", "all"}));
  certify_cmd->add_option("--triangles", cert.triangles);
  certify_cmd->add_option("--samples-per-side", cert.samples_per_side);
  certify_cmd->add_option("--points-per-side", cert.points_per_side);
  bool seed_set = false;
  certify_cmd->add_option("--seed", cert.seed)->each([&](const std::string&) {
    seed_set = true;
  });
  certify_cmd->add_flag("--self-test-corrupt", cert.self_test_corrupt)
      ->group("");  // harness self-test hook, hidden
  certify_cmd->add_option("--out", out);

  auto* cone_cmd = app.add_subcommand("cone", "Cone-topology probes");
  cone_cmd->add_option("manifest", input)->required();
  cone_cmd->add_option("--level", level);
  cone_cmd->add_option("--probe", probe)
      ->check(CLI::IsMember({"disk_in_cone", "cone_in_disk"}));
  cone_cmd->add_option("--C", c_param);
  cone_cmd->add_option("--eps", eps);
  cone_cmd->add_option("--radius", radius);
  cone_cmd->add_option("--samples", samples);
  cone_cmd->add_option("--out", out);

  auto* svg_cmd = app.add_subcommand("svg", "Render a figure scene");
  svg_cmd->add_option("scene", input)->required();
  svg_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (!seed_set) cert.seed = default_seed();
    if (validate_cmd->parsed()) return cmd_validate(input, out);
    if (geodesic_cmd->parsed()) {
      return cmd_geodesic(input, p_str, q_str, out, svg_path);
    }
    if (certify_cmd->parsed()) return cmd_certify(input, cert, out);
    if (cone_cmd->parsed()) {
      return cmd_cone(input, level, probe, c_param, eps, radius, samples, out);
    }
    if (svg_cmd->parsed()) return cmd_svg(input, out);
  } catch (const jg::SimplicityViolation& e) {
    std::cerr << "error: " << e.what() << " (edges " << e.edge_a << ", "
              << e.edge_b << ")\n";
    return kExitSimplicity;
  } catch (const jg::PointOutsideDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutside;
  } catch (const jg::DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const jg::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const jg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitInput;
}
