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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(JORDAN_GEO_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kSquare = R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})";
const char* kLShape = R"({"vertices": [[0,0],[2,0],[2,1],[1,1],[1,2],[0,2]]})";
const char* kBowtie = R"({"vertices": [[0,0],[1,1],[1,0],[0,1]]})";

TEST(CliValidate, ValidSquare) {
  const std::string path = write_temp("square.json", kSquare);
  const RunResult r = run("validate " + path);
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["vertex_count"], 4);
  EXPECT_DOUBLE_EQ(j["diameter"].get<double>(), std::sqrt(2.0));
}

TEST(CliValidate, BowtieExitsThree) {
  const std::string path = write_temp("bowtie.json", kBowtie);
  EXPECT_EQ(run("validate " + path).exit_code, 3);
}

TEST(CliValidate, TruncatedFileExitsTwo) {
  const std::string path = write_temp("trunc.json", "{\"vertices\": [[0,0],");
  EXPECT_EQ(run("validate " + path).exit_code, 2);
}

TEST(CliValidate, MissingFileExitsTwo) {
  EXPECT_EQ(run("validate /no/such/file.json").exit_code, 2);
}

TEST(CliGeodesic, LShapeThroughNotch) {
  const std::string path = write_temp("l.json", kLShape);
  const RunResult r = run("geodesic " + path + " --p 1.5,0.5 --q 0.5,1.5");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["length"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(CliGeodesic, SquareStraight) {
  const std::string path = write_temp("sq.json", kSquare);
  const RunResult r = run("geodesic " + path + " --p 0.1,0.1 --q 0.9,0.9");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["length"].get<double>(), 0.8 * std::sqrt(2.0), 1e-12);
}

TEST(CliGeodesic, OutsidePointExitsFour) {
  const std::string path = write_temp("sq2.json", kSquare);
  EXPECT_EQ(run("geodesic " + path + " --p 5,5 --q 0.5,0.5").exit_code, 4);
}

TEST(CliCertify, SmallSuitePasses) {
  const std::string path = write_temp("l2.json", kLShape);
  const RunResult r =
      run("certify " + path + " --suite perimeter --triangles 5 --seed 3");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["seed"], 3);
}

TEST(CliCertify, CorruptionSelfTestExitsFive) {
  const std::string path = write_temp("l3.json", kLShape);
  const RunResult r = run("certify " + path +
                          " --suite perimeter --triangles 2 --seed 1 "
                          "--self-test-corrupt");
  EXPECT_EQ(r.exit_code, 5);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["ok"].get<bool>());
}

TEST(CliCertify, SameSeedIsByteIdentical) {
  const std::string path = write_temp("l4.json", kLShape);
  const std::string args =
      "certify " + path + " --suite separation --triangles 4 --seed 77";
  const RunResult a = run(args);
  const RunResult b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const RunResult c =
      run("certify " + path + " --suite separation --triangles 4 --seed 78");
  EXPECT_NE(a.out, c.out);
}

TEST(CliCertify, SeedFromEnvironment) {
  const std::string path = write_temp("l5.json", kLShape);
  const std::string cmd = std::string("JORDAN_GEO_SEED=99 ") + JORDAN_GEO_BIN +
                          " certify " + path +
                          " --suite perimeter --triangles 2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  pclose(pipe);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["seed"], 99);
}

TEST(CliCone, SquareManifestProbe) {
  const std::string manifest = write_temp(
      "fam.json", R"({"generator": "square", "levels": 1,
                      "target_path": "deep-vertex-rule"})");
  const RunResult r = run("cone " + manifest +
                          " --level 0 --probe disk_in_cone --C 0.3 --eps 0.1 "
                          "--samples 256");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["found"].get<bool>());
  EXPECT_GT(j["disk_radius"].get<double>(), 0.0);
}

TEST(CliCone, InconsistentManifestExitsTwo) {
  const std::string manifest =
      write_temp("bad_fam.json", R"({"generator": "unknown", "levels": 1})");
  EXPECT_EQ(run("cone " + manifest + " --level 0").exit_code, 2);
}

TEST(CliSvg, SceneRendersGoldenFile) {
  const std::string poly_path = write_temp("l6.json", kLShape);
  const std::string scene = write_temp(
      "scene.json", std::string(R"({"polygon": ")") + poly_path +
                        R"(", "triangle": [[1.9,0.1],[0.5,1.9],[0.1,1.9]],
                            "geodesics": [[[1.5,0.5],[0.5,1.5]]]})");
  const std::string out_path = testing::TempDir() + "scene.svg";
  const RunResult r = run("svg " + scene + " --out " + out_path);
  EXPECT_EQ(r.exit_code, 0);
  const std::string svg = read_file(out_path);
  const std::string golden =
      read_file(std::string(JORDAN_GEO_GOLDEN_DIR) + "/lshape_scene.svg");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(svg, golden);
}

TEST(CliSvg, EmptySceneIsPolygonOnly) {
  const std::string poly_path = write_temp("l7.json", kLShape);
  const std::string scene =
      write_temp("scene2.json",
                 std::string(R"({"polygon": ")") + poly_path + R"("})");
  const RunResult r = run("svg " + scene);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
  EXPECT_EQ(r.out.find("<polyline"), std::string::npos);
}

TEST(CliSvg, BadSceneExitsTwo) {
  const std::string scene = write_temp("scene3.json", R"({"no_polygon": 1})");
  EXPECT_EQ(run("svg " + scene).exit_code, 2);
}

}  // namespace
