// Copyright 2026 The lattice-exp3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + LATTICE_EXP3_CLI_PATH + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("lattice_exp3_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, PhiSquare) {
  const CliRun r = run("phi --basis 1,0,0,1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["subset"].size(), 2u);
  EXPECT_NEAR(j["subset"][0].get<double>(), 0.785398163, 1e-9);
  EXPECT_NEAR(j["subset"][1].get<double>(), 2.356194490, 1e-9);
}

TEST(Cli, Triangles) {
  const CliRun r = run("triangles --basis 1,0,0,1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 12);
  EXPECT_EQ(nlohmann::json::parse(run("triangles --basis 1,0,0.3,1.1").out)["count"],
            6);
}

TEST(Cli, PhiInverseHexagonal) {
  const CliRun r = run("phi-inv --angles 0.5235988,1.5707963,2.6179939");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["degenerate"].is_null());
  const auto& b = j["basis"];
  const double ux = b[0][0], uy = b[0][1], vx = b[1][0], vy = b[1][1];
  const double uu = ux * ux + uy * uy, vv = vx * vx + vy * vy;
  EXPECT_NEAR(uu / vv, 1.0, 1e-6);
  EXPECT_NEAR((ux * vx + uy * vy) / uu, 0.5, 1e-6);
  EXPECT_EQ(nlohmann::json::parse(run("phi-inv --angles 2").out)["degenerate"], 2.0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("phi --basis 1,0,0").status, 2);
  EXPECT_EQ(run("phi --basis 1,0,2,0").status, 2);
  EXPECT_EQ(run("phi --basis 1,nan,0,1").status, 2);
  EXPECT_EQ(run("verify --suite nope").status, 2);
  EXPECT_EQ(run("trefoil-curve --samples 4").status, 2);
  EXPECT_EQ(run("trefoil-curve --delta 0.6").status, 2);
  EXPECT_EQ(run("trefoil-curve --format ply").status, 2);
  EXPECT_EQ(run("certify /nonexistent.csv").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("phi --basis 1,0,0,1", "LATTICE_EXP3_TOL=abc").status, 2);
}

TEST(Cli, ToleranceOverride) {
  // Angle at the origin 1e-6 away from a right angle: distinct lines at the
  // default tolerance, merged at 1e-5.
  const std::string basis = "phi --basis 1,0," + std::to_string(std::sin(1e-6)) +
                            ",2";
  EXPECT_EQ(nlohmann::json::parse(run(basis).out)["subset"].size(), 3u);
  EXPECT_EQ(
      nlohmann::json::parse(run(basis, "LATTICE_EXP3_TOL=1e-5").out)["subset"].size(),
      2u);
}

TEST(Cli, CurveAndCertify) {
  const auto dir = temp_dir();
  for (const std::string fmt : {"csv", "json", "obj"}) {
    const auto path = (dir / ("pushoff." + fmt)).string();
    ASSERT_EQ(run("trefoil-curve --samples 720 --delta 0.1 --format " + fmt +
                  " --out " + path)
                  .status,
              0);
    const CliRun c = run("certify " + path + " --expect trefoil");
    EXPECT_EQ(c.status, 0);
    const auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j["verdict"], "RightTrefoil");
    EXPECT_EQ(j["jones"]["4"], -1);
  }
  const auto torus = (dir / "torus.csv").string();
  ASSERT_EQ(run("trefoil-curve --curve torus --samples 512 --out " + torus).status, 0);
  EXPECT_EQ(nlohmann::json::parse(run("certify " + torus).out)["verdict"],
            "RightTrefoil");

  const auto circle = (dir / "circle.csv").string();
  {
    std::ofstream f(circle);
    f << "x,y,z\n";
    for (int k = 0; k < 32; ++k) {
      f << std::cos(k * 0.19634954084936207) << ","
        << std::sin(k * 0.19634954084936207) << ",0\n";
    }
  }
  const CliRun c = run("certify " + circle);
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(nlohmann::json::parse(c.out)["verdict"], "Unknot");
  EXPECT_EQ(run("certify " + circle + " --expect trefoil").status, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CurveOutputIsDeterministic) {
  const CliRun a = run("trefoil-curve --samples 64 --delta 0.2 --format json");
  const CliRun b = run("trefoil-curve --samples 64 --delta 0.2 --format json");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["points"].size(), 64u);
}

TEST(Cli, VerifySuites) {
  const CliRun r = run("verify --suite cardinality --seed 3 --n 200");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["name"], "cardinality-dichotomy");
  EXPECT_EQ(run("verify --suite roundtrip --seed 42 --n 1000").status, 0);
}

}  // namespace
