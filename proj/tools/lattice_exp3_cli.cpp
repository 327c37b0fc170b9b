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

// lattice-exp3: command-line front end.
//
// Exit codes: 0 success, 1 verification or expectation failure, 2 usage or
// input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lattice_exp3/curves.hpp"
#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/phi_map.hpp"
#include "lattice_exp3/polyline_io.hpp"
#include "lattice_exp3/verify.hpp"

namespace {

using lattice_exp3::Basis;
using lattice_exp3::Error;
using lattice_exp3::ErrorCode;
using lattice_exp3::Vec2;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cell.size() || !std::isfinite(value)) {
      throw Error(ErrorCode::kParseError, "bad number '" + cell + "'");
    }
    out.push_back(value);
  }
  return out;
}

Basis parse_basis(const std::string& text) {
  const std::vector<double> r = parse_reals(text);
  if (r.size() != 4) {
    throw Error(ErrorCode::kParseError, "--basis expects ux,uy,vx,vy");
  }
  return Basis(Vec2(r[0], r[1]), Vec2(r[2], r[3]));
}

double dedup_tolerance() {
  const char* env = std::getenv("LATTICE_EXP3_TOL");
  if (env == nullptr || *env == '\0') return lattice_exp3::kDedupTol;
  const std::vector<double> r = parse_reals(env);
  if (r.size() != 1 || !(r[0] > 0.0) || r[0] >= 0.1) {
    throw Error(ErrorCode::kInvalidArgument,
                "LATTICE_EXP3_TOL must be a number in (0, 0.1)");
  }
  return r[0];
}

Json vec_json(Vec2 v) { return Json::array({v.x(), v.y()}); }

Json basis_json(const Basis& b) {
  return Json::array({vec_json(b.u()), vec_json(b.v())});
}

Json subset_json(const lattice_exp3::CircleSubset& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(p.value());
  return out;
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

struct PhiArgs {
  std::string basis;
  std::optional<double> degenerate;
};

int cmd_phi(const PhiArgs& a, double tol) {
  lattice_exp3::CompactifiedLattice lattice =
      a.degenerate ? lattice_exp3::CompactifiedLattice(
                         lattice_exp3::Degenerate{lattice_exp3::ProjAngle(*a.degenerate)})
                   : lattice_exp3::CompactifiedLattice(
                         lattice_exp3::NonDegenerate{parse_basis(a.basis)});
  emit(Json{{"subset", subset_json(lattice_exp3::phi(lattice, tol))}});
  return kExitOk;
}

int cmd_phi_inv(const std::string& angles, double tol) {
  const std::vector<double> r = parse_reals(angles);
  if (r.empty() || r.size() > 3) {
    throw Error(ErrorCode::kParseError, "--angles expects 1 to 3 values");
  }
  const auto lattice =
      lattice_exp3::phi_inverse(lattice_exp3::make_subset(r, tol), tol);
  Json doc;
  if (const auto* nd = std::get_if<lattice_exp3::NonDegenerate>(&lattice)) {
    doc["basis"] = basis_json(nd->basis);
    doc["degenerate"] = nullptr;
  } else {
    doc["basis"] = nullptr;
    doc["degenerate"] = std::get<lattice_exp3::Degenerate>(lattice).direction.value();
  }
  emit(doc);
  return kExitOk;
}

int cmd_reduce(const std::string& basis) {
  const lattice_exp3::ReducedBasis r = lattice_exp3::gauss_reduce(parse_basis(basis));
  emit(Json{{"basis", basis_json(r.basis())},
            {"rectangular", lattice_exp3::is_rectangular(r.basis())}});
  return kExitOk;
}

int cmd_triangles(const std::string& basis) {
  const auto triangles =
      lattice_exp3::enumerate_generator_triangles(parse_basis(basis));
  Json list = Json::array();
  for (const auto& t : triangles) {
    list.push_back(Json{
        {"vertices", Json::array({vec_json(t.triangle.a), vec_json(t.triangle.b),
                                  vec_json(t.triangle.c)})},
        {"p", t.p_coef},
        {"q", t.q_coef}});
  }
  emit(Json{{"triangles", list}, {"count", triangles.size()}});
  return kExitOk;
}

struct CurveArgs {
  int samples = 720;
  double delta = 0.1;
  std::string out;
  std::string format = "csv";
  std::string curve = "pushoff";
};

int cmd_trefoil_curve(const CurveArgs& a) {
  const auto format = lattice_exp3::parse_format(a.format);
  if (!format) throw Error(ErrorCode::kInvalidArgument, "unknown format");
  if (a.samples < 8) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 8");
  if (!(a.delta > 0.0 && a.delta < lattice_exp3::kPi / 6)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, pi/6)");
  }
  const auto kind = a.curve == "torus" ? lattice_exp3::CurveKind::kTorus
                                       : lattice_exp3::CurveKind::kPushoff;
  const lattice_exp3::Polyline3 line =
      lattice_exp3::trefoil_polyline(kind, a.samples, a.delta);
  const std::string text = lattice_exp3::format_polyline(line.points(), *format);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    file << text;
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + a.out);
  }
  return kExitOk;
}

struct CertifyArgs {
  std::string path;
  std::uint64_t seed = 0;
  std::string expect;
};

bool matches(lattice_exp3::Verdict v, const std::string& expect) {
  using lattice_exp3::Verdict;
  if (expect == "trefoil") {
    return v == Verdict::kRightTrefoil || v == Verdict::kLeftTrefoil;
  }
  return expect == lattice_exp3::verdict_name(v);
}

int cmd_certify(const CertifyArgs& a) {
  const lattice_exp3::Polyline3 curve(lattice_exp3::read_polyline_file(a.path));
  const lattice_exp3::Certificate cert = lattice_exp3::certify(curve, a.seed);
  Json jones = Json::object();
  for (const auto& [e, c] : cert.jones.terms()) jones[std::to_string(e)] = c;
  emit(Json{{"verdict", lattice_exp3::verdict_name(cert.verdict)},
            {"jones", jones},
            {"crossings", cert.crossings},
            {"writhe", cert.writhe},
            {"convention",
             "RightTrefoil means V(t) = t + t^3 - t^4 (positive crossings); "
             "certified up to Jones equivalence"}});
  if (!a.expect.empty() && !matches(cert.verdict, a.expect)) return kExitFailed;
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::int64_t n = 1000;
};

int cmd_verify(const VerifyArgs& a, double tol) {
  const lattice_exp3::SuiteReport report =
      lattice_exp3::run_suite(a.suite, a.seed, a.n, tol);
  std::cout << lattice_exp3::report_json(report);
  return report.pass() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane lattices, exp3 of the circle, the Milnor chart and the trefoil"};
  app.require_subcommand(1);

  PhiArgs phi_args;
  auto* phi = app.add_subcommand("phi", "map a lattice to its circle subset");
  auto* phi_basis = phi->add_option("--basis", phi_args.basis, "ux,uy,vx,vy");
  auto* phi_degen =
      phi->add_option("--degenerate", phi_args.degenerate, "boundary direction (radians)");
  phi_basis->excludes(phi_degen);
  phi->require_option(1);

  std::string angles;
  auto* phi_inv = app.add_subcommand("phi-inv", "map a circle subset to a lattice");
  phi_inv->add_option("--angles", angles, "a[,b[,c]] in radians")->required();

  std::string reduce_basis;
  auto* reduce = app.add_subcommand("reduce", "Gauss-Lagrange reduction");
  reduce->add_option("--basis", reduce_basis, "ux,uy,vx,vy")->required();

  std::string tri_basis;
  auto* triangles = app.add_subcommand("triangles", "generating triangles of a lattice");
  triangles->add_option("--basis", tri_basis, "ux,uy,vx,vy")->required();

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("trefoil-curve", "emit the chart image of the boundary circle");
  curve->add_option("--samples", curve_args.samples, "sample count (>= 8)");
  curve->add_option("--delta", curve_args.delta, "push-off offset in (0, pi/6)");
  curve->add_option("--out", curve_args.out, "output path (stdout if omitted)");
  curve->add_option("--format", curve_args.format, "csv, json or obj")
      ->check(CLI::IsMember({"csv", "json", "obj"}));
  curve->add_option("--curve", curve_args.curve, "pushoff or torus")
      ->check(CLI::IsMember({"pushoff", "torus"}));

  CertifyArgs cert_args;
  auto* cert = app.add_subcommand("certify", "classify a closed polyline by its Jones polynomial");
  cert->add_option("path", cert_args.path, "polyline file")->required();
  cert->add_option("--seed", cert_args.seed, "projection seed");
  cert->add_option("--expect", cert_args.expect, "expected verdict")
      ->check(CLI::IsMember({"trefoil", "RightTrefoil", "LeftTrefoil", "Unknot", "Other"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run seeded property suites");
  verify->add_option("--suite", verify_args.suite, "suite name");
  verify->add_option("--seed", verify_args.seed, "generator seed");
  verify->add_option("--n", verify_args.n, "samples per check")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const double tol = dedup_tolerance();
    if (*phi) return cmd_phi(phi_args, tol);
    if (*phi_inv) return cmd_phi_inv(angles, tol);
    if (*reduce) return cmd_reduce(reduce_basis);
    if (*triangles) return cmd_triangles(tri_basis);
    if (*curve) return cmd_trefoil_curve(curve_args);
    if (*cert) return cmd_certify(cert_args);
    if (*verify) {
      if (!lattice_exp3::is_suite_name(verify_args.suite)) {
        std::cerr << "error: unknown suite '" << verify_args.suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(verify_args, tol);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kPoleHit ? kExitFailed : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
