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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff
// all pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "lattice_exp3/curves.hpp"
#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/milnor_chart.hpp"
#include "lattice_exp3/phi_map.hpp"
#include "lattice_exp3/random.hpp"
#include "lattice_exp3/sampling.hpp"
#include "lattice_exp3/triangle_space.hpp"

namespace {

using namespace lattice_exp3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Basis kSquare({1, 0}, {0, 1});
const Basis kHex({1, 0}, {0.5, std::sqrt(3.0) / 2});

Outcome triangle_count() {
  Rng rng(101);
  std::vector<Basis> bases = {kSquare, kHex};
  for (int i = 0; i < 400; ++i) bases.push_back(random_basis(rng));
  for (int i = 0; i < 100; ++i) bases.push_back(random_rectangular_basis(rng));
  int failures = 0;
  for (const Basis& b : bases) {
    const std::size_t want = is_rectangular(b) ? 12 : 6;
    if (enumerate_generator_triangles(b).size() != want) ++failures;
  }
  return {failures == 0,
          fmt("%zu bases, %d failures", bases.size(), failures)};
}

Outcome well_definedness() {
  Rng rng(102);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Basis b = i % 5 == 0 ? random_rectangular_basis(rng) : random_basis(rng);
    std::vector<CircleSubset> images;
    for (const auto& g : enumerate_generator_triangles(b)) {
      images.push_back(phi_from_triangle(g.triangle));
    }
    for (const auto& x : images) {
      for (const auto& y : images) worst = std::max(worst, hausdorff(x, y));
    }
  }
  return {worst <= 1e-9, fmt("max pairwise Hausdorff %.3g", worst)};
}

Outcome round_trip() {
  Rng rng(103);
  double worst = 0.0;
  for (std::size_t size = 1; size <= 3; ++size) {
    for (int i = 0; i < 1000; ++i) {
      const CircleSubset s = random_subset(rng, size, 1e-3);
      worst = std::max(worst, hausdorff(phi(phi_inverse(s)), s));
    }
  }
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Basis b = i < 200 ? random_rectangular_basis(rng) : random_basis(rng);
    if (!compactified_eq(phi_inverse(phi(b)), NonDegenerate{b})) ++failures;
  }
  return {worst <= 1e-9 && failures == 0,
          fmt("phi(phi^-1) max %.3g; phi^-1(phi) failures %d/1000", worst,
              failures)};
}

std::vector<Basis> symmetry_samples() {
  Rng rng(104);
  std::vector<Basis> out;
  for (int i = 0; i < 1000; ++i) out.push_back(random_basis(rng));
  return out;
}

Outcome symmetry() {
  Rng rng(105);
  double scale = 0.0, unimod = 0.0, rot = 0.0;
  for (const Basis& b : symmetry_samples()) {
    const CircleSubset ref = phi(b);
    const double s = std::pow(10.0, rng.uniform(-3, 3));
    scale = std::max(scale, hausdorff(phi(Basis(s * b.u(), s * b.v())), ref));
    unimod = std::max(
        unimod, hausdorff(phi(apply(b, random_unimodular(rng.next(), 6))), ref));
    const double t = rng.uniform(-kPi, kPi);
    rot = std::max(rot, hausdorff(phi(Basis(rotate(b.u(), t), rotate(b.v(), t))),
                                  rotate_subset(ref, t)));
  }
  return {scale <= 1e-12 && unimod <= 1e-9 && rot <= 1e-9,
          fmt("scale %.3g, unimodular %.3g, rotation %.3g", scale, unimod, rot)};
}

Outcome cardinality() {
  const double rect_tol = 0.5 * kDedupTol;
  int failures = 0;
  int samples = 0;
  for (const Basis& b : symmetry_samples()) {
    ++samples;
    if ((phi(b).size() == 2) != is_rectangular(b, rect_tol)) ++failures;
  }
  Rng rng(106);
  for (int i = 0; i < 100; ++i) {
    ++samples;
    if (phi(random_rectangular_basis(rng)).size() != 2) ++failures;
    ++samples;
    if (phi(Degenerate{ProjAngle(rng.uniform(0, kPi))}).size() != 1) ++failures;
  }
  const double etas[] = {1e-13, 1e-12, 1e-11, 1e-8, 1e-7, 1e-5};
  for (int i = 0; i < 200; ++i) {
    const double eta = etas[i % 6];
    const Basis b = near_rectangular_basis(rng, eta);
    const std::size_t size = phi(b).size();
    ++samples;
    const bool merged = 2 * eta < kDedupTol;
    if (size != (merged ? 2u : 3u) || is_rectangular(b, rect_tol) != merged) {
      ++failures;
    }
  }
  return {failures == 0, fmt("%d samples, %d failures", samples, failures)};
}

Outcome continuity() {
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < 36; ++k) {
    const ProjAngle dir(kPi * k / 36);
    double prev = INFINITY;
    for (int e = 1; e <= 6; ++e) {
      const double h = hausdorff(phi(p_map(degenerate_path(dir, std::pow(10.0, -e)))),
                                 delta_embed(dir));
      if (!(h < prev)) ++failures;
      prev = h;
    }
    worst = std::max(worst, prev);
  }
  return {failures == 0 && worst < 1e-3,
          fmt("steps not decreasing %d, max at 1e-6 %.3g", failures, worst)};
}

Outcome eisenstein_check() {
  const double c4 = 4 * std::pow(kPi, 4) / 3, c6 = 8 * std::pow(kPi, 6) / 27;
  Rng rng(107);
  double series = 0.0, product = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-0.5, 0.5);
    const std::complex<double> tau(x, rng.uniform(std::sqrt(1 - x * x), 2.5));
    const EisensteinPair q = eisenstein(TauForm{1.0, tau});
    const auto [g2, g3] =
        oracle::disk_lattice_sum(tau, 400 * tau.imag() / std::abs(tau));
    series = std::max({series, std::abs(q.g2 - g2) / std::max(std::abs(g2), c4),
                       std::abs(q.g3 - g3) / std::max(std::abs(g3), c6)});
    const auto p = discriminant_product(TauForm{1.0, tau});
    product = std::max(product, std::abs(discriminant(q.g2, q.g3) - p) / std::abs(p));
  }
  const double zeros = std::max(std::abs(eisenstein(tau_of(kSquare)).g3),
                                std::abs(eisenstein(tau_of(kHex)).g2));
  return {series <= 1e-8 && zeros < 1e-12 && product <= 1e-8,
          fmt("series %.3g, zeros %.3g, product %.3g", series, zeros, product)};
}

Outcome trefoil() {
  const auto start = std::chrono::steady_clock::now();
  const Certificate torus = certify(trefoil_polyline(CurveKind::kTorus, 512, 0), 8);
  const Certificate p1 = certify(trefoil_polyline(CurveKind::kPushoff, 720, 0.1), 8);
  const Certificate p2 = certify(trefoil_polyline(CurveKind::kPushoff, 720, 0.05), 8);
  const Certificate circle = certify(Polyline3(oracle::circle_curve(64)), 8);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool is_trefoil = torus.verdict == Verdict::kRightTrefoil ||
                          torus.verdict == Verdict::kLeftTrefoil;
  const bool ok = is_trefoil && p1.verdict == torus.verdict &&
                  p2.verdict == torus.verdict &&
                  circle.verdict == Verdict::kUnknot && secs <= 120;
  return {ok, fmt("torus %s (%s), push-off %s/%s, circle %s, %.1fs",
                  std::string(verdict_name(torus.verdict)).c_str(),
                  torus.jones.to_string().c_str(),
                  std::string(verdict_name(p1.verdict)).c_str(),
                  std::string(verdict_name(p2.verdict)).c_str(),
                  std::string(verdict_name(circle.verdict)).c_str(), secs)};
}

Outcome degeneration() {
  double prev_disc = INFINITY, prev_dist = INFINITY;
  bool ok = true;
  std::string detail;
  for (double eps : {0.5, 0.2, 0.1, 0.05, 0.02}) {
    const DegenerationProbe p = probe_degeneration(Basis({1, 0}, {0, eps}));
    ok = ok && p.normalized_discriminant < prev_disc && p.torus_distance < prev_dist;
    prev_disc = p.normalized_discriminant;
    prev_dist = p.torus_distance;
    detail += fmt("%s%.2g:%.2g/%.2g", detail.empty() ? "" : " ", eps,
                  p.normalized_discriminant, p.torus_distance);
  }
  return {ok, "eps:|disc|/dist " + detail};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(LATTICE_EXP3_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  char chunk[4096];
  std::size_t n = 0;
  while ((n = fread(chunk, 1, sizeof chunk, pipe)) > 0) out.append(chunk, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome cli_determinism() {
  const auto a = run_cli("verify --suite all --seed 7");
  const auto b = run_cli("verify --suite all --seed 7");
  return {a.first == 0 && b.first == 0 && a.second == b.second && !a.second.empty(),
          fmt("exit %d/%d, reports %s (%zu bytes)", a.first, b.first,
              a.second == b.second ? "identical" : "differ", a.second.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"triangle count", triangle_count},
      {"well-definedness of phi", well_definedness},
      {"round trip", round_trip},
      {"symmetry", symmetry},
      {"cardinality dichotomy", cardinality},
      {"boundary continuity", continuity},
      {"Eisenstein correctness", eisenstein_check},
      {"trefoil certification", trefoil},
      {"degeneration toward the knot", degeneration},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
