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

#include "lattice_exp3/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "json.hpp"
#include "lattice_exp3/curves.hpp"
#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/milnor_chart.hpp"
#include "lattice_exp3/phi_map.hpp"
#include "lattice_exp3/sampling.hpp"
#include "lattice_exp3/triangle_space.hpp"

namespace lattice_exp3 {

namespace {

constexpr std::array<std::string_view, 8> kSuites = {
    "well-definedness", "invariance", "roundtrip", "cardinality",
    "continuity",       "eisenstein", "knot",      "all"};

// Worst-case tracker for one check: either an error bounded by a threshold
// or a count of failed samples.
class Check {
 public:
  Check(std::string name, double threshold)
      : name_(std::move(name)), threshold_(threshold) {}

  void error(double e) {
    ++samples_;
    max_error_ = std::max(max_error_, e);
    if (!(e <= threshold_)) ok_ = false;
  }
  void expect(bool cond) {
    ++samples_;
    if (!cond) {
      ok_ = false;
      max_error_ += 1.0;
    }
  }
  void note(std::string detail) { detail_ = std::move(detail); }

  CheckResult result() const {
    return {name_, ok_, max_error_, threshold_, samples_, detail_};
  }

 private:
  std::string name_;
  double threshold_;
  double max_error_ = 0.0;
  std::int64_t samples_ = 0;
  bool ok_ = true;
  std::string detail_;
};

Basis scaled(const Basis& b, double s) { return Basis(s * b.u(), s * b.v()); }

Basis rotated(const Basis& b, double theta) {
  return Basis(rotate(b.u(), theta), rotate(b.v(), theta));
}

Basis square() { return Basis({1, 0}, {0, 1}); }
Basis hexagonal() { return Basis({1, 0}, {0.5, std::sqrt(3.0) / 2}); }

void suite_well_definedness(Rng& rng, std::int64_t n, double tol,
                            std::vector<CheckResult>& out) {
  Check count("triangle-count", 0.0);
  Check consistent("phi-independent-of-triangle", 1e-9);
  const auto run = [&](const Basis& b) {
    const auto triangles = enumerate_generator_triangles(b);
    count.expect(triangles.size() == (is_rectangular(b) ? 12u : 6u));
    std::vector<CircleSubset> images;
    for (const auto& t : triangles) {
      images.push_back(phi_from_triangle(t.triangle, tol));
    }
    double worst = 0.0;
    for (const auto& a : images) {
      for (const auto& c : images) worst = std::max(worst, hausdorff(a, c));
    }
    consistent.error(worst);
  };
  run(square());
  run(hexagonal());
  for (std::int64_t i = 0; i < n; ++i) run(random_basis(rng));
  for (std::int64_t i = 0; i < std::max<std::int64_t>(1, n / 5); ++i) {
    run(random_rectangular_basis(rng));
  }
  out.push_back(count.result());
  out.push_back(consistent.result());
}

void suite_invariance(Rng& rng, std::int64_t n, double tol,
                      std::vector<CheckResult>& out) {
  Check scale("scale-invariance", 1e-12);
  Check unimodular("unimodular-invariance", 1e-9);
  Check rotation("rotation-equivariance", 1e-9);
  Check modular("eisenstein-modular-invariance", 1e-9);
  for (std::int64_t i = 0; i < n; ++i) {
    const Basis b = random_basis(rng);
    const CircleSubset image = phi(b, tol);
    for (double s : {1e-3, 0.5, 7.0, 1e3}) {
      scale.error(hausdorff(phi(scaled(b, s), tol), image));
    }
    const Basis changed = apply(b, random_unimodular(rng.next(), 6));
    unimodular.error(hausdorff(phi(changed, tol), image));
    const double theta = rng.uniform(-kPi, kPi);
    rotation.error(
        hausdorff(phi(rotated(b, theta), tol), rotate_subset(image, theta)));

    const EisensteinPair g = eisenstein(tau_of(b));
    const EisensteinPair h = eisenstein(tau_of(changed));
    modular.error(std::max(std::abs(g.g2 - h.g2) / std::abs(g.g2),
                           std::abs(g.g3 - h.g3) / std::abs(g.g3)));
  }
  out.push_back(scale.result());
  out.push_back(unimodular.result());
  out.push_back(rotation.result());
  out.push_back(modular.result());
}

void suite_roundtrip(Rng& rng, std::int64_t n, double tol,
                     std::vector<CheckResult>& out) {
  for (std::size_t size = 1; size <= 3; ++size) {
    Check c("phi-of-inverse-size-" + std::to_string(size), 1e-9);
    for (std::int64_t i = 0; i < n; ++i) {
      const CircleSubset s = random_subset(rng, size, 1e-3);
      c.error(hausdorff(phi(phi_inverse(s, tol), tol), s));
    }
    out.push_back(c.result());
  }

  Check back("inverse-of-phi", 0.0);
  const std::int64_t rect = std::max<std::int64_t>(1, n / 5);
  for (std::int64_t i = 0; i < n; ++i) {
    const Basis b = i < rect ? random_rectangular_basis(rng) : random_basis(rng);
    back.expect(compactified_eq(phi_inverse(phi(b, tol), tol), NonDegenerate{b}));
  }
  out.push_back(back.result());

  Check bisector("rect-bisector-choice", 0.0);
  for (std::int64_t i = 0; i < n; ++i) {
    const CircleSubset s = random_subset(rng, 2, 1e-3);
    const double lo = s[0].value();
    const double hi = s[1].value();
    const double psi = 0.5 * (lo + hi) + 0.5 * kPi;
    const double delta = 0.5 * kPi - 0.5 * (hi - lo);
    const Basis alt(std::cos(delta) * unit(psi),
                    std::sin(delta) * unit(psi + 0.5 * kPi));
    bisector.expect(lattice_eq_mod_scale(rect_from_pair(s[0], s[1], tol), alt));
  }
  out.push_back(bisector.result());

  Check classes("sign-class-uniqueness", 0.0);
  for (std::int64_t i = 0; i < 10 * n; ++i) {
    const CircleSubset s = random_subset(rng, 3, 1e-6);
    classes.expect(count_covering_sign_classes(s[0], s[1], s[2]) == 1);
  }
  out.push_back(classes.result());

  // Pairs are either the same lattice in disguise, unrelated lattices, or
  // small perturbations; whenever the images are close the lattices must be
  // close as well.
  Check injective("sampled-injectivity", 0.0);
  std::int64_t close_pairs = 0;
  for (std::int64_t i = 0; i < 10 * n; ++i) {
    const Basis a = random_basis(rng);
    Basis b = a;
    switch (i % 3) {
      case 0:
        b = scaled(apply(a, random_unimodular(rng.next(), 4)),
                   rng.uniform(0.1, 10.0));
        break;
      case 1:
        b = random_basis(rng);
        break;
      default: {
        const double eps = std::pow(10.0, -rng.uniform(3.0, 9.0));
        b = Basis(a.u() + Vec2(eps * rng.uniform(-1, 1), eps * rng.uniform(-1, 1)),
                  a.v());
        break;
      }
    }
    const double h = hausdorff(phi(a, tol), phi(b, tol));
    if (h > 1e-6) continue;
    ++close_pairs;
    injective.expect(lattice_eq_mod_scale(a, b, 1e-4));
  }
  injective.note("pairs with image distance <= 1e-6: " +
                 std::to_string(close_pairs));
  out.push_back(injective.result());
}

void suite_cardinality(Rng& rng, std::int64_t n, double tol,
                       std::vector<CheckResult>& out) {
  // Two lines from the circumcenter merge when the triangle's angle at the
  // origin is within tol / 2 of a right angle.
  const double rect_tol = 0.5 * tol;
  Check dichotomy("cardinality-dichotomy", 0.0);
  std::int64_t counts[4] = {0, 0, 0, 0};
  const auto check = [&](const Basis& b) {
    const std::size_t size = phi(b, tol).size();
    ++counts[size];
    dichotomy.expect(size == (is_rectangular(b, rect_tol) ? 2u : 3u));
  };
  for (std::int64_t i = 0; i < n; ++i) check(random_basis(rng));
  for (std::int64_t i = 0; i < n / 5 + 1; ++i) check(random_rectangular_basis(rng));
  check(square());
  check(hexagonal());
  for (std::int64_t i = 0; i < n / 10 + 1; ++i) {
    const CircleSubset s = phi(Degenerate{ProjAngle(rng.uniform(0.0, kPi))}, tol);
    ++counts[s.size()];
    dichotomy.expect(s.size() == 1);
  }
  dichotomy.note("sizes 1/2/3: " + std::to_string(counts[1]) + "/" +
                 std::to_string(counts[2]) + "/" + std::to_string(counts[3]));
  out.push_back(dichotomy.result());

  // Angles kept a factor >= 5 away from the merge threshold on both sides.
  Check boundary("near-rectangular-boundary", 0.0);
  const std::array<double, 6> etas = {1e-13, 1e-12, 1e-11, 1e-8, 1e-7, 1e-5};
  for (std::int64_t i = 0; i < 200; ++i) {
    const double eta = etas[i % etas.size()] * (tol / kDedupTol);
    const Basis b = near_rectangular_basis(rng, eta);
    const std::size_t expected = 2.0 * eta < tol ? 2u : 3u;
    boundary.expect(phi(b, tol).size() == expected &&
                    is_rectangular(b, rect_tol) == (expected == 2u));
  }
  out.push_back(boundary.result());
}

void suite_continuity(Rng&, std::int64_t, double tol,
                      std::vector<CheckResult>& out) {
  Check monotone("boundary-decreasing", 0.0);
  Check limit("boundary-limit-eps-1e-6", 1e-3);
  for (int d = 0; d < 36; ++d) {
    const ProjAngle dir(kPi * d / 36.0);
    const CircleSubset target = delta_embed(dir);
    double previous = INFINITY;
    for (int k = 1; k <= 6; ++k) {
      const double eps = std::pow(10.0, -k);
      const double h =
          hausdorff(phi(p_map(degenerate_path(dir, eps)), tol), target);
      monotone.expect(h < previous);
      previous = h;
      if (k == 6) limit.error(h);
    }
  }
  out.push_back(monotone.result());
  out.push_back(limit.result());
}

// 60 and 140 times the lattice sums of w^-4 and w^-6 over the nonzero
// points of Z + tau Z inside the largest disk contained in the box
// |m|, |n| <= bound. The disk cut makes the neglected tail cancel by
// rotational symmetry.
EisensteinPair lattice_sum(std::complex<double> tau, int bound) {
  const double radius = bound * tau.imag() / std::max(1.0, std::abs(tau));
  std::complex<double> s4 = 0.0;
  std::complex<double> s6 = 0.0;
  for (int n = -bound; n <= bound; ++n) {
    for (int m = -bound; m <= bound; ++m) {
      if (m == 0 && n == 0) continue;
      const std::complex<double> w = static_cast<double>(m) + static_cast<double>(n) * tau;
      if (std::abs(w) > radius) continue;
      const std::complex<double> inv2 = 1.0 / (w * w);
      s4 += inv2 * inv2;
      s6 += inv2 * inv2 * inv2;
    }
  }
  return {60.0 * s4, 140.0 * s6};
}

std::complex<double> random_reduced_tau(Rng& rng) {
  const double x = rng.uniform(-0.5, 0.5);
  const double y = rng.uniform(std::sqrt(1.0 - x * x), 2.5);
  return {x, y};
}

void suite_eisenstein(Rng& rng, std::int64_t, double,
                      std::vector<CheckResult>& out) {
  const double c4 = 4.0 * std::pow(kPi, 4) / 3.0;
  const double c6 = 8.0 * std::pow(kPi, 6) / 27.0;

  Check series("q-series-vs-lattice-sum", 1e-8);
  Check product("discriminant-product-identity", 1e-8);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> tau = random_reduced_tau(rng);
    const EisensteinPair q = eisenstein(TauForm{1.0, tau});
    const EisensteinPair direct = lattice_sum(tau, 400);
    series.error(std::max(
        std::abs(q.g2 - direct.g2) / std::max(std::abs(direct.g2), c4),
        std::abs(q.g3 - direct.g3) / std::max(std::abs(direct.g3), c6)));
    const std::complex<double> lhs = discriminant(q.g2, q.g3);
    const std::complex<double> rhs = discriminant_product(TauForm{1.0, tau});
    product.error(std::abs(lhs - rhs) / std::abs(rhs));
  }
  out.push_back(series.result());
  out.push_back(product.result());

  Check zeros("symmetric-lattice-zeros", 1e-12);
  zeros.error(std::abs(eisenstein(tau_of(square())).g3));
  zeros.error(std::abs(eisenstein(tau_of(hexagonal())).g2));
  out.push_back(zeros.result());

  Check unit("s3-normalization", 1e-10);
  for (int i = 0; i < 100; ++i) {
    const S3Point p = chart(random_basis(rng));
    unit.error(std::abs(std::norm(p.z) + std::norm(p.w) - 1.0));
  }
  out.push_back(unit.result());

  Check degen("degeneration-toward-knot", 1e-3);
  Check degen_order("degeneration-strictly-decreasing", 0.0);
  double prev_disc = INFINITY;
  double prev_dist = INFINITY;
  for (double eps : {0.5, 0.2, 0.1, 0.05, 0.02}) {
    const DegenerationProbe probe = probe_degeneration(Basis({1, 0}, {0, eps}));
    degen_order.expect(probe.normalized_discriminant < prev_disc &&
                       probe.torus_distance < prev_dist);
    prev_disc = probe.normalized_discriminant;
    prev_dist = probe.torus_distance;
    if (eps == 0.02) degen.error(probe.normalized_discriminant);
  }
  out.push_back(degen_order.result());
  out.push_back(degen.result());
}

void suite_knot(Rng& rng, std::int64_t, double,
                std::vector<CheckResult>& out) {
  const std::uint64_t seed = rng.next();
  const Certificate torus =
      certify(trefoil_polyline(CurveKind::kTorus, 512, 0.0), seed);
  const bool torus_trefoil = torus.verdict == Verdict::kRightTrefoil ||
                             torus.verdict == Verdict::kLeftTrefoil;
  Check t("torus-curve-trefoil", 0.0);
  t.expect(torus_trefoil);
  t.note(std::string(verdict_name(torus.verdict)) + " " +
         torus.jones.to_string());
  out.push_back(t.result());

  for (double delta : {0.1, 0.05}) {
    const Certificate push =
        certify(trefoil_polyline(CurveKind::kPushoff, 720, delta), seed);
    Check p("pushoff-trefoil-delta-" + std::string(delta == 0.1 ? "0.1" : "0.05"),
            0.0);
    p.expect(torus_trefoil && push.verdict == torus.verdict);
    p.note(std::string(verdict_name(push.verdict)) + " " +
           push.jones.to_string());
    out.push_back(p.result());
  }

  std::vector<Vec3> circle;
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * kPi * k / 64;
    circle.push_back({std::cos(a), std::sin(a), 0.0});
  }
  const Certificate round = certify(Polyline3(circle), seed);
  Check c("circle-unknot", 0.0);
  c.expect(round.verdict == Verdict::kUnknot);
  out.push_back(c.result());
}

using SuiteFn = void (*)(Rng&, std::int64_t, double, std::vector<CheckResult>&);

constexpr std::array<SuiteFn, 7> kSuiteFns = {
    suite_well_definedness, suite_invariance, suite_roundtrip,
    suite_cardinality,      suite_continuity, suite_eisenstein,
    suite_knot};

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite_name(std::string_view name) {
  return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed,
                      std::int64_t n, double dedup_tol) {
  if (!is_suite_name(suite)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown suite '" + std::string(suite) + "'");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  SuiteReport report{std::string(suite), seed, n, {}};
  for (std::size_t i = 0; i < kSuiteFns.size(); ++i) {
    if (suite != "all" && suite != kSuites[i]) continue;
    // Each suite draws from its own stream so results do not depend on
    // which other suites ran.
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + i);
    kSuiteFns[i](rng, n, dedup_tol, report.checks);
  }
  return report;
}

std::string report_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["seed"] = report.seed;
  doc["n"] = report.n;
  doc["pass"] = report.pass();
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["max_error"] = c.max_error;
    j["threshold"] = c.threshold;
    j["samples"] = c.samples;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace lattice_exp3
