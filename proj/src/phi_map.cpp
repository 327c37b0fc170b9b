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

#include "lattice_exp3/phi_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lattice_exp3 {

namespace {

inline constexpr double kTwoPi = 2.0 * kPi;

double wrap_2pi(double x) {
  double t = std::fmod(x, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

// Largest gap between consecutive points of a 3-point set on the unit circle.
double max_arc_gap(std::array<double, 3> angles) {
  for (double& a : angles) a = wrap_2pi(a);
  std::sort(angles.begin(), angles.end());
  return std::max({angles[1] - angles[0], angles[2] - angles[1],
                   kTwoPi - angles[2] + angles[0]});
}

std::array<std::array<double, 3>, 4> sign_classes(ProjAngle a, ProjAngle b,
                                                  ProjAngle c) {
  // The first point is pinned; flipping all three is the same triangle
  // reflected through the origin.
  std::array<std::array<double, 3>, 4> out{};
  for (int k = 0; k < 4; ++k) {
    out[k] = {a.value(), b.value() + ((k & 1) ? kPi : 0.0),
              c.value() + ((k & 2) ? kPi : 0.0)};
  }
  return out;
}

}  // namespace

CircleSubset phi_from_triangle(const Triangle& t, double tol) {
  const Vec2 o = circumcenter(t);
  const std::array<double, 3> angles = {proj_angle_of(t.a - o).value(),
                                        proj_angle_of(t.b - o).value(),
                                        proj_angle_of(t.c - o).value()};
  return make_subset(angles, tol);
}

CircleSubset phi(const Basis& basis, double tol) {
  const ReducedBasis r = gauss_reduce(basis);
  return phi_from_triangle(Triangle{Vec2(), r.u(), r.v()}, tol);
}

CircleSubset phi(const CompactifiedLattice& lattice, double tol) {
  if (const auto* deg = std::get_if<Degenerate>(&lattice)) {
    return delta_embed(deg->direction);
  }
  return phi(std::get<NonDegenerate>(lattice).basis, tol);
}

int count_covering_sign_classes(ProjAngle a, ProjAngle b, ProjAngle c) {
  int count = 0;
  for (const auto& cls : sign_classes(a, b, c)) {
    if (max_arc_gap(cls) <= kPi) ++count;
  }
  return count;
}

Triangle lift_nonobtuse(ProjAngle a, ProjAngle b, ProjAngle c, double tol) {
  if (circle_dist(a, b) <= tol || circle_dist(b, c) <= tol ||
      circle_dist(a, c) <= tol) {
    throw Error(ErrorCode::kNotDistinct, "lift needs three distinct lines");
  }
  // Exactly one class has every gap below pi; picking the smallest maximal
  // gap selects it without a threshold.
  const auto classes = sign_classes(a, b, c);
  const auto best = std::min_element(
      classes.begin(), classes.end(),
      [](const auto& x, const auto& y) { return max_arc_gap(x) < max_arc_gap(y); });
  const auto& cls = *best;
  return Triangle{unit(cls[0]), unit(cls[1]), unit(cls[2])};
}

Basis rect_from_pair(ProjAngle p, ProjAngle q, double tol) {
  if (circle_dist(p, q) <= tol) {
    throw Error(ErrorCode::kNotDistinct, "rectangle needs two distinct lines");
  }
  const double lo = std::min(p.value(), q.value());
  const double hi = std::max(p.value(), q.value());
  const double psi = 0.5 * (lo + hi);
  const double delta = 0.5 * (hi - lo);
  return Basis(std::cos(delta) * unit(psi),
               std::sin(delta) * unit(psi + 0.5 * kPi));
}

CompactifiedLattice phi_inverse(const CircleSubset& s, double tol) {
  switch (s.size()) {
    case 1:
      return Degenerate{s[0]};
    case 2:
      return NonDegenerate{gauss_reduce(rect_from_pair(s[0], s[1], tol)).basis()};
    default: {
      const Triangle t = lift_nonobtuse(s[0], s[1], s[2], tol);
      return NonDegenerate{gauss_reduce(Basis(t.b - t.a, t.c - t.a)).basis()};
    }
  }
}

bool compactified_eq(const CompactifiedLattice& a, const CompactifiedLattice& b,
                     double tol) {
  const auto* da = std::get_if<Degenerate>(&a);
  const auto* db = std::get_if<Degenerate>(&b);
  if (da != nullptr && db != nullptr) {
    return circle_dist(da->direction, db->direction) <= tol;
  }
  if (da != nullptr || db != nullptr) return false;
  return lattice_eq_mod_scale(std::get<NonDegenerate>(a).basis,
                              std::get<NonDegenerate>(b).basis, tol);
}

}  // namespace lattice_exp3
