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

#include "lattice_exp3/milnor_chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "lattice_exp3/detail/chart_kernels.hpp"

namespace lattice_exp3 {

namespace {

ComplexVal as_complex(Vec2 v) { return {v.x(), v.y()}; }

}  // namespace

Vec4 to_r4(const S3Point& p) {
  return Vec4{{p.z.real(), p.z.imag(), p.w.real(), p.w.imag()}};
}

double distance(const S3Point& p, const S3Point& q) {
  return std::sqrt(std::norm(p.z - q.z) + std::norm(p.w - q.w));
}

TauForm tau_of(const Basis& b) {
  const ReducedBasis r = gauss_reduce(b);
  const ComplexVal u = as_complex(r.u());
  ComplexVal tau = as_complex(r.v()) / u;
  // Replacing v by -v keeps the lattice and flips the half plane.
  if (tau.imag() < 0.0) tau = -tau;
  return TauForm{u, tau};
}

EisensteinPair eisenstein(const TauForm& t) {
  const auto [g2, g3] =
      detail::eisenstein_unit_lattice<double, ComplexVal>(t.tau, kSeriesCutoff);
  const ComplexVal u2 = t.u * t.u;
  const ComplexVal u4 = u2 * u2;
  return {g2 / u4, g3 / (u4 * u2)};
}

double normalization_log_scale(ComplexVal g2, ComplexVal g3) {
  const bool has_g2 = g2 != 0.0;
  const bool has_g3 = g3 != 0.0;
  if (!has_g2 && !has_g3) {
    throw Error(ErrorCode::kBothZero, "cannot normalize g2 = g3 = 0");
  }
  return detail::solve_log_scale<double>(
      has_g2, has_g2 ? std::log(std::abs(g2)) : 0.0, has_g3,
      has_g3 ? std::log(std::abs(g3)) : 0.0, 1);
}

S3Point normalize_to_s3(ComplexVal g2, ComplexVal g3) {
  const double s = normalization_log_scale(g2, g3);
  return S3Point{g2 * std::exp(-4.0 * s), g3 * std::exp(-6.0 * s)};
}

ComplexVal discriminant(ComplexVal g2, ComplexVal g3) {
  return g2 * g2 * g2 - 27.0 * g3 * g3;
}

ComplexVal discriminant_product(const TauForm& t) {
  const ComplexVal d =
      detail::discriminant_product_unit_lattice<double, ComplexVal>(
          t.tau, kSeriesCutoff);
  const ComplexVal u2 = t.u * t.u;
  const ComplexVal u4 = u2 * u2;
  return d / (u4 * u4 * u4);
}

std::pair<double, double> torus_knot_radii() {
  static const std::pair<double, double> radii =
      detail::torus_radii<double>(1);
  return radii;
}

S3Point torus_knot_point(double t) {
  const auto [a, b] = torus_knot_radii();
  return S3Point{std::polar(a, 2.0 * t), std::polar(b, 3.0 * t)};
}

S3Point chart(const Basis& basis) {
  const EisensteinPair g = eisenstein(tau_of(basis));
  return normalize_to_s3(g.g2, g.g3);
}

S3Point chart(const CompactifiedLattice& lattice) {
  if (const auto* deg = std::get_if<Degenerate>(&lattice)) {
    return torus_knot_point(-2.0 * deg->direction.value() - kPi);
  }
  return chart(std::get<NonDegenerate>(lattice).basis);
}

Vec3 stereographic(const S3Point& p, const S3Point& pole) {
  if (distance(p, pole) <= 1e-9) {
    throw Error(ErrorCode::kPoleHit, "point coincides with the pole");
  }
  const Vec4 x = to_r4(p);
  const Vec4 n = to_r4(pole);

  // Frame of the hyperplane orthogonal to the pole: Gram-Schmidt on the
  // three coordinate axes least aligned with it.
  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::abs(n.c[i]) < std::abs(n.c[j]);
  });
  std::array<std::array<double, 4>, 4> frame{};
  frame[0] = {n.c[0], n.c[1], n.c[2], n.c[3]};
  for (int k = 1; k <= 3; ++k) {
    std::array<double, 4> e{};
    e[order[k - 1]] = 1.0;
    for (int j = 0; j < k; ++j) {
      double proj = 0.0;
      for (int i = 0; i < 4; ++i) proj += e[i] * frame[j][i];
      for (int i = 0; i < 4; ++i) e[i] -= proj * frame[j][i];
    }
    double len = 0.0;
    for (double c : e) len += c * c;
    len = std::sqrt(len);
    for (double& c : e) c /= len;
    frame[k] = e;
  }
  // Projection is close to the identity near the antipode, where the
  // outward normal is -pole, so (pole, e1, e2, e3) is kept negatively
  // oriented. Every pole then induces the boundary orientation of S^3.
  const auto minor3 = [&](int skip) {
    std::array<int, 3> cols{};
    for (int i = 0, j = 0; i < 4; ++i) {
      if (i != skip) cols[j++] = i;
    }
    const auto m = [&](int r, int c) { return frame[r + 1][cols[c]]; };
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  };
  double det = 0.0;
  for (int i = 0; i < 4; ++i) {
    det += (i % 2 == 0 ? 1.0 : -1.0) * frame[0][i] * minor3(i);
  }
  if (det > 0.0) {
    for (double& c : frame[3]) c = -c;
  }

  double along = 0.0;
  for (int i = 0; i < 4; ++i) along += x.c[i] * n.c[i];
  const double denom = 1.0 - along;
  std::array<double, 3> out{};
  for (int k = 1; k <= 3; ++k) {
    double c = 0.0;
    for (int i = 0; i < 4; ++i) c += x.c[i] * frame[k][i];
    out[k - 1] = c / denom;
  }
  return Vec3{out[0], out[1], out[2]};
}

}  // namespace lattice_exp3
