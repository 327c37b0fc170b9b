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

// Independent reference implementations used by the tests. Each one takes a
// different route from the library code it checks.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/lattice_core.hpp"

namespace oracle {

using lattice_exp3::Vec2;
using lattice_exp3::Vec3;
using lattice_exp3::kPi;

/// Shortest nonzero lattice vector length by enumeration over |m|, |n| <= r.
inline double shortest_length(const lattice_exp3::Basis& b, int r = 40) {
  double best = std::numeric_limits<double>::infinity();
  for (int m = -r; m <= r; ++m) {
    for (int n = -r; n <= r; ++n) {
      if (m == 0 && n == 0) continue;
      best = std::min(best, lattice_exp3::norm(m * b.u() + n * b.v()));
    }
  }
  return best;
}

/// Circumcenter from the two perpendicular-bisector equations
/// 2 <x, q - p> = |q|^2 - |p|^2, solved by Cramer's rule.
inline Vec2 bisector_circumcenter(Vec2 a, Vec2 b, Vec2 c) {
  const double a11 = 2 * (b.x() - a.x()), a12 = 2 * (b.y() - a.y());
  const double a21 = 2 * (c.x() - a.x()), a22 = 2 * (c.y() - a.y());
  const double r1 = lattice_exp3::norm2(b) - lattice_exp3::norm2(a);
  const double r2 = lattice_exp3::norm2(c) - lattice_exp3::norm2(a);
  const double det = a11 * a22 - a12 * a21;
  return Vec2((r1 * a22 - r2 * a12) / det, (a11 * r2 - a21 * r1) / det);
}

/// 60 and 140 times the sums of w^-4 and w^-6 over the nonzero points of
/// Z + tau Z in the disk of radius r, summed from the outside in.
inline std::pair<std::complex<double>, std::complex<double>> disk_lattice_sum(
    std::complex<double> tau, double r) {
  std::vector<std::complex<double>> points;
  const int nmax = static_cast<int>(r / tau.imag()) + 1;
  for (int n = -nmax; n <= nmax; ++n) {
    const int mmax = static_cast<int>(r + std::abs(n * tau.real())) + 1;
    for (int m = -mmax; m <= mmax; ++m) {
      if (m == 0 && n == 0) continue;
      const std::complex<double> w = double(m) + double(n) * tau;
      if (std::abs(w) <= r) points.push_back(w);
    }
  }
  std::sort(points.begin(), points.end(), [](auto x, auto y) {
    return std::abs(x) > std::abs(y);
  });
  std::complex<double> s4 = 0.0, s6 = 0.0;
  for (const auto& w : points) {
    s4 += std::pow(w, -4);
    s6 += std::pow(w, -6);
  }
  return {60.0 * s4, 140.0 * s6};
}

/// Number of sign lifts of three lines, modulo a global flip, whose unit
/// vectors span a triangle containing the origin.
inline int lifts_containing_origin(double a, double b, double c) {
  const Vec2 d[3] = {lattice_exp3::unit(a), lattice_exp3::unit(b),
                     lattice_exp3::unit(c)};
  int count = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Vec2 p[3];
    for (int i = 0; i < 3; ++i) p[i] = ((mask >> i) & 1) ? -1.0 * d[i] : d[i];
    const double s0 = lattice_exp3::cross(p[1] - p[0], -1.0 * p[0]);
    const double s1 = lattice_exp3::cross(p[2] - p[1], -1.0 * p[1]);
    const double s2 = lattice_exp3::cross(p[0] - p[2], -1.0 * p[2]);
    const bool inside = (s0 >= 0 && s1 >= 0 && s2 >= 0) ||
                        (s0 <= 0 && s1 <= 0 && s2 <= 0);
    if (inside) ++count;
  }
  return count / 2;
}

/// Kauffman bracket of a signed diagram by explicit loop tracing: each
/// state is turned into an adjacency list on arcs and the cycles are
/// walked. Smoothing rules follow the library's documented convention.
inline lattice_exp3::LaurentPoly bracket_by_loop_tracing(
    const lattice_exp3::PlanarDiagram& d) {
  const auto xs = d.crossings();
  const int c = static_cast<int>(xs.size());
  const int arcs = 2 * c;
  lattice_exp3::LaurentPoly total;
  if (c == 0) return lattice_exp3::LaurentPoly::monomial(1, 0);
  const lattice_exp3::LaurentPoly loop_factor{{2, -1}, {-2, -1}};
  for (long state = 0; state < (1L << c); ++state) {
    std::vector<std::vector<int>> adj(arcs);
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& x = xs[i];
      const bool a_smooth = ((state >> i) & 1) == 0;
      a_count += a_smooth ? 1 : 0;
      int p1, q1, p2, q2;
      if (x.sign > 0 && a_smooth) {
        p1 = x.under_out, q1 = x.over_in, p2 = x.under_in, q2 = x.over_out;
      } else if (x.sign > 0) {
        p1 = x.over_in, q1 = x.under_in, p2 = x.over_out, q2 = x.under_out;
      } else if (a_smooth) {
        p1 = x.under_in, q1 = x.over_in, p2 = x.under_out, q2 = x.over_out;
      } else {
        p1 = x.over_in, q1 = x.under_out, p2 = x.over_out, q2 = x.under_in;
      }
      adj[p1].push_back(q1);
      adj[q1].push_back(p1);
      adj[p2].push_back(q2);
      adj[q2].push_back(p2);
    }
    std::vector<bool> seen(arcs, false);
    int loops = 0;
    for (int s = 0; s < arcs; ++s) {
      if (seen[s]) continue;
      ++loops;
      std::vector<int> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    lattice_exp3::LaurentPoly term =
        lattice_exp3::LaurentPoly::monomial(1, a_count - (c - a_count));
    for (int k = 1; k < loops; ++k) term = term * loop_factor;
    total += term;
  }
  return total;
}

inline std::vector<Vec3> circle_curve(int n, double r = 1.0) {
  std::vector<Vec3> out;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    out.push_back({r * std::cos(t), r * std::sin(t), 0.0});
  }
  return out;
}

/// (sin t + 2 sin 2t, cos t - 2 cos 2t, -sin 3t)
inline std::vector<Vec3> trefoil_curve(int n, bool mirror = false) {
  std::vector<Vec3> out;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    const double z = -std::sin(3 * t);
    out.push_back({std::sin(t) + 2 * std::sin(2 * t),
                   std::cos(t) - 2 * std::cos(2 * t), mirror ? -z : z});
  }
  return out;
}

/// ((2 + cos 2t) cos 3t, (2 + cos 2t) sin 3t, sin 4t)
inline std::vector<Vec3> figure_eight_curve(int n) {
  std::vector<Vec3> out;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * kPi * k / n;
    const double r = 2 + std::cos(2 * t);
    out.push_back({r * std::cos(3 * t), r * std::sin(3 * t), std::sin(4 * t)});
  }
  return out;
}

}  // namespace oracle
