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

#include "lattice_exp3/lattice_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>
#include <utility>

#include "lattice_exp3/random.hpp"

namespace lattice_exp3 {

namespace {

bool nearly_dependent(Vec2 u, Vec2 v) {
  return std::abs(cross(u, v)) <= kLinearDependenceEps * norm(u) * norm(v);
}

Vec2 combine(std::int64_t m, Vec2 u, std::int64_t n, Vec2 v) {
  return static_cast<double>(m) * u + static_cast<double>(n) * v;
}

}  // namespace

Basis::Basis(Vec2 u, Vec2 v) : u_(u), v_(v) {
  if (norm2(u) == 0.0 || norm2(v) == 0.0 || nearly_dependent(u, v)) {
    throw Error(ErrorCode::kDegenerateInput,
                "basis vectors are linearly dependent");
  }
}

Basis apply(const Basis& basis, const IntMatrix2& m) {
  return Basis(combine(m.a, basis.u(), m.c, basis.v()),
               combine(m.b, basis.u(), m.d, basis.v()));
}

ReducedBasis gauss_reduce(const Basis& b) {
  Vec2 u = b.u();
  Vec2 v = b.v();
  if (norm2(v) < norm2(u)) std::swap(u, v);

  // Each pass strictly shortens v or stops; the cap only guards against
  // floating-point cycling on pathological inputs.
  for (int iter = 0; iter < 4096; ++iter) {
    const double mu = dot(u, v) / norm2(u);
    const double m = std::round(mu);
    if (m != 0.0) v = v - m * u;
    if (norm2(v) < norm2(u)) {
      std::swap(u, v);
      continue;
    }
    break;
  }

  if (dot(u, v) < 0.0) v = -v;
  if (u.y() < 0.0 || (u.y() == 0.0 && u.x() < 0.0)) {
    u = -u;
    v = -v;
  }
  return ReducedBasis(u, v);
}

bool is_rectangular(const Basis& b, double tol) {
  const ReducedBasis r = gauss_reduce(b);
  return std::abs(dot(r.u(), r.v())) <= tol * norm(r.u()) * norm(r.v());
}

Vec2 circumcenter(const Triangle& t) {
  const Vec2 b = t.b - t.a;
  const Vec2 c = t.c - t.a;
  const double d = 2.0 * cross(b, c);
  if (norm2(b) == 0.0 || norm2(c) == 0.0 ||
      std::abs(d) <= 2.0 * kLinearDependenceEps * norm(b) * norm(c)) {
    throw Error(ErrorCode::kCollinearVertices,
                "circumcenter of collinear vertices");
  }
  const double b2 = norm2(b);
  const double c2 = norm2(c);
  const Vec2 offset((c.y() * b2 - b.y() * c2) / d,
                    (b.x() * c2 - c.x() * b2) / d);
  return t.a + offset;
}

bool is_nonobtuse(const Triangle& t, double tol) {
  const auto ok = [tol](Vec2 apex, Vec2 p, Vec2 q) {
    const Vec2 e1 = p - apex;
    const Vec2 e2 = q - apex;
    return dot(e1, e2) >= -tol * norm(e1) * norm(e2);
  };
  return ok(t.a, t.b, t.c) && ok(t.b, t.c, t.a) && ok(t.c, t.a, t.b);
}

std::vector<GeneratorTriangle> enumerate_generator_triangles(
    const Basis& b, double angle_tol) {
  const ReducedBasis r = gauss_reduce(b);
  using Coef = std::array<std::int64_t, 2>;

  std::vector<Coef> coefs;
  for (std::int64_t m = -2; m <= 2; ++m) {
    for (std::int64_t n = -2; n <= 2; ++n) {
      if (m != 0 || n != 0) coefs.push_back({m, n});
    }
  }

  // Triangles (0, a, a + b) for side vectors a, b forming a basis. Vertices
  // are lattice points, so dedup is exact on integer coordinates.
  std::vector<std::pair<Coef, Coef>> seen;
  std::vector<GeneratorTriangle> out;
  for (const Coef& a : coefs) {
    for (const Coef& s : coefs) {
      if (std::llabs(a[0] * s[1] - a[1] * s[0]) != 1) continue;
      Coef p = a;
      Coef q = {a[0] + s[0], a[1] + s[1]};
      const Triangle tri{Vec2(), combine(p[0], r.u(), p[1], r.v()),
                         combine(q[0], r.u(), q[1], r.v())};
      if (!is_nonobtuse(tri, angle_tol)) continue;
      if (q < p) std::swap(p, q);
      if (std::find(seen.begin(), seen.end(), std::pair{p, q}) != seen.end()) {
        continue;
      }
      seen.emplace_back(p, q);
      out.push_back({Triangle{Vec2(), combine(p[0], r.u(), p[1], r.v()),
                              combine(q[0], r.u(), q[1], r.v())},
                     p, q});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.p_coef, x.q_coef) < std::tie(y.p_coef, y.q_coef);
  });
  return out;
}

bool lattice_eq_mod_scale(const Basis& a, const Basis& b, double tol) {
  const ReducedBasis ra = gauss_reduce(a);
  const ReducedBasis rb = gauss_reduce(b);
  const double scale = norm(rb.u()) / norm(ra.u());
  const double det_b = cross(rb.u(), rb.v());

  // Write the rescaled reduced vectors of `a` in the reduced basis of `b`;
  // equality holds iff the coordinates are integers forming a unimodular
  // matrix.
  IntMatrix2 m;
  const auto coords = [&](Vec2 w, std::int64_t& x, std::int64_t& y) {
    const double cx = cross(w, rb.v()) / det_b;
    const double cy = cross(rb.u(), w) / det_b;
    x = std::llround(cx);
    y = std::llround(cy);
    const Vec2 residual = w - combine(x, rb.u(), y, rb.v());
    return norm(residual) <= tol * norm(rb.u());
  };
  if (!coords(scale * ra.u(), m.a, m.c)) return false;
  if (!coords(scale * ra.v(), m.b, m.d)) return false;
  return std::llabs(m.det()) == 1;
}

IntMatrix2 random_unimodular(std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) {
    throw Error(ErrorCode::kOutOfRange, "random_unimodular bound must be >= 1");
  }
  Rng rng(seed);
  IntMatrix2 m;
  const auto steps = rng.uniform_int(0, 12);
  for (std::int64_t i = 0; i < steps; ++i) {
    IntMatrix2 next = m;
    const std::int64_t k = rng.uniform_int(0, 1) == 0 ? -1 : 1;
    switch (rng.uniform_int(0, 3)) {
      case 0:  // v += k u
        next.b += k * m.a;
        next.d += k * m.c;
        break;
      case 1:  // u += k v
        next.a += k * m.b;
        next.c += k * m.d;
        break;
      case 2:
        std::swap(next.a, next.b);
        std::swap(next.c, next.d);
        break;
      default:
        next.b = -next.b;
        next.d = -next.d;
        break;
    }
    const bool within =
        std::llabs(next.a) <= bound && std::llabs(next.b) <= bound &&
        std::llabs(next.c) <= bound && std::llabs(next.d) <= bound;
    if (within) m = next;
  }
  return m;
}

}  // namespace lattice_exp3
