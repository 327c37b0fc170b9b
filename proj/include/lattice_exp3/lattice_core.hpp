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

// Plane lattices given by bases: Gauss-Lagrange reduction, rectangularity,
// circumcenters and the non-obtuse generating triangles anchored at the
// origin.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lattice_exp3/geometry.hpp"

namespace lattice_exp3 {

/// Relative threshold below which |u x v| / (|u||v|) counts as dependent.
inline constexpr double kLinearDependenceEps = 1e-12;
/// Relative slack for "angle does not exceed pi/2" dot-product tests.
inline constexpr double kAngleTol = 1e-9;
/// Default tolerance for rectangularity and lattice comparisons.
inline constexpr double kLatticeTol = 1e-9;

/// An ordered pair of linearly independent plane vectors.
class Basis {
 public:
  /// Throws Error(kDegenerateInput) if |u x v| <= eps |u||v|.
  Basis(Vec2 u, Vec2 v);

  Vec2 u() const { return u_; }
  Vec2 v() const { return v_; }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Vec2 u_;
  Vec2 v_;
};

/// Gauss-Lagrange reduced basis of a lattice:
///   |u| <= |v|,  0 <= <u,v> <= |u|^2 / 2,
/// and u points into the upper half plane (projective angle in [0, pi)).
/// Only gauss_reduce produces these.
class ReducedBasis {
 public:
  Vec2 u() const { return u_; }
  Vec2 v() const { return v_; }
  Basis basis() const { return Basis(u_, v_); }

 private:
  friend ReducedBasis gauss_reduce(const Basis& b);
  ReducedBasis(Vec2 u, Vec2 v) : u_(u), v_(v) {}

  Vec2 u_;
  Vec2 v_;
};

struct Triangle {
  Vec2 a;
  Vec2 b;
  Vec2 c;
};

/// Integer change of basis [[a, b], [c, d]] acting on basis columns:
/// (u, v) -> (a u + c v, b u + d v).
struct IntMatrix2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

Basis apply(const Basis& basis, const IntMatrix2& m);

ReducedBasis gauss_reduce(const Basis& b);

bool is_rectangular(const Basis& b, double tol = kLatticeTol);

/// Throws Error(kCollinearVertices) for (numerically) collinear vertices.
Vec2 circumcenter(const Triangle& t);

/// True iff every angle of `t` is at most pi/2, tested by the signs of the
/// vertex dot products with relative slack `tol`.
bool is_nonobtuse(const Triangle& t, double tol = kAngleTol);

/// A generating triangle (0, p, q) with its vertices written in coordinates
/// of the reduced basis, p = p_coef[0] u + p_coef[1] v.
struct GeneratorTriangle {
  Triangle triangle;
  std::array<std::int64_t, 2> p_coef;
  std::array<std::int64_t, 2> q_coef;
};

/// All origin-anchored non-obtuse triangles with lattice vertices whose
/// sides generate the lattice: 12 for a rectangular lattice, 6 otherwise.
std::vector<GeneratorTriangle> enumerate_generator_triangles(
    const Basis& b, double angle_tol = kAngleTol);

/// True iff a positive multiple of lattice `a` equals lattice `b`.
bool lattice_eq_mod_scale(const Basis& a, const Basis& b,
                          double tol = kLatticeTol);

/// Deterministic random matrix in GL(2, Z) with entries bounded by `bound`.
IntMatrix2 random_unimodular(std::uint64_t seed, std::int64_t bound);

}  // namespace lattice_exp3
