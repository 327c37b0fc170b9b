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

// The map from compactified lattices to exp_3 of the circle and its inverse.
//
// A nondegenerate lattice is sent to the three lines joining the vertices of
// a non-obtuse generating triangle to that triangle's circumcenter. For a
// rectangular lattice the triangle is right-angled, the circumcenter is the
// midpoint of the hypotenuse, and two of the lines coincide. A degenerate
// lattice (a single line) is sent to that line.

#pragma once

#include <array>
#include <variant>

#include "lattice_exp3/exp_circle.hpp"
#include "lattice_exp3/lattice_core.hpp"

namespace lattice_exp3 {

struct NonDegenerate {
  Basis basis;
};

struct Degenerate {
  ProjAngle direction;
};

/// A point of the compactified lattice space, modulo nonzero real scaling.
using CompactifiedLattice = std::variant<NonDegenerate, Degenerate>;

/// Lines from the circumcenter of `t` through its vertices.
CircleSubset phi_from_triangle(const Triangle& t, double tol = kDedupTol);

CircleSubset phi(const CompactifiedLattice& lattice, double tol = kDedupTol);
CircleSubset phi(const Basis& basis, double tol = kDedupTol);

/// Inverse of phi; nondegenerate results carry a reduced basis.
CompactifiedLattice phi_inverse(const CircleSubset& s, double tol = kDedupTol);

/// Chooses a unit vector on each of three distinct lines so that the three
/// points lie in no open half circle. The inscribed triangle is then
/// non-obtuse with circumcenter at the origin. Throws Error(kNotDistinct).
Triangle lift_nonobtuse(ProjAngle a, ProjAngle b, ProjAngle c,
                        double tol = kDedupTol);

/// How many of the four sign choices (mod a global flip) put the lifted
/// points in no open half circle. Exactly one for distinct lines.
int count_covering_sign_classes(ProjAngle a, ProjAngle b, ProjAngle c);

/// Orthogonal basis whose image under phi is {p, q}.
/// Throws Error(kNotDistinct).
Basis rect_from_pair(ProjAngle p, ProjAngle q, double tol = kDedupTol);

/// Equality in the compactified space: both degenerate along the same line,
/// or both nondegenerate and equal modulo scale.
bool compactified_eq(const CompactifiedLattice& a, const CompactifiedLattice& b,
                     double tol = kLatticeTol);

}  // namespace lattice_exp3
