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

// Perimeter-one triangles with no obtuse angle, including the degenerate
// ones (a zero side flanked by two right angles), and the quotient map onto
// the compactified lattice space.

#pragma once

#include "lattice_exp3/phi_map.hpp"

namespace lattice_exp3 {

/// A triangle modulo translation, given by the side vectors a and b leaving
/// a base vertex; the third side is b - a. Degenerate shapes are stored
/// exactly as a = 0, b != 0.
class TriangleShape {
 public:
  Vec2 a() const { return a_; }
  Vec2 b() const { return b_; }
  Vec2 c() const { return b_ - a_; }
  bool is_degenerate() const { return norm2(a_) == 0.0; }
  double perimeter() const { return norm(a_) + norm(b_) + norm(b_ - a_); }

 private:
  friend TriangleShape make_shape(Vec2 a, Vec2 b);
  TriangleShape(Vec2 a, Vec2 b) : a_(a), b_(b) {}

  Vec2 a_;
  Vec2 b_;
};

/// Rescales to perimeter one and checks admissibility. A zero side (a = 0,
/// b = 0 or a = b) yields the degenerate shape; nonzero collinear sides
/// throw Error(kInvalidDegenerate); an obtuse angle throws
/// Error(kObtuseTriangle); a = b = 0 throws Error(kInvalidArgument).
TriangleShape make_shape(Vec2 a, Vec2 b);

/// The lattice spanned by two sides, or the line of a degenerate shape.
CompactifiedLattice p_map(const TriangleShape& t);

/// Right triangle with legs eps : 1, the long leg along `direction`,
/// tending to the degenerate shape along `direction` as eps -> 0.
/// Throws Error(kOutOfRange) unless 0 < eps <= 1.
TriangleShape degenerate_path(ProjAngle direction, double eps);

}  // namespace lattice_exp3
