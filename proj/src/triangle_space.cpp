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

#include "lattice_exp3/triangle_space.hpp"

#include <cmath>

namespace lattice_exp3 {

TriangleShape make_shape(Vec2 a, Vec2 b) {
  const bool a_zero = norm2(a) == 0.0;
  const bool b_zero = norm2(b) == 0.0;
  if (a_zero && b_zero) {
    throw Error(ErrorCode::kInvalidArgument, "triangle needs a nonzero side");
  }

  // Move the base vertex so the zero side, if any, is a.
  if (b_zero) {
    b = a;
    a = Vec2();
  } else if (a == b) {
    b = -a;
    a = Vec2();
  }
  if (norm2(a) == 0.0) {
    return TriangleShape(Vec2(), (0.5 / norm(b)) * b);
  }

  if (std::abs(cross(a, b)) <= kLinearDependenceEps * norm(a) * norm(b)) {
    throw Error(ErrorCode::kInvalidDegenerate,
                "collinear sides must include a zero side");
  }
  if (!is_nonobtuse(Triangle{Vec2(), a, b})) {
    throw Error(ErrorCode::kObtuseTriangle, "triangle has an obtuse angle");
  }
  const double scale = 1.0 / (norm(a) + norm(b) + norm(b - a));
  return TriangleShape(scale * a, scale * b);
}

CompactifiedLattice p_map(const TriangleShape& t) {
  if (t.is_degenerate()) return Degenerate{proj_angle_of(t.b())};
  return NonDegenerate{Basis(t.a(), t.b())};
}

TriangleShape degenerate_path(ProjAngle direction, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "degenerate_path needs 0 < eps <= 1");
  }
  const double theta = direction.value();
  return make_shape(eps * unit(theta + 0.5 * kPi), unit(theta));
}

}  // namespace lattice_exp3
