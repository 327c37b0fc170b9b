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

// The circle of lines through the origin, parametrized by angles in [0, pi),
// and its nonempty subsets of at most three points with the Hausdorff metric.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "lattice_exp3/geometry.hpp"

namespace lattice_exp3 {

inline constexpr double kDedupTol = 1e-9;

/// A line through the origin, stored as its angle in [0, pi).
class ProjAngle {
 public:
  ProjAngle() = default;
  /// Reduces any finite real mod pi; throws Error(kNonFinite) otherwise.
  explicit ProjAngle(double theta);

  double value() const { return theta_; }

  friend bool operator==(ProjAngle, ProjAngle) = default;
  friend auto operator<=>(ProjAngle a, ProjAngle b) {
    return a.theta_ <=> b.theta_;
  }

 private:
  double theta_ = 0.0;
};

/// Distance on the circle of circumference pi; lies in [0, pi/2].
double circle_dist(ProjAngle a, ProjAngle b);

/// Angle of the line spanned by `v`; throws Error(kZeroVector) for v = 0.
ProjAngle proj_angle_of(Vec2 v);

/// A point of exp_3 of the circle: one to three distinct lines, sorted.
class CircleSubset {
 public:
  std::size_t size() const { return size_; }
  ProjAngle operator[](std::size_t i) const { return points_[i]; }
  std::span<const ProjAngle> points() const { return {points_.data(), size_}; }
  auto begin() const { return points().begin(); }
  auto end() const { return points().end(); }

  friend bool operator==(const CircleSubset& a, const CircleSubset& b) {
    return std::ranges::equal(a.points(), b.points());
  }

 private:
  friend CircleSubset make_subset(std::span<const double> angles, double tol);

  std::array<ProjAngle, 3> points_{};
  std::size_t size_ = 0;
};

/// Image of (x_1, ..., x_k) under the quotient map to exp_3: reduces mod pi,
/// merges points within `tol` of each other (around the wrap too) and sorts.
/// Throws Error(kEmptyInput) for no angles, Error(kInvalidArgument) for more
/// than three.
CircleSubset make_subset(std::span<const double> angles,
                         double tol = kDedupTol);
CircleSubset make_subset(std::initializer_list<double> angles,
                         double tol = kDedupTol);

double hausdorff(const CircleSubset& s, const CircleSubset& t);

/// x -> {x}
CircleSubset delta_embed(ProjAngle x);

/// Action of SO(2): every line turned by `phi`.
CircleSubset rotate_subset(const CircleSubset& s, double phi);

}  // namespace lattice_exp3
