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

// Small value types for plane and space vectors.

#pragma once

#include <cmath>
#include <numbers>

#include "lattice_exp3/error.hpp"

namespace lattice_exp3 {

inline constexpr double kPi = std::numbers::pi;

/// A point or vector of the plane. Construction rejects NaN and infinities,
/// so every Vec2 in circulation is finite.
class Vec2 {
 public:
  constexpr Vec2() = default;
  Vec2(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::kNonFinite, "Vec2 components must be finite");
    }
  }

  double x() const { return x_; }
  double y() const { return y_; }

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x_, -a.y_}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x_, s * a.y_}; }
  friend Vec2 operator*(Vec2 a, double s) { return s * a; }
  friend bool operator==(Vec2 a, Vec2 b) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x() * b.x() + a.y() * b.y(); }
inline double cross(Vec2 a, Vec2 b) { return a.x() * b.y() - a.y() * b.x(); }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x(), a.y()); }

/// Unit vector at angle `alpha` from the positive x axis.
inline Vec2 unit(double alpha) { return {std::cos(alpha), std::sin(alpha)}; }

/// Rotation by `theta` counterclockwise.
inline Vec2 rotate(Vec2 a, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * a.x() - s * a.y(), s * a.x() + c * a.y()};
}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace lattice_exp3
