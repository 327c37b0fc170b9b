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

// Knot certification of closed space polylines: generic projection to a
// crossing diagram, Kauffman bracket state sum and Jones polynomial.
//
// Conventions. Crossing signs use the right-hand rule: viewed from the
// side of the over strand, the crossing is positive when the under strand
// passes from right to left of the over strand. The bracket satisfies
// <positive kink> = -A^3, and V(t) = (-A)^{-3 writhe} <D> at t = A^-4.
// With these conventions the trefoil with three positive crossings has
// V = t + t^3 - t^4 (reported as RightTrefoil) and its mirror
// V = t^-1 + t^-3 - t^-4 (LeftTrefoil).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lattice_exp3/geometry.hpp"
#include "lattice_exp3/laurent_poly.hpp"

namespace lattice_exp3 {

inline constexpr int kMaxCrossings = 24;
inline constexpr int kMaxProjectionAttempts = 64;

/// Closed polyline in R^3 (the last vertex connects back to the first).
/// Construction checks: at least 8 vertices, finite coordinates,
/// consecutive vertices more than 1e-9 apart, and non-adjacent segments
/// more than 1e-9 apart. Violations throw Error(kInvalidPolyline).
class Polyline3 {
 public:
  explicit Polyline3(std::vector<Vec3> points);

  std::span<const Vec3> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Vec3> points_;
};

/// One passage of the knot through a crossing, in traversal order.
struct GaussEntry {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// Arcs are numbered by traversal: passage p of the Gauss code sits between
/// arc p-1 (incoming) and arc p (outgoing), indices mod 2c.
struct Crossing {
  int over_in = 0;
  int over_out = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1;
};

class PlanarDiagram {
 public:
  /// Builds the diagram from a signed Gauss code. Each crossing index in
  /// [0, signs.size()) must occur exactly twice, once over and once under,
  /// and every sign must be +1 or -1; otherwise Error(kInvalidArgument).
  static PlanarDiagram from_gauss(std::vector<GaussEntry> code,
                                  std::vector<int> signs);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int writhe() const { return writhe_; }
  std::span<const Crossing> crossings() const { return crossings_; }
  std::span<const GaussEntry> gauss_code() const { return code_; }

 private:
  std::vector<GaussEntry> code_;
  std::vector<Crossing> crossings_;
  int writhe_ = 0;
};

/// Projects along seeded random directions until the picture is generic:
/// transverse crossings (angle > 1e-3 rad), no two crossings within 1e-6 of
/// each other, no vertex within 1e-9 of another segment, no segment seen
/// end-on (all relative to the projected extent), and at most 24 crossings.
/// `first_direction`, if given, is tried before the seeded ones.
/// Throws Error(kTooManyCrossings) if every generic direction tried had more
/// than 24 crossings, Error(kNoGenericDirection) if none was generic.
PlanarDiagram project_generic(const Polyline3& curve, std::uint64_t seed,
                              std::optional<Vec3> first_direction = {});

/// State sum over all 2^c smoothings. Throws Error(kTooManyCrossings).
LaurentPoly kauffman_bracket(const PlanarDiagram& d);

/// Jones polynomial in t. Throws Error(kNonKnotDiagram) if an exponent of A
/// is not a multiple of 4.
LaurentPoly jones(const PlanarDiagram& d);

enum class Verdict { kRightTrefoil, kLeftTrefoil, kUnknot, kOther };

std::string_view verdict_name(Verdict v);

/// t + t^3 - t^4
LaurentPoly right_trefoil_jones();

Verdict classify_jones(const LaurentPoly& v);

/// Trefoil verdicts hold up to Jones equivalence.
struct Certificate {
  Verdict verdict = Verdict::kOther;
  LaurentPoly jones;
  int crossings = 0;
  int writhe = 0;
};

Certificate certify(const Polyline3& curve, std::uint64_t seed);

Verdict is_trefoil(const Polyline3& curve, std::uint64_t seed);

}  // namespace lattice_exp3
