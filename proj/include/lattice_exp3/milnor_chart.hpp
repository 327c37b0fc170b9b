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

// Chart of the compactified lattice space onto the unit 3-sphere in C^2.
//
// A lattice L is sent to its invariants (g2, g3) = (60 G4, 140 G6), which
// scale as (t^-4 g2, t^-6 g3) under L -> tL. Picking the unique t > 0 with
// |g2|^2 + |g3|^2 = 1 gives a point of S^3 depending only on L modulo scale.
// The discriminant g2^3 - 27 g3^2 vanishes exactly in the degenerate limit,
// whose image is the (2,3) torus knot {z^3 = 27 w^2} on S^3.

#pragma once

#include <complex>

#include "lattice_exp3/geometry.hpp"
#include "lattice_exp3/phi_map.hpp"

namespace lattice_exp3 {

using ComplexVal = std::complex<double>;

/// Lattice u (Z + tau Z) with tau in the closed modular fundamental domain.
struct TauForm {
  ComplexVal u;
  ComplexVal tau;
};

struct EisensteinPair {
  ComplexVal g2;
  ComplexVal g3;
};

/// A point (z, w) with |z|^2 + |w|^2 = 1.
struct S3Point {
  ComplexVal z;
  ComplexVal w;
};

/// Coordinates of an S3Point in R^4: (Re z, Im z, Re w, Im w).
struct Vec4 {
  double c[4];
};
Vec4 to_r4(const S3Point& p);
double distance(const S3Point& p, const S3Point& q);

/// Series terms below this (relative to the constant term) are dropped.
inline constexpr double kSeriesCutoff = 1e-16;

TauForm tau_of(const Basis& b);

EisensteinPair eisenstein(const TauForm& t);

/// Throws Error(kBothZero) for g2 = g3 = 0.
S3Point normalize_to_s3(ComplexVal g2, ComplexVal g3);

/// The t > 0 used by normalize_to_s3, returned as log t.
double normalization_log_scale(ComplexVal g2, ComplexVal g3);

ComplexVal discriminant(ComplexVal g2, ComplexVal g3);

/// g2^3 - 27 g3^2 of the lattice evaluated through the product
/// (2 pi)^12 q prod (1 - q^n)^24, which keeps full relative precision when
/// the discriminant is tiny.
ComplexVal discriminant_product(const TauForm& t);

/// (a, b) with a^3 = 27 b^2 and a^2 + b^2 = 1.
std::pair<double, double> torus_knot_radii();

/// (a e^{2it}, b e^{3it}).
S3Point torus_knot_point(double t);

/// Nondegenerate lattices go through eisenstein + normalize_to_s3. A
/// degenerate lattice along theta is the limit of thin triangles along
/// theta, whose shortest vector points along theta + pi/2, and lands on
/// torus_knot_point(-2 theta - pi).
S3Point chart(const CompactifiedLattice& lattice);
S3Point chart(const Basis& basis);

/// Stereographic projection of S^3 from `pole` onto the hyperplane through
/// the origin orthogonal to it, in an orthonormal frame of that hyperplane.
/// The frame is oriented so that every pole induces the boundary
/// orientation of S^3 in C^2, which keeps knot chirality independent of
/// the pole. Throws Error(kPoleHit) within 1e-9 of the pole.
Vec3 stereographic(const S3Point& p, const S3Point& pole);

/// Degeneration diagnostics of a lattice computed with 200 significant
/// decimal digits, so that deviations far below double resolution remain
/// visible. The results are rounded to double at the end.
struct DegenerationProbe {
  /// |g2^3 - 27 g3^2| at the normalized S^3 point.
  double normalized_discriminant = 0.0;
  /// Distance in R^4 from the chart point to the nearest of the torus-knot
  /// samples torus_knot_point(2 pi k / samples).
  double torus_distance = 0.0;
  int nearest_sample = -1;
};

DegenerationProbe probe_degeneration(const Basis& basis,
                                     int torus_samples = 4096);

}  // namespace lattice_exp3
