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

// Closed curves on S^3 drawn in R^3: the push-off of the singleton circle
// carried through the inverse map and the Eisenstein chart, and the analytic
// torus knot.

#pragma once

#include <span>
#include <vector>

#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/milnor_chart.hpp"

namespace lattice_exp3 {

/// For theta_k = pi k / samples, the subset {theta - delta, theta,
/// theta + delta} sent through phi_inverse and the chart.
std::vector<S3Point> pushoff_curve_s3(int samples, double delta);

/// torus_knot_point(2 pi k / samples).
std::vector<S3Point> torus_curve_s3(int samples);

/// 1024 points of S^3 on a grid in Hopf coordinates
/// (cos eta e^{i xi1}, sin eta e^{i xi2}): 8 x 16 x 8 values.
std::vector<S3Point> s3_pole_grid();

struct PoleChoice {
  S3Point pole;
  /// Smallest distance from the pole to a curve sample.
  double clearance = 0.0;
};

/// Grid point farthest from the curve. Throws Error(kPoleHit) if even the
/// best clearance is below 1e-3.
PoleChoice select_pole(std::span<const S3Point> curve);

std::vector<Vec3> project_curve(std::span<const S3Point> curve,
                                const S3Point& pole);

enum class CurveKind { kPushoff, kTorus };

/// Full pipeline: curve on S^3, automatic pole, stereographic projection.
Polyline3 trefoil_polyline(CurveKind kind, int samples, double delta);

}  // namespace lattice_exp3
