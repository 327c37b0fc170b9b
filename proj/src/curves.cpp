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

#include "lattice_exp3/curves.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace lattice_exp3 {

std::vector<S3Point> pushoff_curve_s3(int samples, double delta) {
  std::vector<S3Point> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double theta = kPi * k / samples;
    const std::array<double, 3> angles = {theta - delta, theta, theta + delta};
    out.push_back(chart(phi_inverse(make_subset(angles))));
  }
  return out;
}

std::vector<S3Point> torus_curve_s3(int samples) {
  std::vector<S3Point> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    out.push_back(torus_knot_point(2.0 * kPi * k / samples));
  }
  return out;
}

std::vector<S3Point> s3_pole_grid() {
  std::vector<S3Point> grid;
  grid.reserve(1024);
  for (int i = 0; i < 8; ++i) {
    const double eta = (i + 0.5) / 8.0 * 0.5 * kPi;
    for (int j = 0; j < 16; ++j) {
      const double xi1 = 2.0 * kPi * j / 16.0;
      for (int k = 0; k < 8; ++k) {
        const double xi2 = 2.0 * kPi * k / 8.0;
        grid.push_back(S3Point{std::polar(std::cos(eta), xi1),
                               std::polar(std::sin(eta), xi2)});
      }
    }
  }
  return grid;
}

PoleChoice select_pole(std::span<const S3Point> curve) {
  PoleChoice best;
  best.clearance = -1.0;
  for (const S3Point& candidate : s3_pole_grid()) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const S3Point& p : curve) {
      clearance = std::min(clearance, distance(candidate, p));
    }
    if (clearance > best.clearance) best = {candidate, clearance};
  }
  if (best.clearance < 1e-3) {
    throw Error(ErrorCode::kPoleHit, "no pole keeps clear of the curve");
  }
  return best;
}

std::vector<Vec3> project_curve(std::span<const S3Point> curve,
                                const S3Point& pole) {
  std::vector<Vec3> out;
  out.reserve(curve.size());
  for (const S3Point& p : curve) out.push_back(stereographic(p, pole));
  return out;
}

Polyline3 trefoil_polyline(CurveKind kind, int samples, double delta) {
  const std::vector<S3Point> curve = kind == CurveKind::kPushoff
                                         ? pushoff_curve_s3(samples, delta)
                                         : torus_curve_s3(samples);
  const PoleChoice pole = select_pole(curve);
  return Polyline3(project_curve(curve, pole.pole));
}

}  // namespace lattice_exp3
