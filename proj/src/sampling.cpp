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

#include "lattice_exp3/sampling.hpp"

#include <array>
#include <cmath>

namespace lattice_exp3 {

Basis random_basis(Rng& rng) {
  for (;;) {
    const Vec2 u(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Vec2 v(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    if (norm(u) < 0.05 || norm(v) < 0.05) continue;
    if (std::abs(cross(u, v)) < 0.05 * norm(u) * norm(v)) continue;
    return Basis(u, v);
  }
}

Basis random_rectangular_basis(Rng& rng) {
  const double alpha = rng.uniform(0.0, kPi);
  const double a = rng.uniform(0.2, 2.0);
  const double b = rng.uniform(0.2, 2.0);
  const Basis rect(a * unit(alpha), b * unit(alpha + 0.5 * kPi));
  return apply(rect, random_unimodular(rng.next(), 3));
}

Basis near_rectangular_basis(Rng& rng, double eta) {
  const double alpha = rng.uniform(0.0, kPi);
  const double a = rng.uniform(0.3, 1.0);
  const double b = rng.uniform(1.2, 3.0);
  return Basis(a * unit(alpha), b * unit(alpha + 0.5 * kPi - eta));
}

CircleSubset random_subset(Rng& rng, std::size_t size,
                           double min_separation) {
  for (;;) {
    std::array<double, 3> angles{};
    for (std::size_t i = 0; i < size; ++i) angles[i] = rng.uniform(0.0, kPi);
    bool separated = true;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (circle_dist(ProjAngle(angles[i]), ProjAngle(angles[j])) <
            min_separation) {
          separated = false;
        }
      }
    }
    if (!separated) continue;
    return make_subset(std::span<const double>(angles.data(), size));
  }
}

}  // namespace lattice_exp3
