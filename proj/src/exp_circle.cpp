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

#include "lattice_exp3/exp_circle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lattice_exp3 {

ProjAngle::ProjAngle(double theta) {
  if (!std::isfinite(theta)) {
    throw Error(ErrorCode::kNonFinite, "angle must be finite");
  }
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  // fmod of a tiny negative number plus pi rounds up to pi itself.
  if (t >= kPi) t = 0.0;
  theta_ = t;
}

double circle_dist(ProjAngle a, ProjAngle b) {
  const double d = std::abs(a.value() - b.value());
  return std::min(d, kPi - d);
}

ProjAngle proj_angle_of(Vec2 v) {
  if (v.x() == 0.0 && v.y() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "zero vector spans no line");
  }
  return ProjAngle(std::atan2(v.y(), v.x()));
}

CircleSubset make_subset(std::span<const double> angles, double tol) {
  if (angles.empty()) {
    throw Error(ErrorCode::kEmptyInput, "subset needs at least one angle");
  }
  if (angles.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "exp_3 holds at most three points");
  }
  std::vector<ProjAngle> sorted;
  for (double a : angles) sorted.emplace_back(a);
  std::sort(sorted.begin(), sorted.end());

  CircleSubset out;
  for (ProjAngle p : sorted) {
    if (out.size_ > 0 && circle_dist(p, out.points_[out.size_ - 1]) <= tol) {
      continue;
    }
    out.points_[out.size_++] = p;
  }
  while (out.size_ > 1 &&
         circle_dist(out.points_[out.size_ - 1], out.points_[0]) <= tol) {
    --out.size_;
  }
  return out;
}

CircleSubset make_subset(std::initializer_list<double> angles, double tol) {
  return make_subset(std::span<const double>(angles.begin(), angles.size()),
                     tol);
}

double hausdorff(const CircleSubset& s, const CircleSubset& t) {
  const auto directed = [](const CircleSubset& from, const CircleSubset& to) {
    double worst = 0.0;
    for (ProjAngle p : from) {
      double best = kPi;
      for (ProjAngle q : to) best = std::min(best, circle_dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(s, t), directed(t, s));
}

CircleSubset delta_embed(ProjAngle x) { return make_subset({x.value()}); }

CircleSubset rotate_subset(const CircleSubset& s, double phi) {
  std::array<double, 3> shifted{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    shifted[i] = s[i].value() + phi;
  }
  // Rotation preserves distances; only exact coincidences are merged.
  return make_subset(std::span<const double>(shifted.data(), s.size()), 0.0);
}

}  // namespace lattice_exp3
