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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "lattice_exp3/exp_circle.hpp"

namespace lattice_exp3 {
namespace {

TEST(ProjAngle, ReducesModPi) {
  EXPECT_NEAR(ProjAngle(kPi + 0.25).value(), 0.25, 1e-15);
  EXPECT_NEAR(ProjAngle(-0.25).value(), kPi - 0.25, 1e-15);
  EXPECT_GE(ProjAngle(-1e-18).value(), 0.0);
  EXPECT_LT(ProjAngle(-1e-18).value(), kPi);
  EXPECT_THROW(ProjAngle(NAN), Error);
}

TEST(CircleDist, WrapsAround) {
  EXPECT_NEAR(circle_dist(ProjAngle(0.1), ProjAngle(kPi - 0.1)), 0.2, 1e-15);
  EXPECT_NEAR(circle_dist(ProjAngle(0.0), ProjAngle(kPi / 2)), kPi / 2, 1e-15);
}

TEST(ProjAngleOf, LinesNotRays) {
  EXPECT_NEAR(proj_angle_of({-1, -1}).value(), kPi / 4, 1e-15);
  EXPECT_THROW(proj_angle_of({0, 0}), Error);
}

TEST(MakeSubset, DedupAndSort) {
  const CircleSubset s = make_subset({2.0, 0.5, 0.5 + 1e-12});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_LT(s[0], s[1]);
  const CircleSubset w = make_subset({1e-12, kPi - 1e-12});
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(make_subset({0.1, 0.1 + kPi}).size(), 1u);
  EXPECT_EQ(make_subset({0.1, 0.2, 0.3}).size(), 3u);
  EXPECT_THROW(make_subset(std::vector<double>{}), Error);
  EXPECT_THROW(make_subset({0.1, 0.2, 0.3, 0.4}), Error);
}

TEST(Hausdorff, Basics) {
  const CircleSubset a = make_subset({0.1, 1.0});
  const CircleSubset b = make_subset({0.1});
  EXPECT_EQ(hausdorff(a, a), 0.0);
  EXPECT_NEAR(hausdorff(a, b), 0.9, 1e-15);
  EXPECT_EQ(hausdorff(a, b), hausdorff(b, a));
  EXPECT_NEAR(hausdorff(make_subset({0.05}), make_subset({kPi - 0.05})), 0.1,
              1e-15);
}

TEST(Hausdorff, TriangleInequality) {
  const CircleSubset a = make_subset({0.1, 1.0, 2.0});
  const CircleSubset b = make_subset({0.4, 2.5});
  const CircleSubset c = make_subset({3.0});
  EXPECT_LE(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c) + 1e-15);
}

TEST(DeltaEmbed, Singleton) {
  const CircleSubset d = delta_embed(ProjAngle(0.7));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].value(), 0.7);
}

TEST(RotateSubset, IsIsometry) {
  const CircleSubset a = make_subset({0.1, 1.0, 2.0});
  const CircleSubset b = make_subset({0.3, 2.9});
  const double before = hausdorff(a, b);
  EXPECT_NEAR(hausdorff(rotate_subset(a, 1.234), rotate_subset(b, 1.234)),
              before, 1e-14);
  EXPECT_EQ(rotate_subset(a, 0.5).size(), 3u);
}

}  // namespace
}  // namespace lattice_exp3
