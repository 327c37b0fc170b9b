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

#include "../oracles.hpp"
#include "lattice_exp3/lattice_core.hpp"
#include "lattice_exp3/random.hpp"
#include "lattice_exp3/sampling.hpp"

namespace lattice_exp3 {
namespace {

TEST(Basis, RejectsDependentVectors) {
  EXPECT_THROW(Basis({1, 0}, {2, 0}), Error);
  EXPECT_THROW(Basis({0, 0}, {1, 1}), Error);
  try {
    Basis({1, 1}, {-3, -3});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
  }
  EXPECT_NO_THROW(Basis({1, 0}, {1, 1e-6}));
}

TEST(Vec2, RejectsNonFinite) {
  EXPECT_THROW(Vec2(NAN, 0), Error);
  EXPECT_THROW(Vec2(0, INFINITY), Error);
}

TEST(GaussReduce, SatisfiesReductionConditions) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Basis b = random_basis(rng);
    const ReducedBasis r = gauss_reduce(b);
    const double uu = norm2(r.u());
    EXPECT_LE(uu, norm2(r.v()) * (1 + 1e-12));
    EXPECT_GE(dot(r.u(), r.v()), -1e-12 * uu);
    EXPECT_LE(dot(r.u(), r.v()), 0.5 * uu * (1 + 1e-12));
    EXPECT_TRUE(lattice_eq_mod_scale(b, r.basis()));
  }
}

TEST(GaussReduce, ShortestVectorMatchesEnumeration) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Basis b = random_basis(rng);
    const ReducedBasis r = gauss_reduce(b);
    EXPECT_NEAR(norm(r.u()), oracle::shortest_length(b), 1e-12);
  }
}

TEST(GaussReduce, HandlesSkewedInput) {
  const Basis b({1, 0}, {1000.3, 1e-3});
  const ReducedBasis r = gauss_reduce(b);
  EXPECT_NEAR(norm(r.u()), oracle::shortest_length(gauss_reduce(b).basis()),
              1e-12);
  EXPECT_TRUE(lattice_eq_mod_scale(b, r.basis()));
}

TEST(Rectangular, Detection) {
  EXPECT_TRUE(is_rectangular(Basis({1, 0}, {0, 1})));
  EXPECT_TRUE(is_rectangular(Basis({2, 0}, {4, 5})));
  EXPECT_FALSE(is_rectangular(Basis({2, 0}, {3, 5})));
  EXPECT_FALSE(is_rectangular(Basis({1, 0}, {0.5, std::sqrt(3.0) / 2})));
  EXPECT_TRUE(is_rectangular(apply(Basis({1, 0}, {0, 2.5}), {2, 1, 1, 1})));
}

TEST(Circumcenter, MatchesBisectorOracle) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Vec2 a(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Vec2 b(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Vec2 c(rng.uniform(-3, 3), rng.uniform(-3, 3));
    if (std::abs(cross(b - a, c - a)) < 0.1) continue;
    const Vec2 o = circumcenter({a, b, c});
    const Vec2 e = oracle::bisector_circumcenter(a, b, c);
    EXPECT_NEAR(o.x(), e.x(), 1e-9);
    EXPECT_NEAR(o.y(), e.y(), 1e-9);
  }
  EXPECT_THROW(circumcenter({{0, 0}, {1, 1}, {2, 2}}), Error);
}

TEST(Nonobtuse, RightAngleCounts) {
  EXPECT_TRUE(is_nonobtuse({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_FALSE(is_nonobtuse({{0, 0}, {1, 0}, {-0.1, 1}}));
}

TEST(GeneratorTriangles, CountDependsOnShape) {
  EXPECT_EQ(enumerate_generator_triangles(Basis({1, 0}, {0, 1})).size(), 12u);
  EXPECT_EQ(enumerate_generator_triangles(
                Basis({1, 0}, {0.5, std::sqrt(3.0) / 2}))
                .size(),
            6u);
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const Basis b = random_basis(rng);
    EXPECT_EQ(enumerate_generator_triangles(b).size(),
              is_rectangular(b) ? 12u : 6u);
  }
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(enumerate_generator_triangles(random_rectangular_basis(rng)).size(),
              12u);
  }
}

TEST(GeneratorTriangles, AreNonobtuseAndGenerate) {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const Basis b = random_basis(rng);
    for (const auto& g : enumerate_generator_triangles(b)) {
      EXPECT_TRUE(is_nonobtuse(g.triangle));
      const auto det = g.p_coef[0] * g.q_coef[1] - g.p_coef[1] * g.q_coef[0];
      EXPECT_EQ(std::abs(det), 1);
    }
  }
}

TEST(LatticeEq, ScaleAndUnimodular) {
  const Basis b({1.3, 0.2}, {0.4, 0.9});
  EXPECT_TRUE(lattice_eq_mod_scale(b, apply(b, {2, 1, 1, 1})));
  EXPECT_TRUE(lattice_eq_mod_scale(b, Basis(7.0 * b.u(), 7.0 * b.v())));
  EXPECT_TRUE(lattice_eq_mod_scale(b, Basis(-1.0 * b.u(), b.v())));
  EXPECT_FALSE(lattice_eq_mod_scale(b, Basis(b.u(), 2.0 * b.v())));
  EXPECT_FALSE(lattice_eq_mod_scale(b, Basis({1.3, 0.2}, {0.4, 0.91})));
}

TEST(RandomUnimodular, DeterminantAndBound) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const IntMatrix2 m = random_unimodular(s, 4);
    EXPECT_EQ(std::abs(m.det()), 1);
    EXPECT_LE(std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)}),
              4);
    EXPECT_EQ(m, random_unimodular(s, 4));
  }
  EXPECT_THROW(random_unimodular(1, 0), Error);
}

}  // namespace
}  // namespace lattice_exp3
