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

// Seeded generators for lattices and subsets used by the verification
// suites and the tests.

#pragma once

#include <cstddef>

#include "lattice_exp3/exp_circle.hpp"
#include "lattice_exp3/lattice_core.hpp"
#include "lattice_exp3/random.hpp"

namespace lattice_exp3 {

/// Components uniform in [-1, 1], rejecting short or nearly parallel pairs.
Basis random_basis(Rng& rng);

/// Orthogonal pair with random orientation and side lengths, disguised by a
/// random unimodular change of basis.
Basis random_rectangular_basis(Rng& rng);

/// Reduced basis whose angle is pi/2 - eta.
Basis near_rectangular_basis(Rng& rng, double eta);

/// `size` distinct random lines, pairwise at least `min_separation` apart.
CircleSubset random_subset(Rng& rng, std::size_t size, double min_separation);

}  // namespace lattice_exp3
