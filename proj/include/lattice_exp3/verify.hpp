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

// Seeded property suites run by `lattice-exp3 verify`. Reports carry no
// timing data, so a fixed seed gives byte-identical output.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lattice_exp3/error.hpp"

namespace lattice_exp3 {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Worst observed error (or failure count for counting checks).
  double max_error = 0.0;
  double threshold = 0.0;
  std::int64_t samples = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
};

/// well-definedness, invariance, roundtrip, cardinality, continuity,
/// eisenstein, knot, all
std::span<const std::string_view> suite_names();

bool is_suite_name(std::string_view name);

/// `n` scales the sampled checks. Throws Error(kInvalidArgument) for an
/// unknown suite.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed,
                      std::int64_t n, double dedup_tol);

std::string report_json(const SuiteReport& report);

}  // namespace lattice_exp3
