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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace lattice_exp3 {

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  /// {{exponent, coefficient}, ...}
  LaurentPoly(std::initializer_list<std::pair<const int, std::int64_t>> terms);

  static LaurentPoly monomial(std::int64_t coef, int exponent);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(int exponent, std::int64_t coef);

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(std::int64_t s, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// x -> x^-1
  LaurentPoly mirrored() const;

  /// Human-readable form such as "-t^-4 + t^-3 + t^-1".
  std::string to_string(const std::string& var = "t") const;

 private:
  Terms terms_;
};

}  // namespace lattice_exp3
