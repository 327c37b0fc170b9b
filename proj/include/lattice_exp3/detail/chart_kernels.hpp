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

// Precision-generic kernels behind the Eisenstein chart. `R` is a real type
// and `C` the matching complex type; they are instantiated with double /
// std::complex<double> and with a multiprecision pair for degeneration
// probes whose deviations lie far below double resolution.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace lattice_exp3::detail {

template <class R>
R pi_value() {
  using std::acos;
  return acos(R(-1));
}

inline std::int64_t divisor_power_sum(std::int64_t n, int power) {
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const auto add = [&](std::int64_t k) {
      std::int64_t p = 1;
      for (int i = 0; i < power; ++i) p *= k;
      total += p;
    };
    add(d);
    if (d != n / d) add(n / d);
  }
  return total;
}

/// g2, g3 of the lattice Z + tau Z from the q-expansions of E4 and E6.
/// Terms are summed until both scaled terms drop below `cutoff` relative to
/// the constant term.
template <class R, class C>
std::pair<C, C> eisenstein_unit_lattice(const C& tau, const R& cutoff) {
  using std::abs;
  using std::exp;
  const R pi = pi_value<R>();
  const C q = exp(C(R(0), R(2) * pi) * tau);
  C s3(R(0), R(0));
  C s5(R(0), R(0));
  C qn = q;
  for (std::int64_t n = 1; n < 100000; ++n) {
    const C t3 = qn * R(240 * divisor_power_sum(n, 3));
    const C t5 = qn * R(504 * divisor_power_sum(n, 5));
    if (abs(t3) < cutoff && abs(t5) < cutoff) break;
    s3 += t3;
    s5 += t5;
    qn *= q;
  }
  const R pi2 = pi * pi;
  const R c4 = R(4) * pi2 * pi2 / R(3);
  const R c6 = R(8) * pi2 * pi2 * pi2 / R(27);
  return {(C(R(1), R(0)) + s3) * c4, (C(R(1), R(0)) - s5) * c6};
}

/// (2 pi)^12 q prod (1 - q^n)^24 for Z + tau Z.
template <class R, class C>
C discriminant_product_unit_lattice(const C& tau, const R& cutoff) {
  using std::abs;
  using std::exp;
  const R pi = pi_value<R>();
  const C q = exp(C(R(0), R(2) * pi) * tau);
  C prod(R(1), R(0));
  C qn = q;
  for (std::int64_t n = 1; n < 100000 && abs(qn) >= cutoff; ++n) {
    const C f = C(R(1), R(0)) - qn;
    C f24 = f * f;      // ^2
    f24 = f24 * f24;    // ^4
    f24 = f24 * f24 * f24;  // ^12
    f24 = f24 * f24;    // ^24
    prod *= f24;
    qn *= q;
  }
  R two_pi_12 = R(1);
  for (int i = 0; i < 12; ++i) two_pi_12 *= R(2) * pi;
  return q * prod * two_pi_12;
}

/// The s solving |g2|^2 e^{-8s} + |g3|^2 e^{-12s} = 1, from log|g2| and
/// log|g3| (a missing term is flagged off). Bisection with a 200-step cap
/// followed by `newton_steps` Newton polishes.
template <class R>
R solve_log_scale(bool has_g2, const R& log_g2, bool has_g3, const R& log_g3,
                  int newton_steps) {
  using std::abs;
  using std::exp;
  using std::log;
  const auto terms = [&](const R& s, R& value, R& slope) {
    value = R(-1);
    slope = R(0);
    if (has_g2) {
      const R e = exp(R(2) * log_g2 - R(8) * s);
      value += e;
      slope -= R(8) * e;
    }
    if (has_g3) {
      const R e = exp(R(2) * log_g3 - R(12) * s);
      value += e;
      slope -= R(12) * e;
    }
  };

  // At lo one term alone equals 1; at hi both are at most 1/2.
  const R log2 = log(R(2));
  bool first = true;
  R lo(0), hi(0);
  const auto widen = [&](const R& l, const R& h) {
    if (first || l > lo) lo = l;
    if (first || h > hi) hi = h;
    first = false;
  };
  if (has_g2) widen(log_g2 / R(4), (R(2) * log_g2 + log2) / R(8));
  if (has_g3) widen(log_g3 / R(6), (R(2) * log_g3 + log2) / R(12));

  R value, slope;
  for (int i = 0; i < 200; ++i) {
    const R mid = (lo + hi) / R(2);
    if (mid == lo || mid == hi) break;
    terms(mid, value, slope);
    if (value > R(0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  R s = (lo + hi) / R(2);
  for (int i = 0; i < newton_steps; ++i) {
    terms(s, value, slope);
    if (slope == R(0)) break;
    s -= value / slope;
  }
  return s;
}

/// Radii (a, b) of the torus carrying {z^3 = 27 w^2} on the unit 3-sphere:
/// a^3 = 27 b^2 and a^2 + b^2 = 1, i.e. a^3 + 27 a^2 - 27 = 0 on (0, 1).
template <class R>
std::pair<R, R> torus_radii(int newton_steps) {
  using std::sqrt;
  const auto g = [](const R& a) { return a * a * a + R(27) * a * a - R(27); };
  R lo(0), hi(1);
  for (int i = 0; i < 200; ++i) {
    const R mid = (lo + hi) / R(2);
    if (mid == lo || mid == hi) break;
    if (g(mid) < R(0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  R a = (lo + hi) / R(2);
  for (int i = 0; i < newton_steps; ++i) {
    const R slope = R(3) * a * a + R(54) * a;
    a -= g(a) / slope;
  }
  return {a, sqrt(R(1) - a * a)};
}

}  // namespace lattice_exp3::detail
