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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "lattice_exp3/detail/chart_kernels.hpp"
#include "lattice_exp3/milnor_chart.hpp"

namespace lattice_exp3 {

namespace {

namespace bmp = boost::multiprecision;
using Real = bmp::number<bmp::cpp_bin_float<200>, bmp::et_off>;
using Complex =
    bmp::number<bmp::complex_adaptor<bmp::cpp_bin_float<200>>, bmp::et_off>;

}  // namespace

DegenerationProbe probe_degeneration(const Basis& basis, int torus_samples) {
  if (torus_samples < 1) {
    throw Error(ErrorCode::kOutOfRange, "torus_samples must be positive");
  }
  // Reduction only swaps, negates and subtracts integer multiples, so the
  // reduced vectors are the exact lattice the probe works with.
  const ReducedBasis r = gauss_reduce(basis);
  const Complex u(Real(r.u().x()), Real(r.u().y()));
  const Complex v(Real(r.v().x()), Real(r.v().y()));
  Complex tau = v / u;
  if (imag(tau) < 0) tau = -tau;

  const Real cutoff("1e-195");
  const auto [g2_unit, g3_unit] =
      detail::eisenstein_unit_lattice<Real, Complex>(tau, cutoff);
  const Complex u2 = u * u;
  const Complex u4 = u2 * u2;
  const Complex g2 = g2_unit / u4;
  const Complex g3 = g3_unit / (u4 * u2);
  const Complex disc =
      detail::discriminant_product_unit_lattice<Real, Complex>(tau, cutoff) /
      (u4 * u4 * u4);

  const bool has_g2 = abs(g2) != 0;
  const bool has_g3 = abs(g3) != 0;
  const Real s = detail::solve_log_scale<Real>(
      has_g2, has_g2 ? Real(log(abs(g2))) : Real(0), has_g3,
      has_g3 ? Real(log(abs(g3))) : Real(0), 8);
  const Complex z = g2 * Real(exp(Real(-4) * s));
  const Complex w = g3 * Real(exp(Real(-6) * s));

  DegenerationProbe out;
  out.normalized_discriminant =
      static_cast<double>(Real(abs(disc) * exp(Real(-12) * s)));

  // Coarse pass in double to shortlist samples, exact pass on the shortlist.
  const S3Point coarse{
      {static_cast<double>(real(z)), static_cast<double>(imag(z))},
      {static_cast<double>(real(w)), static_cast<double>(imag(w))}};
  std::vector<double> coarse_dist(torus_samples);
  double best_coarse = std::numeric_limits<double>::infinity();
  for (int k = 0; k < torus_samples; ++k) {
    coarse_dist[k] = distance(
        coarse, torus_knot_point(2.0 * kPi * k / torus_samples));
    best_coarse = std::min(best_coarse, coarse_dist[k]);
  }

  const auto [a, b] = detail::torus_radii<Real>(8);
  const Real pi = detail::pi_value<Real>();
  Real best(-1);
  for (int k = 0; k < torus_samples; ++k) {
    if (coarse_dist[k] > best_coarse + 1e-9) continue;
    const Real t = Real(2) * pi * Real(k) / Real(torus_samples);
    const Real dz_re = real(z) - a * cos(Real(2) * t);
    const Real dz_im = imag(z) - a * sin(Real(2) * t);
    const Real dw_re = real(w) - b * cos(Real(3) * t);
    const Real dw_im = imag(w) - b * sin(Real(3) * t);
    const Real d =
        sqrt(dz_re * dz_re + dz_im * dz_im + dw_re * dw_re + dw_im * dw_im);
    if (best < 0 || d < best) {
      best = d;
      out.nearest_sample = k;
    }
  }
  out.torus_distance = static_cast<double>(best);
  return out;
}

}  // namespace lattice_exp3
