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

// Python bindings: lattice_exp3._core.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lattice_exp3/curves.hpp"
#include "lattice_exp3/knot_cert.hpp"
#include "lattice_exp3/milnor_chart.hpp"
#include "lattice_exp3/phi_map.hpp"
#include "lattice_exp3/verify.hpp"

namespace py = pybind11;
using namespace lattice_exp3;

namespace {

using Pair = std::array<double, 2>;
using BasisTuple = std::array<Pair, 2>;

Basis to_basis(const BasisTuple& b) {
  return Basis(Vec2(b[0][0], b[0][1]), Vec2(b[1][0], b[1][1]));
}

BasisTuple from_basis(const Basis& b) {
  return {Pair{b.u().x(), b.u().y()}, Pair{b.v().x(), b.v().y()}};
}

std::vector<double> angles(const CircleSubset& s) {
  std::vector<double> out;
  for (const ProjAngle& p : s) out.push_back(p.value());
  return out;
}

std::vector<double> py_phi(std::optional<BasisTuple> basis,
                           std::optional<double> degenerate, double tol) {
  if (basis.has_value() == degenerate.has_value()) {
    throw py::value_error("give exactly one of basis or degenerate");
  }
  if (degenerate) return angles(phi(Degenerate{ProjAngle(*degenerate)}, tol));
  return angles(phi(to_basis(*basis), tol));
}

py::dict py_phi_inverse(const std::vector<double>& a, double tol) {
  const CompactifiedLattice l = phi_inverse(make_subset(a, tol), tol);
  py::dict out;
  if (const auto* nd = std::get_if<NonDegenerate>(&l)) {
    out["basis"] = from_basis(nd->basis);
    out["degenerate"] = py::none();
  } else {
    out["basis"] = py::none();
    out["degenerate"] = std::get<Degenerate>(l).direction.value();
  }
  return out;
}

std::vector<BasisTuple> py_triangles(const BasisTuple& b) {
  std::vector<BasisTuple> out;
  for (const auto& g : enumerate_generator_triangles(to_basis(b))) {
    out.push_back({Pair{g.triangle.b.x(), g.triangle.b.y()},
                   Pair{g.triangle.c.x(), g.triangle.c.y()}});
  }
  return out;
}

std::vector<std::array<double, 3>> py_trefoil_curve(int samples, double delta,
                                                    const std::string& curve) {
  if (samples < 8) throw py::value_error("samples must be >= 8");
  if (curve != "pushoff" && curve != "torus") {
    throw py::value_error("curve must be 'pushoff' or 'torus'");
  }
  const CurveKind kind = curve == "torus" ? CurveKind::kTorus : CurveKind::kPushoff;
  if (kind == CurveKind::kPushoff && !(delta > 0 && delta < kPi / 6)) {
    throw py::value_error("delta must lie in (0, pi/6)");
  }
  std::vector<std::array<double, 3>> out;
  for (const Vec3& p : trefoil_polyline(kind, samples, delta).points()) {
    out.push_back({p.x, p.y, p.z});
  }
  return out;
}

py::dict py_certify(const std::vector<std::array<double, 3>>& points,
                    std::uint64_t seed) {
  std::vector<Vec3> pts;
  for (const auto& p : points) pts.push_back({p[0], p[1], p[2]});
  const Certificate c = certify(Polyline3(std::move(pts)), seed);
  py::dict jones;
  for (const auto& [e, k] : c.jones.terms()) jones[py::int_(e)] = k;
  py::dict out;
  out["verdict"] = std::string(verdict_name(c.verdict));
  out["jones"] = jones;
  out["crossings"] = c.crossings;
  out["writhe"] = c.writhe;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plane lattices, exp3 of the circle, the Milnor chart and the trefoil";

  static py::exception<Error> error(m, "LatticeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("DEDUP_TOL") = kDedupTol;

  m.def("phi", &py_phi, py::arg("basis") = py::none(),
        py::arg("degenerate") = py::none(), py::arg("tol") = kDedupTol,
        "Circle subset of a lattice basis ((ux, uy), (vx, vy)) or of a "
        "degenerate direction, as sorted angles in [0, pi).");
  m.def("phi_inverse", &py_phi_inverse, py::arg("angles"),
        py::arg("tol") = kDedupTol,
        "Lattice of 1 to 3 angles: {'basis': reduced basis or None, "
        "'degenerate': angle or None}.");
  m.def(
      "reduce",
      [](const BasisTuple& b) { return from_basis(gauss_reduce(to_basis(b)).basis()); },
      py::arg("basis"), "Gauss-Lagrange reduced basis.");
  m.def(
      "is_rectangular",
      [](const BasisTuple& b, double tol) { return is_rectangular(to_basis(b), tol); },
      py::arg("basis"), py::arg("tol") = kLatticeTol);
  m.def("triangles", &py_triangles, py::arg("basis"),
        "Generating triangles (0, p, q) as pairs (p, q).");
  m.def(
      "eisenstein",
      [](const BasisTuple& b) {
        const EisensteinPair g = eisenstein(tau_of(to_basis(b)));
        return std::make_tuple(g.g2, g.g3);
      },
      py::arg("basis"), "(g2, g3) of the lattice.");
  m.def(
      "chart",
      [](std::optional<BasisTuple> basis, std::optional<double> degenerate) {
        if (basis.has_value() == degenerate.has_value()) {
          throw py::value_error("give exactly one of basis or degenerate");
        }
        const S3Point p = degenerate ? chart(Degenerate{ProjAngle(*degenerate)})
                                     : chart(to_basis(*basis));
        return std::make_tuple(p.z, p.w);
      },
      py::arg("basis") = py::none(), py::arg("degenerate") = py::none(),
      "Point (z, w) of the unit sphere in C^2.");
  m.def("trefoil_curve", &py_trefoil_curve, py::arg("samples") = 720,
        py::arg("delta") = 0.1, py::arg("curve") = "pushoff",
        "Closed polyline in R^3 of the chart image of the boundary circle.");
  m.def("certify", &py_certify, py::arg("points"), py::arg("seed") = 0,
        "Jones polynomial and verdict of a closed polyline.");
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::int64_t n, double tol) {
        return report_json(run_suite(suite, seed, n, tol));
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("n") = 1000,
      py::arg("tol") = kDedupTol, "JSON report of a verification suite.");
}
