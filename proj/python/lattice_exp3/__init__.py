# Copyright 2026 The lattice-exp3 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Plane lattices, exp3 of the circle, the Milnor chart and the trefoil."""

from lattice_exp3._core import (
    DEDUP_TOL,
    LatticeError,
    certify,
    chart,
    eisenstein,
    is_rectangular,
    phi,
    phi_inverse,
    reduce,
    trefoil_curve,
    triangles,
    verify,
)

__all__ = [
    "DEDUP_TOL",
    "LatticeError",
    "certify",
    "chart",
    "eisenstein",
    "is_rectangular",
    "phi",
    "phi_inverse",
    "reduce",
    "trefoil_curve",
    "triangles",
    "verify",
]
