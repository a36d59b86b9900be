# gwistor
# Copyright (c) 2026 The gwistor developers
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
from collections import namedtuple

import sympy

from ..algebra.scalar import (K, as_scalar, normalize)
from ..algebra.forms import (AltForm, DIMENSION)
from ..core.exceptions import (DecompositionError, GradeError)
from ..frame.adapted_frame import (MU, DMU, ALPHA, ALPHA2, PHI, STAR_PHI)

LOG = logging.getLogger(__name__)

## @brief Decomposition of a 3-form as coeff1 phi + in7 + in27.
Lambda3Split = namedtuple('Lambda3Split', 'coeff1 in7 in27')

## @brief Orthogonal basis e_a _| *phi of the 7-dimensional summand; each has norm squared 4.
_SEVEN_BASIS = [STAR_PHI.interior(a) for a in range(DIMENSION)]

def lambda3_split(omega, strict=False):
    """! @brief Split a 3-form into its components of dimension 1, 7 and 27.

    @param omega A 3-form.
    @param strict If True, a nonzero 7-dimensional component is an error.
    @return Lambda3Split. The 27-dimensional part is characterized by in27 ^ phi = 0 and
        in27 ^ *phi = 0.
    @exception DecompositionError strict is set and the 7-dimensional part is nonzero; the
        exception carries that part as its residual.
    """
    if omega.grade not in (None, 3):
        raise GradeError("expected a 3-form, got grade %d" % omega.grade)
    coeff1 = normalize(omega.inner(PHI) / 7)
    rest = omega - coeff1 * PHI
    in7 = AltForm.zero()
    for basis in _SEVEN_BASIS:
        in7 = in7 + (rest.inner(basis) / basis.norm_squared()) * basis
    if strict and not in7.is_zero():
        raise DecompositionError("3-form has a component in the 7-dimensional summand", in7)
    return Lambda3Split(coeff1, in7, rest - in7)

def purity_defects(in27):
    """! @brief The forms in27 ^ phi and in27 ^ *phi, both zero for a pure component."""
    return in27.wedge(PHI), in27.wedge(STAR_PHI)

def tau3_dphi(k=K):
    """! @brief 27-dimensional part of *dphi, also the 27-dimensional part of T."""
    k = as_scalar(k)
    return ((15 * k - 12) * ALPHA + (6 * k - 2) * MU.wedge(DMU) - (k + 2) * ALPHA2) / 7

def dphi_coefficient(k=K):
    """! @brief dphi = 6/7 (k + 2) *phi + *tau3."""
    return normalize(sympy.Rational(6, 7) * (as_scalar(k) + 2))

def torsion_coefficient(k=K):
    """! @brief T = -(k + 2)/7 phi + tau3."""
    return normalize(-(as_scalar(k) + 2) / 7)

def dtorsion_coefficient(k=K):
    """! @brief dT = 6/7 k(k - 2) *phi + *tau3 of dT."""
    k = as_scalar(k)
    return normalize(6 * k * (k - 2) / 7)

def tau3_dtorsion(k=K):
    """! @brief 27-dimensional part of *dT."""
    k = as_scalar(k)
    return (2 * k / 7) * ((6 - 3 * k) * ALPHA + (1 + 3 * k) * MU.wedge(DMU) + (1 - 4 * k) * ALPHA2)

def hodge_split(omega, strict=False):
    """! @brief Split a 4-form through its Hodge dual, omega = c *phi + *(in7 + in27)."""
    return lambda3_split(omega.hodge(), strict=strict)
