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

import sympy

from ..algebra.scalar import (K, HALF, as_scalar, normalize)
from ..algebra.forms import (AltForm, DIMENSION)
from ..algebra.vectors import SkewEndo
from ..core.exceptions import CocalibrationError
from ..frame.adapted_frame import (frame_vector, MU, DMU, ALPHA, ALPHA1, ALPHA2, PHI, STAR_PHI)

LOG = logging.getLogger(__name__)

def characteristic_torsion(connection):
    """! @brief Torsion of the characteristic connection, T = *dphi - 1/6 <dphi, *phi> phi.

    @exception CocalibrationError The base is not Einstein, so d*phi does not vanish and the
        structure admits no characteristic connection.
    """
    spec = connection.spec
    if not spec.is_einstein:
        rho = spec.rho()
        if not rho.is_zero():
            raise CocalibrationError("characteristic torsion requires an Einstein base; "
                "d*phi = -rho ^ vol with rho = %s" % rho)
    dphi = connection.ext_d(PHI)
    return dphi.hodge() - (dphi.inner(STAR_PHI) / 6) * PHI

def constant_curvature_torsion(k=K):
    """! @brief T = 2(k-1) alpha + k mu ^ dmu."""
    k = as_scalar(k)
    return 2 * (k - 1) * ALPHA + k * MU.wedge(DMU)

def einstein_torsion(spec):
    """! @brief T = *R(alpha) + (2 lambda - 6)/3 alpha + lambda/3 (mu ^ dmu + alpha2)."""
    lam = spec.einstein_constant
    return (spec.riem_alpha().hodge() + ((2 * lam - 6) / 3) * ALPHA
        + (lam / 3) * (MU.wedge(DMU) + ALPHA2))

def torsion_endo(torsion, direction):
    """! @brief The skew endomorphism T_X with <T_X e_b, e_c> = T(X, e_b, e_c)."""
    contracted = torsion.interior(direction)
    return SkewEndo(sympy.Matrix(DIMENSION, DIMENSION,
        lambda c, b: contracted.coefficient(b, c)))

def derivative_torsion(torsion, connection):
    """! @brief dT computed with the Levi-Civita connection."""
    return connection.ext_d(torsion)

def strong_torsion_form(k=K):
    """! @brief Closed form dT = k (dmu)^2 - 2k(k-1) mu ^ alpha1."""
    k = as_scalar(k)
    return k * DMU.wedge(DMU) - 2 * k * (k - 1) * MU.wedge(ALPHA1)

def parallel_torsion_rhs(x, k=K):
    """! @brief Closed form of nabla^c_X T = k(k-1) X^v _| (mu ^ alpha1 - 1/2 (dmu)^2)."""
    k = as_scalar(k)
    inner = MU.wedge(ALPHA1) - HALF * DMU.wedge(DMU)
    return k * (k - 1) * inner.interior(x.vertical)

class CharacteristicConnection(object):
    """! @brief The metric connection nabla^c = nabla^g + 1/2 T with totally skew torsion T."""

    def __init__(self, levi_civita, torsion=None):
        self._lc = levi_civita
        self._torsion = torsion if torsion is not None else characteristic_torsion(levi_civita)
        self._endos = [torsion_endo(self._torsion, a) for a in range(DIMENSION)]

    @property
    def torsion(self):
        return self._torsion

    @property
    def levi_civita(self):
        return self._lc

    def endo(self, direction):
        return self._endos[direction]

    def frame_derivative(self, a, b):
        """! @brief nabla^c_{e_a} e_b = nabla^g_{e_a} e_b + 1/2 T_{e_a} e_b."""
        return self._lc.frame_derivative(a, b) + HALF * self._endos[a].apply(frame_vector(b))

    def nabla(self, direction, form):
        if isinstance(direction, int):
            return self._lc.nabla(direction, form) + HALF * form.endo_action(self._endos[direction])
        result = AltForm.zero(form.dim)
        for a in range(DIMENSION):
            if direction[a] != 0:
                result = result + direction[a] * self.nabla(a, form)
        return result

    def skew_defects(self):
        return [a for a in range(DIMENSION) if not self._endos[a].is_skew]

    def metric_defects(self):
        defects = []
        for a in range(DIMENSION):
            for b in range(DIMENSION):
                for c in range(b, DIMENSION):
                    value = normalize(self.frame_derivative(a, b)[c] + self.frame_derivative(a, c)[b])
                    if value != 0:
                        defects.append((a, b, c, value))
        return defects

    def proof_formula(self, direction):
        """! @brief nabla^g_X T - 1/2 sum_j beta_j ^ (e_j _| T), beta_j = sum_a T(X, e_a, e_j) e^a.

        Equals nabla^c_X T, written in the form used to derive its closed expression.
        """
        torsion = self._torsion
        contracted = torsion.interior(direction)
        result = self._lc.nabla(direction, torsion)
        for j in range(DIMENSION):
            beta = AltForm({(a,): contracted.coefficient(a, j) for a in range(DIMENSION)})
            result = result - HALF * beta.wedge(torsion.interior(j))
        return result

    def parallel_torsion_defects(self, k=K):
        """! @brief Directions where nabla^c T disagrees with its closed form."""
        defects = []
        for a in range(DIMENSION):
            value = self.nabla(a, self._torsion)
            defect = value - parallel_torsion_rhs(frame_vector(a), k)
            if not defect.is_zero():
                defects.append((a, defect))
        return defects

    def parallel_torsion_witness(self):
        """! @brief The first direction along which T is not parallel, or None."""
        for a in range(DIMENSION):
            value = self.nabla(a, self._torsion)
            if not value.is_zero():
                return a, value
        return None
