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
from collections import OrderedDict

from ..algebra.scalar import (K, HALF, as_scalar, normalize)
from ..algebra.forms import (AltForm, DIMENSION)
from ..algebra.vectors import AmbientVector
from ..core.exceptions import CurvatureDependenceError
from ..frame.adapted_frame import (frame_vector, theta, theta_t, mu_of, MU, DMU, VOL, ALPHA,
    ALPHA1, ALPHA2, ALPHA3, PHI)
from .curvature import CurvatureSpec

LOG = logging.getLogger(__name__)

class LeviCivitaConnection(object):
    """! @brief Levi-Civita connection of the sphere bundle metric, in the adapted frame.

    The connection is computed from the pullback connection on the horizontal and vertical
    frames, corrected by the curvature vector and the symmetric tensor A of the base curvature.
    The derivatives of all frame vectors and covectors are tabulated on construction, so an
    instance can be shared between threads.
    """

    def __init__(self, spec=None):
        self._spec = spec if spec is not None else CurvatureSpec.constant(K)
        self._vectors = [[self._compute_vector(a, b) for b in range(DIMENSION)]
            for a in range(DIMENSION)]
        self._covectors = [[self._compute_covector(a, b) for b in range(DIMENSION)]
            for a in range(DIMENSION)]
        LOG.debug("Tabulated Levi-Civita connection for %r", self._spec)

    @property
    def spec(self):
        return self._spec

    @staticmethod
    def star_derivative(x, b):
        """! @brief Pullback connection: nabla*_X e_0 = theta^t X, nabla*_X e_i = -X^{i+3} e_0."""
        if b == 0:
            return theta_t(x)
        elif b in (1, 2, 3):
            return AmbientVector({0: -x[b + 3]})
        return AmbientVector()

    def _compute_vector(self, a, b):
        x = frame_vector(a)
        y = frame_vector(b)
        return (self.star_derivative(x, b)
            - HALF * self._spec.curvature_vector(x, y)
            + self._spec.a_tensor(x, y))

    def _compute_covector(self, a, b):
        return AltForm({(c,): -self._vectors[a][c][b] for c in range(DIMENSION)})

    def frame_derivative(self, a, b):
        """! @brief nabla_{e_a} e_b."""
        return self._vectors[a][b]

    def covector_derivative(self, a, b):
        """! @brief nabla_{e_a} e^b = -sum_c <nabla_{e_a} e_c, e_b> e^c."""
        return self._covectors[a][b]

    def nabla_vector(self, x, y):
        """! @brief nabla_X Y for vectors with constant frame components."""
        result = AmbientVector()
        for a in range(DIMENSION):
            if x[a] == 0:
                continue
            for b in range(DIMENSION):
                if y[b] != 0:
                    result = result + (x[a] * y[b]) * self._vectors[a][b]
        return result

    def nabla(self, direction, form):
        """! @brief Covariant derivative of a form along a frame index or a vector.

        @exception CurvatureDependenceError The form has coefficients in the curvature symbols,
            which are functions on the base.
        """
        if form.depends_on_curvature():
            raise CurvatureDependenceError("cannot differentiate a form with curvature-dependent "
                "coefficients: %s" % form)
        if isinstance(direction, int):
            return form.apply_derivation(self._covectors[direction].__getitem__)
        result = AltForm.zero(form.dim)
        for a in range(DIMENSION):
            if direction[a] != 0:
                result = result + direction[a] * form.apply_derivation(self._covectors[a].__getitem__)
        return result

    def ext_d(self, form):
        """! @brief Exterior derivative d = sum_a e^a ^ nabla_{e_a}."""
        result = AltForm.zero(form.dim)
        for a in range(DIMENSION):
            result = result + AltForm.monomial(a).wedge(self.nabla(a, form))
        return result

    def codiff(self, form):
        """! @brief Codifferential delta = -sum_a e_a _| nabla_{e_a}."""
        result = AltForm.zero(form.dim)
        for a in range(DIMENSION):
            result = result - self.nabla(a, form).interior(a)
        return result

    def metric_defects(self):
        """! @brief Triples (a, b, c) where <nabla_a e_b, e_c> + <e_b, nabla_a e_c> is nonzero."""
        defects = []
        for a in range(DIMENSION):
            for b in range(DIMENSION):
                for c in range(b, DIMENSION):
                    value = normalize(self._vectors[a][b][c] + self._vectors[a][c][b])
                    if value != 0:
                        defects.append((a, b, c, value))
        return defects

    def tangency_defects(self):
        return [(a, b) for a in range(DIMENSION) for b in range(DIMENSION)
            if not self._vectors[a][b].is_tangent]

    def structure_equation(self, c):
        """! @brief Expected exterior derivative of the coframe covector e^c.

        de^0 = dmu, de^i = e^0 ^ e^{i+3} and de^{l+3} = sum_{a<b} R_ab0l e^ab.
        """
        if c == 0:
            return DMU
        elif c in (1, 2, 3):
            return AltForm.monomial(0, c + 3)
        return AltForm({(a, b): self._spec.riemann(a, b, 0, c - 3)
            for a in range(4) for b in range(4) if a < b})

    def structure_defects(self):
        defects = []
        for c in range(DIMENSION):
            defect = self.ext_d(AltForm.monomial(c)) - self.structure_equation(c)
            if not defect.is_zero():
                defects.append((c, defect))
        return defects

## @brief Order of the closed-form derivatives of the frame generators.
GENERATORS = ('theta_t_u', 'vol', 'alpha', 'mu', 'dmu', 'alpha1', 'alpha2', 'alpha3')

def _flat_theta_t(x):
    return AltForm.flat(theta_t(x))

def _flat_theta(x):
    return AltForm.flat(theta(x))

def closed_form_derivatives(x, k=K):
    """! @brief Closed forms of nabla_X of the frame generators on a constant curvature base.

    @param x Tangent vector.
    @param k Sectional curvature.
    @return OrderedDict keyed by the GENERATORS names. The entry 'theta_t_u' is the vector
        nabla_X (theta^t U); all others are forms.
    """
    k = as_scalar(k)
    a = (2 - k) / 2
    b = k / 2
    m = mu_of(x)
    xh = AltForm.flat(x.horizontal)
    xv = AltForm.flat(x.vertical)
    theta_x = theta(x)
    result = OrderedDict()
    result['theta_t_u'] = a * theta_t(x) - b * (theta_x - m * AmbientVector({7: 1}))
    result['vol'] = b * (m * MU.wedge(ALPHA2) - _flat_theta(x).wedge(ALPHA3)
        - _flat_theta_t(x).wedge(ALPHA3))
    result['alpha'] = b * (MU.wedge(ALPHA.interior(theta_x)) - m * ALPHA1)
    result['mu'] = a * _flat_theta_t(x) - b * _flat_theta(x)
    result['dmu'] = MU.wedge(b * xh + a * xv)
    result['alpha1'] = (k * m * (HALF * 3 * ALPHA - ALPHA2)
        + MU.wedge(-a * ALPHA.interior(x) + b * ALPHA1.interior(theta_x)))
    result['alpha2'] = (k * m * (ALPHA1 - HALF * 3 * ALPHA3)
        + MU.wedge(-a * ALPHA1.interior(x.vertical) + b * ALPHA3.interior(x)))
    result['alpha3'] = a * VOL.interior(theta_t(x)) + b * m * ALPHA2
    return result

def closed_form_phi_derivative(x, k=K):
    """! @brief Closed form of nabla_X phi on a constant curvature base."""
    k = as_scalar(k)
    a = (2 - k) / 2
    b = k / 2
    m = mu_of(x)
    one_form = -a * _flat_theta_t(x) + b * _flat_theta(x)
    return (b * MU.wedge(ALPHA.interior(theta(x))) - 3 * b * m * ALPHA1
        + one_form.wedge(DMU) + 3 * b * m * ALPHA3 - b * MU.wedge(ALPHA3.interior(x))
        + a * MU.wedge(ALPHA1.interior(x.vertical)))

def generator_derivative_defects(connection):
    """! @brief Compare the closed forms with the tabulated connection on every frame direction.

    @return List of (direction, generator, defect) for each disagreement.
    """
    k = connection.spec.k
    generators = OrderedDict([('vol', VOL), ('alpha', ALPHA), ('mu', MU), ('dmu', DMU),
        ('alpha1', ALPHA1), ('alpha2', ALPHA2), ('alpha3', ALPHA3)])
    defects = []
    for direction in range(DIMENSION):
        x = frame_vector(direction)
        expected = closed_form_derivatives(x, k)
        # theta^t U = e_0 along the section.
        vector_defect = connection.frame_derivative(direction, 0) - expected['theta_t_u']
        if not vector_defect.is_zero():
            defects.append((direction, 'theta_t_u', vector_defect))
        for name, form in generators.items():
            defect = connection.nabla(direction, form) - expected[name]
            if not defect.is_zero():
                defects.append((direction, name, defect))
        defect = connection.nabla(direction, PHI) - closed_form_phi_derivative(x, k)
        if not defect.is_zero():
            defects.append((direction, 'phi', defect))
    return defects
