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
from itertools import combinations

import sympy

from ..algebra.scalar import (ZERO, normalize)
from ..algebra.forms import AltForm
from ..contact.ricci import RicciModel
from ..core.exceptions import (PreconditionError, RangeError)
from ..frame.adapted_frame import (frame_vector, PHI)
from ..geometry.curvature_operator import (CurvatureOperator, levi_civita_from_characteristic)
from .lie import (LieElement, bracket, so_basis, matrix_rank, killing_rank)

LOG = logging.getLogger(__name__)

## @brief Smallest supported matrix size.
MIN_L = 3

## @brief Matrix size whose reductive complement matches the adapted frame of the sphere bundle.
FRAME_L = 5

## @brief Result of the holonomy closure.
HolonomyResult = namedtuple('HolonomyResult', 'dimension basis killing_rank')

class StiefelModel(object):
    """! @brief The Stiefel manifold SO(l)/SO(l-2) with its naturally reductive structure.

    so(l) = h + m with h = so(n), n = l - 2, acting on the first n coordinates. The
    complement m has the orthonormal basis e_0 = E_{l-1,l}, e_i = E_{i,l} and e_{i+n} = E_{i,l-1}
    for i = 1..n.
    """

    def __init__(self, l):
        if l < MIN_L:
            raise RangeError("the Stiefel model needs l >= %d, got %d" % (MIN_L, l))
        self._l = l
        self._n = l - 2
        n = self._n
        m_index = l - 1
        self._m_basis = ([LieElement.unit(l, m_index, l)]
            + [LieElement.unit(l, i, l) for i in range(1, n + 1)]
            + [LieElement.unit(l, i, m_index) for i in range(1, n + 1)])
        self._h_basis = [LieElement.unit(l, i, j) for i, j in combinations(range(1, n + 1), 2)]
        self._brackets = {}
        LOG.debug("Stiefel model l=%d: dim h=%d, dim m=%d", l, len(self._h_basis), self.dim_m)

    @property
    def l(self):
        return self._l

    @property
    def n(self):
        return self._n

    @property
    def dim_m(self):
        return 2 * self._n + 1

    @property
    def m_basis(self):
        return list(self._m_basis)

    @property
    def h_basis(self):
        return list(self._h_basis)

    def project_h(self, element):
        n = self._n
        return LieElement.from_coordinates(self._l, {(i, j): c
            for (i, j), c in element.coordinates().items() if j <= n})

    def project_m(self, element):
        return element - self.project_h(element)

    def m_coordinates(self, element):
        """! @brief Components of an element of so(l) along the m basis."""
        return [normalize(element.inner(e)) for e in self._m_basis]

    def _bracket(self, a, b):
        key = (a, b)
        if key not in self._brackets:
            self._brackets[key] = bracket(self._m_basis[a], self._m_basis[b])
        return self._brackets[key]

    def reductive_defects(self):
        """! @brief Pairs breaking [h, m] in m or [h, h] in h."""
        defects = []
        for s, h in enumerate(self._h_basis):
            for a, x in enumerate(self._m_basis):
                if not self.project_h(bracket(h, x)).is_zero():
                    defects.append(('hm', s, a))
            for t, other in enumerate(self._h_basis):
                if not self.project_m(bracket(h, other)).is_zero():
                    defects.append(('hh', s, t))
        return defects

    def torsion(self, a, b, c):
        """! @brief T(X, Y, Z) = -<[X, Y]_m, Z> on the m basis."""
        return normalize(-self.project_m(self._bracket(a, b)).inner(self._m_basis[c]))

    def torsion_form(self):
        return AltForm({(a, b, c): self.torsion(a, b, c)
            for a, b, c in combinations(range(self.dim_m), 3)}, dim=self.dim_m)

    def skewness_defects(self):
        """! @brief Triples where T fails to change sign under a transposition."""
        defects = []
        for a in range(self.dim_m):
            for b in range(self.dim_m):
                for c in range(self.dim_m):
                    value = self.torsion(a, b, c)
                    if normalize(value + self.torsion(b, a, c)) != 0 \
                            or normalize(value + self.torsion(a, c, b)) != 0:
                        defects.append((a, b, c))
        return defects

    def mu_dmu(self):
        """! @brief mu ^ dmu with dmu = sum_i e^{i+n} ^ e^i on m."""
        n = self._n
        dmu = AltForm({(i + n, i): 1 for i in range(1, n + 1)}, dim=self.dim_m)
        return AltForm.monomial(0, dim=self.dim_m).wedge(dmu)

    def bracket_identity_defect(self):
        """! @brief mu ^ dmu (X, Y, Z) + <[X, Y], Z> on the m basis, as a 3-form."""
        full = AltForm({(a, b, c): self._bracket(a, b).inner(self._m_basis[c])
            for a, b, c in combinations(range(self.dim_m), 3)}, dim=self.dim_m)
        return self.mu_dmu() + full

    def holonomy_algebra(self):
        """! @brief Lie algebra generated by the h-parts [X, Y]_h, X, Y in m.

        Closure under brackets is computed with exact rank tracking.
        """
        basis = []
        rows = []

        def add(element):
            if element.is_zero():
                return False
            row = list(element.coordinates().values())
            if matrix_rank(rows + [row]) > len(rows):
                rows.append(row)
                basis.append(element)
                return True
            return False

        pending = []
        for a, b in combinations(range(self.dim_m), 2):
            generator = self.project_h(self._bracket(a, b))
            if add(generator):
                pending.append(generator)
        while pending:
            element = pending.pop()
            for other in list(basis):
                product = bracket(element, other)
                if add(product):
                    pending.append(product)
        LOG.info("Holonomy algebra of SO(%d)/SO(%d) has dimension %d", self._l, self._n, len(basis))
        return HolonomyResult(len(basis), basis, killing_rank(basis))

    @staticmethod
    def expected_holonomy_dimension(l):
        """! @brief dim so(l - 2)."""
        n = l - 2
        return n * (n - 1) // 2

    def reference_killing_rank(self):
        """! @brief Killing form rank of so(n) in its standard basis."""
        return killing_rank([element for _, element in so_basis(self._n)])

    def curvature(self, a, b, c, d):
        """! @brief R^c(X, Y, Z, W) = -<[[X, Y]_h, Z], W> of the canonical connection."""
        h_part = self.project_h(self._bracket(a, b))
        if h_part.is_zero():
            return ZERO
        return normalize(-bracket(h_part, self._m_basis[c]).inner(self._m_basis[d]))

    def characteristic_curvature(self):
        return CurvatureOperator.from_riemann(self.curvature, self.dim_m)

    def curvature_square_forms(self):
        """! @brief The 2-forms S_s(X, Y) = <[X, Y], E_s> for the basis E_s of h."""
        return [AltForm({(a, b): self._bracket(a, b).inner(h)
            for a, b in combinations(range(self.dim_m), 2)}, dim=self.dim_m)
            for h in self._h_basis]

    def curvature_squares(self):
        """! @brief R^c + sum_s S_s (x) S_s, zero when R^c is minus a sum of squares.

        @return Tuple of (defect operator, Gram matrix <S_s, S_t> of the squares).
        """
        squares = self.curvature_square_forms()
        defect = self.characteristic_curvature() + CurvatureOperator.from_products(
            [(1, s, s) for s in squares], self.dim_m)
        gram = sympy.ImmutableMatrix(len(squares), len(squares),
            lambda p, q: squares[p].inner(squares[q]))
        return defect, gram

    def curvature_image_dimension(self):
        """! @brief Dimension of the span of the endomorphisms R^c(X, Y)."""
        operator = self.characteristic_curvature()
        rows = [list(operator.endomorphism(a, b).matrix)
            for a, b in combinations(range(self.dim_m), 2)]
        return matrix_rank(rows)

    def levi_civita_curvature(self):
        return levi_civita_from_characteristic(self.characteristic_curvature(), self.torsion_form())

    def ricci(self):
        return self.levi_civita_curvature().ricci()

    def expected_ricci(self):
        """! @brief Ricci matrix of the unit sphere bundle over the round (n+1)-sphere."""
        model = RicciModel(self._n + 1, 1)
        n = self._n
        return sympy.ImmutableMatrix(sympy.diag(*([model.c_h + model.c_mu] + [model.c_h] * n
            + [model.c_v] * n)))

    def _require_frame(self):
        if self._l != FRAME_L:
            raise PreconditionError("the m basis matches the adapted frame only for l = %d, got %d"
                % (FRAME_L, self._l))

    def frame_correspondence(self, form):
        """! @brief Transport a form on m to the adapted coframe e^0..e^6.

        The basis e_0, e_i, e_{i+3} of m is mapped to the frame vectors with the same indices.

        @exception PreconditionError l is not 5.
        """
        self._require_frame()
        return AltForm(form.terms, dim=7)

    def holonomy_in_g2_defects(self):
        """! @brief Curvature endomorphisms R^c(X, Y) failing to preserve phi or to fix e_0."""
        self._require_frame()
        operator = self.characteristic_curvature()
        defects = []
        for a, b in combinations(range(self.dim_m), 2):
            endo = operator.endomorphism(a, b)
            if not endo.apply(frame_vector(0)).is_zero():
                defects.append(('e0', a, b))
            if not PHI.endo_action(endo).is_zero():
                defects.append(('phi', a, b))
        return defects
