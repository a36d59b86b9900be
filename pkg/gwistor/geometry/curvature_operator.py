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
from itertools import combinations

import sympy

from ..algebra.scalar import (ZERO, HALF, normalize)
from ..algebra.forms import (AltForm, DIMENSION, sort_with_sign)
from ..algebra.vectors import SkewEndo
from ..core.exceptions import DimensionMismatchError
from ..frame.adapted_frame import (ALPHA, VERTICAL)

LOG = logging.getLogger(__name__)

class CurvatureOperator(object):
    """! @brief Curvature tensor viewed as a symmetric operator on 2-vectors.

    The matrix is indexed by the increasing index pairs (a, b) of the frame, and entry (I, J)
    holds R(e_I0, e_I1, e_J0, e_J1), where R(X, Y, Z, W) = <R(X, Y) Z, W>.
    """

    def __init__(self, matrix, dim=DIMENSION):
        self._dim = dim
        self._pairs = list(combinations(range(dim), 2))
        self._index = {pair: n for n, pair in enumerate(self._pairs)}
        self._matrix = sympy.ImmutableMatrix(matrix).applyfunc(normalize)
        if self._matrix.shape != (len(self._pairs), len(self._pairs)):
            raise DimensionMismatchError("curvature operator of dimension %d needs a %dx%d matrix"
                % (dim, len(self._pairs), len(self._pairs)))

    @classmethod
    def from_riemann(cls, function, dim=DIMENSION):
        """! @brief Tabulate a 4-tensor given as a callable of four frame indices."""
        pairs = list(combinations(range(dim), 2))
        return cls(sympy.Matrix(len(pairs), len(pairs),
            lambda i, j: function(pairs[i][0], pairs[i][1], pairs[j][0], pairs[j][1])), dim)

    @classmethod
    def from_products(cls, products, dim=DIMENSION):
        """! @brief Sum of c * (sigma (x) tau) over (c, sigma, tau) with 2-forms sigma and tau."""
        pairs = list(combinations(range(dim), 2))
        matrix = sympy.zeros(len(pairs), len(pairs))
        for coeff, sigma, tau in products:
            left = [sigma.coefficient(*p) for p in pairs]
            right = [tau.coefficient(*p) for p in pairs]
            for i, s in enumerate(left):
                if s == 0:
                    continue
                for j, t in enumerate(right):
                    if t != 0:
                        matrix[i, j] += coeff * s * t
        return cls(matrix, dim)

    @classmethod
    def from_four_form(cls, form):
        return cls.from_riemann(lambda a, b, c, d: form.coefficient(a, b, c, d), form.dim)

    @classmethod
    def torsion_square(cls, torsion):
        """! @brief 1/4 sum_i (e_i _| T) (x) (e_i _| T)."""
        contracted = [torsion.interior(i) for i in range(torsion.dim)]
        return cls.from_products([(HALF * HALF, s, s) for s in contracted], torsion.dim)

    @classmethod
    def torsion_wedge(cls, torsion):
        """! @brief 1/4 sum_i (e_i _| T) ^ (e_i _| T), read as a 4-tensor."""
        total = AltForm.zero(torsion.dim)
        for i in range(torsion.dim):
            contracted = torsion.interior(i)
            total = total + contracted.wedge(contracted)
        return cls.from_four_form(HALF * HALF * total)

    @classmethod
    def zero(cls, dim=DIMENSION):
        size = dim * (dim - 1) // 2
        return cls(sympy.zeros(size, size), dim)

    @property
    def dim(self):
        return self._dim

    @property
    def matrix(self):
        return self._matrix

    def value(self, a, b, c, d):
        """! @brief R(e_a, e_b, e_c, e_d)."""
        s1, p = sort_with_sign((a, b))
        s2, q = sort_with_sign((c, d))
        if not (s1 and s2):
            return ZERO
        return s1 * s2 * self._matrix[self._index[p], self._index[q]]

    def endomorphism(self, a, b):
        """! @brief R(e_a, e_b) as an endomorphism, <R(e_a, e_b) e_c, e_d> = R_abcd."""
        return SkewEndo(sympy.Matrix(self._dim, self._dim, lambda d, c: self.value(a, b, c, d)))

    def ricci(self):
        """! @brief Ricci matrix Ric(e_b, e_c) = sum_a R(e_a, e_b, e_c, e_a)."""
        return sympy.ImmutableMatrix(self._dim, self._dim,
            lambda b, c: normalize(sum((self.value(a, b, c, a) for a in range(self._dim)), ZERO)))

    def symmetry_defects(self):
        """! @brief Entries breaking pair symmetry or the first Bianchi identity."""
        defects = []
        for i, j in combinations(range(len(self._pairs)), 2):
            if normalize(self._matrix[i, j] - self._matrix[j, i]) != 0:
                defects.append(('pair', self._pairs[i], self._pairs[j]))
        for a, b, c, d in combinations(range(self._dim), 4):
            cyclic = normalize(self.value(a, b, c, d) + self.value(b, c, a, d)
                + self.value(c, a, b, d))
            if cyclic != 0:
                defects.append(('bianchi', (a, b, c), d))
        return defects

    def is_zero(self):
        return all(entry == 0 for entry in self._matrix)

    def entries(self):
        """! @brief Nonzero entries on and above the diagonal as ((I, J), value)."""
        size = len(self._pairs)
        return [((self._pairs[i], self._pairs[j]), self._matrix[i, j])
            for i in range(size) for j in range(i, size) if self._matrix[i, j] != 0]

    def _check(self, other):
        if other._dim != self._dim:
            raise DimensionMismatchError("curvature operators of dimension %d and %d"
                % (self._dim, other._dim))
        return other

    def __add__(self, other):
        return CurvatureOperator(self._matrix + self._check(other)._matrix, self._dim)

    def __sub__(self, other):
        return CurvatureOperator(self._matrix - self._check(other)._matrix, self._dim)

    def __neg__(self):
        return CurvatureOperator(-self._matrix, self._dim)

    def __mul__(self, factor):
        return CurvatureOperator(sympy.sympify(factor) * self._matrix, self._dim)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CurvatureOperator):
            return self._dim == other._dim and self._matrix == other._matrix
        return NotImplemented

    __hash__ = None

    def __str__(self):
        entries = self.entries()
        if not entries:
            return "0"
        return ", ".join("R(e%d,e%d,e%d,e%d) = %s" % (p[0], p[1], q[0], q[1], value)
            for (p, q), value in entries)

    def __repr__(self):
        return "<%s@%x: %s>" % (self.__class__.__name__, id(self), self)

def levi_civita_from_characteristic(characteristic, torsion):
    """! @brief R^g = R^c - 1/4 sum (e_i _| T) (x) (e_i _| T) - 1/4 sum (e_i _| T) ^ (e_i _| T)."""
    return (characteristic - CurvatureOperator.torsion_square(torsion)
        - CurvatureOperator.torsion_wedge(torsion))

def characteristic_from_levi_civita(levi_civita, torsion):
    return (levi_civita + CurvatureOperator.torsion_square(torsion)
        + CurvatureOperator.torsion_wedge(torsion))

## @brief Characteristic torsion over the flat base, -2 alpha.
FLAT_TORSION = -2 * ALPHA

def _vertical_dot(a, b):
    return 1 if (a == b and a in VERTICAL) else 0

def flat_riemann(a, b, c, d):
    """! @brief Levi-Civita curvature of flat space times the round 3-sphere.

    R(X, Y, Z, W) = <X^v, W^v><Y^v, Z^v> - <X^v, Z^v><Y^v, W^v>.
    """
    return _vertical_dot(a, d) * _vertical_dot(b, c) - _vertical_dot(a, c) * _vertical_dot(b, d)

def flat_levi_civita_operator():
    return CurvatureOperator.from_riemann(flat_riemann)

def flat_sphere_display():
    """! @brief -(e^45 (x) e^45 + e^56 (x) e^56 + e^64 (x) e^64)."""
    squares = [AltForm.monomial(4, 5), AltForm.monomial(5, 6), AltForm.monomial(6, 4)]
    return CurvatureOperator.from_products([(-1, s, s) for s in squares])

def flat_characteristic_operator():
    return characteristic_from_levi_civita(flat_levi_civita_operator(), FLAT_TORSION)
