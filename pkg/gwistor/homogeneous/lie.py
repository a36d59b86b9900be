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

from ..algebra.scalar import (HALF, normalize)
from ..core.exceptions import (DimensionMismatchError, RangeError)

LOG = logging.getLogger(__name__)

class LieElement(object):
    """! @brief Element of so(l), a skew-symmetric l x l matrix with exact entries.

    The basis E_ij = D_ij - D_ji uses 1-based indices i < j and is orthonormal for
    <A, B> = -1/2 tr(AB).
    """

    def __init__(self, matrix):
        self._matrix = sympy.ImmutableMatrix(matrix).applyfunc(normalize)
        if self._matrix.rows != self._matrix.cols:
            raise DimensionMismatchError("so(l) elements are square matrices")

    @classmethod
    def unit(cls, size, i, j):
        """! @brief E_ij for 1 <= i, j <= size."""
        if not (1 <= i <= size and 1 <= j <= size):
            raise RangeError("E_%d%d is not defined in so(%d)" % (i, j, size))
        matrix = sympy.zeros(size, size)
        matrix[i - 1, j - 1] += 1
        matrix[j - 1, i - 1] -= 1
        return cls(matrix)

    @classmethod
    def from_coordinates(cls, size, coordinates):
        """! @brief Build from a mapping (i, j) -> value on the E_ij basis."""
        matrix = sympy.zeros(size, size)
        for (i, j), value in coordinates.items():
            matrix[i - 1, j - 1] += value
            matrix[j - 1, i - 1] -= value
        return cls(matrix)

    @classmethod
    def zero(cls, size):
        return cls(sympy.zeros(size, size))

    @property
    def size(self):
        return self._matrix.rows

    @property
    def matrix(self):
        return self._matrix

    def coordinate(self, i, j):
        """! @brief Coefficient of E_ij, 1-based, i < j."""
        return self._matrix[i - 1, j - 1]

    def coordinates(self):
        return {(i, j): self.coordinate(i, j)
            for i, j in combinations(range(1, self.size + 1), 2)}

    def _check(self, other):
        if other.size != self.size:
            raise DimensionMismatchError("so(%d) and so(%d) elements cannot be combined"
                % (self.size, other.size))
        return other

    def bracket(self, other):
        other = self._check(other)
        return LieElement(self._matrix * other._matrix - other._matrix * self._matrix)

    def inner(self, other):
        """! @brief <A, B> = -1/2 tr(AB)."""
        other = self._check(other)
        return normalize(-HALF * (self._matrix * other._matrix).trace())

    def is_skew(self):
        return all(c == 0 for c in (self._matrix + self._matrix.T))

    def is_zero(self):
        return all(c == 0 for c in self._matrix)

    def __add__(self, other):
        return LieElement(self._matrix + self._check(other)._matrix)

    def __sub__(self, other):
        return LieElement(self._matrix - self._check(other)._matrix)

    def __neg__(self):
        return LieElement(-self._matrix)

    def __mul__(self, factor):
        return LieElement(sympy.sympify(factor) * self._matrix)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LieElement):
            return self._matrix == other._matrix
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        terms = ["%s*E%d%d" % (c, i, j) for (i, j), c in sorted(self.coordinates().items()) if c != 0]
        return "<%s: %s>" % (self.__class__.__name__, " + ".join(terms) or "0")

def bracket(a, b):
    """! @brief Matrix commutator [A, B] = AB - BA.

    @exception DimensionMismatchError The operands have different sizes.
    """
    return a.bracket(b)

def so_basis(size):
    """! @brief The basis E_ij, i < j, of so(size) in lexicographic order."""
    return [((i, j), LieElement.unit(size, i, j)) for i, j in combinations(range(1, size + 1), 2)]

def jacobi_defect(a, b, c):
    return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))

def matrix_rank(vectors):
    """! @brief Rank of a list of coordinate vectors."""
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()

def killing_rank(basis):
    """! @brief Rank of the Killing form tr(ad X ad Y) of a Lie algebra given by a basis.

    The basis elements must be linearly independent; coordinates of brackets are solved for in
    the span of the basis.
    """
    if not basis:
        return 0
    size = basis[0].size
    coordinates = sympy.Matrix([[e.coordinate(i, j) for i, j in combinations(range(1, size + 1), 2)]
        for e in basis]).T
    pseudo = (coordinates.T * coordinates).inv() * coordinates.T

    def ad(x):
        columns = [pseudo * sympy.Matrix([bracket(x, e).coordinate(i, j)
            for i, j in combinations(range(1, size + 1), 2)]) for e in basis]
        return sympy.Matrix.hstack(*columns)

    adjoints = [ad(x) for x in basis]
    killing = sympy.Matrix(len(basis), len(basis),
        lambda p, q: (adjoints[p] * adjoints[q]).trace())
    return killing.rank()
