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

import sympy

from .scalar import (ZERO, normalize)
from .forms import (AltForm, DIMENSION, _coerce, format_scaled)
from ..core.exceptions import DimensionMismatchError

## @brief Index of the ambient unit vector U in an AmbientVector.
U_INDEX = 7

## @brief Number of ambient components: e_0..e_6 and U.
AMBIENT_DIMENSION = 8

## @brief Printable names of the ambient basis.
BASIS_NAMES = ('e0', 'e1', 'e2', 'e3', 'e4', 'e5', 'e6', 'U')

class AmbientVector(object):
    """! @brief Vector over the ordered basis (e_0, ..., e_6, U) with scalar components.

    The horizontal part is spanned by e_0..e_3 and the vertical part by e_4..e_6 and U. A vector
    is tangent to the sphere bundle when its U component vanishes.
    """

    def __init__(self, components=None):
        values = [ZERO] * AMBIENT_DIMENSION
        if isinstance(components, dict):
            for index, value in components.items():
                values[index] = values[index] + _coerce(value)
        elif components is not None:
            components = list(components)
            if len(components) > AMBIENT_DIMENSION:
                raise DimensionMismatchError("ambient vectors have %d components" % AMBIENT_DIMENSION)
            for index, value in enumerate(components):
                values[index] = _coerce(value)
        self._components = tuple(normalize(v) for v in values)

    @classmethod
    def basis(cls, index):
        return cls({index: 1})

    @property
    def components(self):
        return self._components

    def __getitem__(self, index):
        return self._components[index]

    def __len__(self):
        return AMBIENT_DIMENSION

    def __iter__(self):
        return iter(self._components)

    @property
    def is_tangent(self):
        return self._components[U_INDEX] == 0

    @property
    def horizontal(self):
        return AmbientVector(self._components[:4])

    @property
    def vertical(self):
        return AmbientVector([ZERO] * 4 + list(self._components[4:]))

    def is_zero(self):
        return all(c == 0 for c in self._components)

    def dot(self, other):
        return normalize(sum((a * b for a, b in zip(self._components, other)), ZERO))

    def flat(self):
        return AltForm.flat(self)

    def __add__(self, other):
        return AmbientVector([a + b for a, b in zip(self._components, other)])

    def __sub__(self, other):
        return AmbientVector([a - b for a, b in zip(self._components, other)])

    def __neg__(self):
        return AmbientVector([-a for a in self._components])

    def __mul__(self, factor):
        factor = _coerce(factor)
        return AmbientVector([factor * a for a in self._components])

    __rmul__ = __mul__

    def subs(self, mapping):
        return AmbientVector([c.subs(mapping) for c in self._components])

    def __eq__(self, other):
        if isinstance(other, AmbientVector):
            return self._components == other._components
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        parts = []
        for name, coeff in zip(BASIS_NAMES, self._components):
            if coeff == 0:
                continue
            parts.append(format_scaled(coeff, name))
        if not parts:
            return "0"
        return " + ".join(parts).replace(" + -", " - ")

    def __repr__(self):
        return "<%s@%x: %s>" % (self.__class__.__name__, id(self), self)

class SkewEndo(object):
    """! @brief Endomorphism of the frame, given by the matrix of <B e_j, e_i>.

    Used for the torsion endomorphisms T_X, the almost contact tensor and curvature
    endomorphisms. Skewness is a property that callers check rather than a construction
    requirement.
    """

    def __init__(self, matrix):
        self._matrix = sympy.ImmutableMatrix(matrix).applyfunc(normalize)
        if self._matrix.rows != self._matrix.cols:
            raise DimensionMismatchError("endomorphism matrix must be square")

    @classmethod
    def from_function(cls, function, dim=DIMENSION):
        """! @brief Build from a callable returning the image of the basis vector e_j."""
        columns = [function(j) for j in range(dim)]
        return cls(sympy.Matrix(dim, dim, lambda i, j: _coerce(columns[j][i])))

    @classmethod
    def zero(cls, dim=DIMENSION):
        return cls(sympy.zeros(dim, dim))

    @property
    def dim(self):
        return self._matrix.rows

    @property
    def matrix(self):
        return self._matrix

    def entry(self, i, j):
        return self._matrix[i, j]

    def apply(self, vector):
        """! @brief Image of a vector; components past the frame dimension are ignored."""
        image = [normalize(sum((self._matrix[i, j] * _coerce(vector[j]) for j in range(self.dim)), ZERO))
            for i in range(self.dim)]
        if self.dim == DIMENSION:
            return AmbientVector(image)
        return tuple(image)

    def covector_image(self, j):
        """! @brief The covector B.e^j = -sum_a <B e_a, e_j> e^a."""
        return AltForm({(a,): -self._matrix[j, a] for a in range(self.dim)}, dim=self.dim)

    @property
    def is_skew(self):
        return all(normalize(self._matrix[i, j] + self._matrix[j, i]) == 0
            for i in range(self.dim) for j in range(i, self.dim))

    def transpose(self):
        return SkewEndo(self._matrix.T)

    def compose(self, other):
        return SkewEndo(self._matrix * other._matrix)

    def is_zero(self):
        return all(c == 0 for c in self._matrix)

    def subs(self, mapping):
        return SkewEndo(self._matrix.subs(mapping))

    def __add__(self, other):
        return SkewEndo(self._matrix + other._matrix)

    def __sub__(self, other):
        return SkewEndo(self._matrix - other._matrix)

    def __neg__(self):
        return SkewEndo(-self._matrix)

    def __mul__(self, factor):
        return SkewEndo(_coerce(factor) * self._matrix)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, SkewEndo):
            return self._matrix == other._matrix
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "<%s@%x: %s>" % (self.__class__.__name__, id(self), self._matrix.tolist())
