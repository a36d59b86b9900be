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
from functools import lru_cache
from itertools import product

import sympy

from ..algebra.scalar import (K, LAMBDA, ZERO, normalize, riemann_symbol)
from ..algebra.forms import AltForm
from ..algebra.vectors import AmbientVector

LOG = logging.getLogger(__name__)

## @brief Index range of the base frame e_0..e_3.
BASE = (0, 1, 2, 3)

def _ordered_pair(i, j):
    if i == j:
        return 0, None
    if i < j:
        return 1, (i, j)
    return -1, (j, i)

@lru_cache(maxsize=None)
def normalize_riemann(i, j, k, l):
    """! @brief Express R_ijkl through the canonical symbols.

    Each index pair is ordered with a sign, the pairs are swapped so the first is not larger,
    and the Bianchi identity R_0123 - R_0213 + R_0312 = 0 eliminates R_0312.
    """
    s1, p = _ordered_pair(i, j)
    s2, q = _ordered_pair(k, l)
    if not (s1 and s2):
        return ZERO
    if q < p:
        p, q = q, p
    sign = s1 * s2
    if (p, q) == ((0, 3), (1, 2)):
        return sign * (riemann_symbol(0, 2, 1, 3) - riemann_symbol(0, 1, 2, 3))
    return sign * riemann_symbol(p[0], p[1], q[0], q[1])

def canonical_symbols():
    """! @brief The 20 independent curvature symbols, in lexicographic order."""
    pairs = [(i, j) for i in BASE for j in BASE if i < j]
    symbols = []
    for p in pairs:
        for q in pairs:
            if q >= p and (p, q) != ((0, 3), (1, 2)):
                symbols.append(riemann_symbol(p[0], p[1], q[0], q[1]))
    return symbols

def constant_curvature_value(i, j, k, l, curvature=K):
    """! @brief R_ijkl = k (d_il d_jk - d_ik d_jl)."""
    return curvature * (int(i == l and j == k) - int(i == k and j == l))

def constant_substitution(curvature=K):
    """! @brief Mapping of every canonical symbol to its constant curvature value."""
    return {riemann_symbol(*indices): constant_curvature_value(*indices, curvature=curvature)
        for indices in (tuple(int(c) for c in s.name[2:]) for s in canonical_symbols())}

def _symbolic_ricci(j, k):
    return normalize(sum((normalize_riemann(i, j, k, i) for i in BASE), ZERO))

@lru_cache(maxsize=None)
def _einstein_substitution():
    equations = [_symbolic_ricci(j, k) - (LAMBDA if j == k else 0)
        for j in BASE for k in BASE if j <= k]
    # Pivots are taken in list order, so the lexicographically last symbols are eliminated.
    unknowns = sorted(canonical_symbols(), key=lambda s: s.name, reverse=True)
    solution, = sympy.linsolve(equations, unknowns)
    mapping = {}
    for symbol, value in zip(unknowns, solution):
        value = normalize(value)
        if value != symbol:
            mapping[symbol] = value
    LOG.debug("Einstein reduction eliminates %d curvature symbols", len(mapping))
    return mapping

class CurvatureSpec(object):
    """! @brief Curvature data of the base 4-manifold.

    Either constant sectional curvature k, or the symbolic curvature tensor in the canonical
    symbols, optionally reduced to an Einstein tensor with constant lambda.
    """

    CONSTANT = 'constant'
    SYMBOLIC = 'symbolic'

    def __init__(self, kind, curvature=None, einstein=False):
        self._kind = kind
        self._k = curvature
        self._einstein = einstein
        self._substitution = _einstein_substitution() if (kind == self.SYMBOLIC and einstein) else {}

    @classmethod
    def constant(cls, curvature=K):
        return cls(cls.CONSTANT, curvature=sympy.sympify(curvature))

    @classmethod
    def symbolic(cls, einstein=False):
        return cls(cls.SYMBOLIC, einstein=einstein)

    @property
    def kind(self):
        return self._kind

    @property
    def is_constant(self):
        return self._kind == self.CONSTANT

    @property
    def is_einstein(self):
        return self.is_constant or self._einstein

    @property
    def k(self):
        return self._k

    @property
    def einstein_constant(self):
        if self.is_constant:
            return normalize(3 * self._k)
        elif self._einstein:
            return LAMBDA
        return None

    def riemann(self, i, j, k, l):
        """! @brief R_ijkl = <R(e_i, e_j) e_k, e_l> on the base frame."""
        if self.is_constant:
            return constant_curvature_value(i, j, k, l, self._k)
        value = normalize_riemann(i, j, k, l)
        if self._substitution:
            value = normalize(value.subs(self._substitution))
        return value

    def ricci(self, j, k):
        return normalize(sum((self.riemann(i, j, k, i) for i in BASE), ZERO))

    def rbar(self):
        """! @brief r(U, U) = sum_j R_j00j."""
        return normalize(sum((self.riemann(j, 0, 0, j) for j in (1, 2, 3)), ZERO))

    def rho(self):
        """! @brief The 1-form sum_{i,k} R_ki0k e^{i+3}."""
        return AltForm({(i + 3,): sum((self.riemann(k, i, 0, k) for k in (1, 2, 3)), ZERO)
            for i in (1, 2, 3)})

    def rho_rbar(self):
        return self.rho(), self.rbar()

    def riem_alpha(self):
        """! @brief The 4-form sum_{i<j} R_ij01 e^ij56 + R_ij02 e^ij64 + R_ij03 e^ij45."""
        terms = {}
        for i in BASE:
            for j in BASE:
                if i < j:
                    terms[(i, j, 5, 6)] = self.riemann(i, j, 0, 1)
                    terms[(i, j, 6, 4)] = self.riemann(i, j, 0, 2)
                    terms[(i, j, 4, 5)] = self.riemann(i, j, 0, 3)
        return AltForm(terms)

    def curvature_vector(self, x, y):
        """! @brief The vertical vector R(X^h, Y^h) U lifted to the sphere bundle."""
        components = [ZERO] * 8
        for p, q in product(BASE, BASE):
            if x[p] == 0 or y[q] == 0:
                continue
            for l in (1, 2, 3):
                components[l + 3] += x[p] * y[q] * self.riemann(p, q, 0, l)
        return AmbientVector(components)

    def _r_vector(self, x, c, l):
        return sum((x[p] * self.riemann(p, c, 0, l) for p in BASE if x[p] != 0), ZERO)

    def a_tensor(self, x, y):
        """! @brief The symmetric horizontal-valued tensor A of the Levi-Civita connection.

        A(X, Y) = 1/2 sum_c sum_l (R(X, e_c, e_0, e_l) Y^{l+3} + R(Y, e_c, e_0, e_l) X^{l+3}) e_c
        """
        components = [ZERO] * 8
        for c in BASE:
            total = ZERO
            for l in (1, 2, 3):
                if y[l + 3] != 0:
                    total += self._r_vector(x, c, l) * y[l + 3]
                if x[l + 3] != 0:
                    total += self._r_vector(y, c, l) * x[l + 3]
            components[c] = total / 2
        return AmbientVector(components)

    def substitute_constant(self, value, curvature=K):
        """! @brief Specialize a symbolic expression or form to constant curvature."""
        mapping = constant_substitution(curvature)
        if isinstance(value, AltForm):
            return value.subs(mapping)
        return normalize(sympy.sympify(value).subs(mapping))

    def __repr__(self):
        if self.is_constant:
            return "<CurvatureSpec: constant k=%s>" % self._k
        return "<CurvatureSpec: symbolic%s>" % (" einstein" if self._einstein else "")
