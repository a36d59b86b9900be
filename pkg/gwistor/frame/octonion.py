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
import os
import random
from collections import OrderedDict

import sympy

from ..algebra.scalar import (ZERO, normalize)
from ..algebra.forms import (AltForm, _coerce)
from ..algebra.vectors import AmbientVector
from ..core.exceptions import (PreconditionError, UsageError, InternalError)
from .adapted_frame import (VOL, PHI)

LOG = logging.getLogger(__name__)

## @brief Names of the octonion basis in table order; U is the real unit.
OCTONION_BASIS = ('U', 'e0', 'e1', 'e2', 'e3', 'e4', 'e5', 'e6')

## @brief Frame indices carrying the quaternion units (1, i, j, k) of the vertical factor.
_FIRST_HALF = (None, 4, 5, 6)

## @brief Frame indices carrying (1, i, j, k) times the doubling unit.
_SECOND_HALF = (0, 1, 2, 3)

## @brief Path of the committed multiplication table.
GOLDEN_TABLE_PATH = os.path.join(os.path.dirname(__file__), "data", "octonion_table.txt")

class Quaternion(object):
    """! @brief Quaternion with exact scalar components w + x i + y j + z k."""

    def __init__(self, w=0, x=0, y=0, z=0):
        self._c = tuple(normalize(_coerce(v)) for v in (w, x, y, z))

    @property
    def components(self):
        return self._c

    def conjugate(self):
        w, x, y, z = self._c
        return Quaternion(w, -x, -y, -z)

    def norm_squared(self):
        return normalize(sum((c * c for c in self._c), ZERO))

    def __add__(self, other):
        return Quaternion(*[a + b for a, b in zip(self._c, other._c)])

    def __sub__(self, other):
        return Quaternion(*[a - b for a, b in zip(self._c, other._c)])

    def __neg__(self):
        return Quaternion(*[-a for a in self._c])

    def __mul__(self, other):
        a1, b1, c1, d1 = self._c
        a2, b2, c2, d2 = other._c
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self._c == other._c
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "Quaternion%r" % (self._c,)

def _standard(a, b, c, d):
    return (a * c - d.conjugate() * b, d * a + b * c.conjugate())

def _conjugate_right(a, b, c, d):
    return (a * c - d * b.conjugate(), a.conjugate() * d + c * b)

def _opposite(rule):
    return lambda a, b, c, d: rule(c, d, a, b)

## @brief The Cayley-Dickson doubling variants considered for the fiber octonions.
#
# Each rule maps the pairs (a, b) and (c, d) to the pair of the product (a + b l)(c + d l).
CONVENTIONS = OrderedDict([
    ('doubling_standard', _standard),
    ('doubling_standard_opposite', _opposite(_standard)),
    ('doubling_conjugate_right', _conjugate_right),
    ('doubling_conjugate_right_opposite', _opposite(_conjugate_right)),
    ])

## @brief The convention reproducing the gwistor 3-form.
ACCEPTED_CONVENTION = 'doubling_standard'

def _rule(convention):
    try:
        return CONVENTIONS[convention]
    except KeyError:
        raise UsageError("unknown octonion convention '%s'" % convention)

class Octonion(object):
    """! @brief Fiber octonion over the basis (U, e0, ..., e6).

    The octonion a + b l has a in the quaternions spanned by (U, e4, e5, e6) and b l in the span
    of (e0, e1, e2, e3), where l = e0.
    """

    def __init__(self, components=None):
        values = [ZERO] * 8
        if isinstance(components, dict):
            for name, value in components.items():
                values[OCTONION_BASIS.index(name)] = _coerce(value)
        elif components is not None:
            for index, value in enumerate(components):
                values[index] = _coerce(value)
        self._c = tuple(normalize(v) for v in values)

    @classmethod
    def unit(cls, name):
        return cls({name: 1})

    @classmethod
    def from_pair(cls, a, b):
        frame = dict(zip(_SECOND_HALF, b.components))
        frame.update({index: value for index, value in zip(_FIRST_HALF, a.components) if index is not None})
        return cls([a.components[0]] + [frame[i] for i in range(7)])

    @property
    def components(self):
        return self._c

    def to_pair(self):
        real = self._c[0]
        frame = self._c[1:]
        a = Quaternion(real, *[frame[i] for i in _FIRST_HALF[1:]])
        b = Quaternion(*[frame[i] for i in _SECOND_HALF])
        return a, b

    def multiply(self, other, convention=ACCEPTED_CONVENTION):
        a, b = self.to_pair()
        c, d = other.to_pair()
        first, second = _rule(convention)(a, b, c, d)
        return Octonion.from_pair(first, second)

    def norm_squared(self):
        return normalize(sum((c * c for c in self._c), ZERO))

    def imaginary_vector(self):
        """! @brief The imaginary part as a tangent frame vector."""
        return AmbientVector(self._c[1:])

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self._c == other._c
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "Octonion%r" % (self._c,)

def octonion_mult(p, q, convention=ACCEPTED_CONVENTION):
    return p.multiply(q, convention)

def _signed_unit(octonion):
    nonzero = [(index, value) for index, value in enumerate(octonion.components) if value != 0]
    if len(nonzero) != 1 or nonzero[0][1] not in (1, -1):
        raise InternalError("product of basis octonions is not a signed basis element")
    index, value = nonzero[0]
    return (int(value), index)

def multiplication_table(convention=ACCEPTED_CONVENTION):
    """! @brief Table of basis products as (sign, basis index) pairs, rows by left factor."""
    units = [Octonion.unit(name) for name in OCTONION_BASIS]
    return [[_signed_unit(x.multiply(y, convention)) for y in units] for x in units]

def format_table(table, convention=ACCEPTED_CONVENTION):
    lines = [
        "# Fiber octonion multiplication table, convention %s." % convention,
        "# Row x, column y holds the product x*y over the basis %s." % " ".join(OCTONION_BASIS),
        "      " + "".join("%-5s" % name for name in OCTONION_BASIS).rstrip(),
        ]
    for name, row in zip(OCTONION_BASIS, table):
        cells = ["%-5s" % (('+' if sign > 0 else '-') + OCTONION_BASIS[index]) for sign, index in row]
        lines.append(("%-6s" % name + "".join(cells)).rstrip())
    return "\n".join(lines) + "\n"

def parse_table(text):
    """! @brief Read a table in the format produced by format_table()."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if fields == list(OCTONION_BASIS):
            continue
        row = []
        for cell in fields[1:]:
            sign = 1 if cell[0] == '+' else -1
            row.append((sign, OCTONION_BASIS.index(cell[1:])))
        rows.append(row)
    return rows

def load_golden_table(path=GOLDEN_TABLE_PATH):
    with open(path, 'r') as tableFile:
        return parse_table(tableFile.read())

def derive_phi(convention=ACCEPTED_CONVENTION):
    """! @brief The 3-form (x, y, z) -> <x y, z> on the imaginary octonions."""
    units = [Octonion.unit(name) for name in OCTONION_BASIS[1:]]
    terms = {}
    for a in range(7):
        for b in range(a + 1, 7):
            product = units[a].multiply(units[b], convention)
            for c in range(b + 1, 7):
                value = product.components[c + 1]
                if value != 0:
                    terms[(a, b, c)] = value
    return AltForm(terms)

def matching_conventions(target=PHI):
    """! @brief Names of the conventions whose derived 3-form equals the target exactly."""
    matches = [name for name in CONVENTIONS if derive_phi(name) == target]
    LOG.debug("Octonion conventions reproducing the 3-form: %s", matches)
    return matches

def random_rational(rng, bound=9):
    return sympy.Rational(rng.randint(-bound, bound), rng.randint(1, bound))

def norm_defects(count, seed, convention=ACCEPTED_CONVENTION):
    """! @brief Random octonion pairs violating |pq|^2 = |p|^2 |q|^2."""
    rng = random.Random(seed)
    defects = []
    for _ in range(count):
        p = Octonion([random_rational(rng) for _ in range(8)])
        q = Octonion([random_rational(rng) for _ in range(8)])
        if p.multiply(q, convention).norm_squared() != normalize(p.norm_squared() * q.norm_squared()):
            defects.append((p, q))
    return defects

def _check_fiber(vector):
    if any(vector[i] != 0 for i in range(4, len(vector))):
        raise PreconditionError("quaternion product requires vectors in span(e0, e1, e2, e3)")

def cross_product(x, y):
    """! @brief X x Y on the horizontal span, with <X x Y, Z> = vol_M(u, X, Y, Z) and u = e0."""
    u = AmbientVector.basis(0)
    return AmbientVector([VOL.evaluate(u, x, y, AmbientVector.basis(c)) for c in range(4)])

def quaternion_mult(p, q):
    """! @brief Quaternion product on the horizontal fiber span(e0, e1, e2, e3), e0 the unit.

    (l1 u + X1)(l2 u + X2) = (l1 l2 - <X1, X2>) u + l1 X2 + l2 X1 + X1 x X2

    @exception PreconditionError An input has components outside the horizontal span.
    """
    _check_fiber(p)
    _check_fiber(q)
    l1, l2 = p[0], q[0]
    x1 = AmbientVector([0] + [p[i] for i in range(1, 4)])
    x2 = AmbientVector([0] + [q[i] for i in range(1, 4)])
    real = AmbientVector.basis(0) * (l1 * l2 - x1.dot(x2))
    return real + x2 * l1 + x1 * l2 + cross_product(x1, x2)

def quaternion_norm_defects(count, seed):
    """! @brief Random fiber pairs violating |pq|^2 = |p|^2 |q|^2."""
    rng = random.Random(seed)
    defects = []
    for _ in range(count):
        p = AmbientVector([random_rational(rng) for _ in range(4)])
        q = AmbientVector([random_rational(rng) for _ in range(4)])
        pq = quaternion_mult(p, q)
        if pq.dot(pq) != normalize(p.dot(p) * q.dot(q)):
            defects.append((p, q))
    return defects
