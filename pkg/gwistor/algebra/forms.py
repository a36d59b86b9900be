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
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import sympy
from sympy.combinatorics import Permutation

from .scalar import (ZERO, normalize, has_curvature_symbols)
from ..core.exceptions import (GradeError, DimensionMismatchError)

LOG = logging.getLogger(__name__)

## @brief Dimension of the adapted coframe e^0..e^6.
DIMENSION = 7

@lru_cache(maxsize=None)
def sort_with_sign(indices):
    """! @brief Sort a tuple of coframe indices, tracking the permutation sign.

    @return Tuple of (sign, sorted indices). The sign is 0 and the indices None if an index
        repeats.
    """
    if len(set(indices)) != len(indices):
        return 0, None
    if len(indices) < 2:
        return 1, tuple(indices)
    order = sorted(range(len(indices)), key=indices.__getitem__)
    sign = -1 if Permutation(order).parity() else 1
    return sign, tuple(sorted(indices))

def _coerce(value):
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)

def _format_term(coeff, indices):
    if not indices:
        return str(coeff)
    return format_scaled(coeff, "^".join("e%d" % i for i in indices))

def format_scaled(coeff, basis):
    """! @brief Text for coeff times a named basis element."""
    if coeff == 1:
        return basis
    if coeff == -1:
        return '-' + basis
    text = str(coeff)
    if coeff.is_Add:
        text = '(%s)' % text
    return '%s*%s' % (text, basis)

class AltForm(object):
    """! @brief Exterior form on an orthonormal coframe with exact scalar coefficients.

    Terms are stored as a map from strictly increasing index tuples to nonzero normalized
    scalars. A form may mix several grades; such a form is the graded family of its components
    and every operation distributes over them.

    Instances are immutable.
    """

    def __init__(self, terms=None, dim=DIMENSION):
        """! @brief Constructor.

        @param self
        @param terms Mapping from index tuples to coefficients. Index tuples need not be sorted;
            the permutation sign is applied and repeated indices are dropped.
        @param dim Dimension of the coframe.
        """
        self._dim = dim
        accumulated = {}
        if terms:
            for indices, coeff in terms.items():
                indices = tuple(indices)
                for i in indices:
                    if not 0 <= i < dim:
                        raise IndexError("coframe index %d out of range for dimension %d" % (i, dim))
                sign, key = sort_with_sign(indices)
                if sign == 0:
                    continue
                accumulated[key] = accumulated.get(key, ZERO) + sign * _coerce(coeff)
        self._terms = {}
        for key, coeff in accumulated.items():
            coeff = normalize(coeff)
            if coeff != 0:
                self._terms[key] = coeff

    @classmethod
    def _from_sorted(cls, terms, dim):
        form = cls.__new__(cls)
        form._dim = dim
        form._terms = {key: coeff for key, coeff in terms.items() if coeff != 0}
        return form

    @classmethod
    def monomial(cls, *indices, coeff=1, dim=DIMENSION):
        """! @brief The form coeff * e^{i1} ^ ... ^ e^{ip}."""
        return cls({tuple(indices): coeff}, dim=dim)

    @classmethod
    def scalar(cls, value, dim=DIMENSION):
        return cls({(): value}, dim=dim)

    @classmethod
    def zero(cls, dim=DIMENSION):
        return cls(dim=dim)

    @classmethod
    def flat(cls, vector, dim=DIMENSION):
        """! @brief Metric dual of a vector in the orthonormal frame.

        Components beyond the coframe dimension, such as the ambient U direction, pair to zero
        with every tangent vector and are dropped.
        """
        return cls({(a,): vector[a] for a in range(dim)}, dim=dim)

    @property
    def dim(self):
        return self._dim

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """! @brief Terms sorted by grade and then lexicographically."""
        return sorted(self._terms.items(), key=lambda item: (len(item[0]), item[0]))

    @property
    def grades(self):
        return sorted(set(len(key) for key in self._terms))

    @property
    def grade(self):
        """! @brief The single grade of a homogeneous form, None for the zero form.

        @exception GradeError The form mixes grades.
        """
        grades = self.grades
        if not grades:
            return None
        if len(grades) > 1:
            raise GradeError("form of mixed grades %s has no single grade" % grades)
        return grades[0]

    @property
    def free_symbols(self):
        symbols = set()
        for coeff in self._terms.values():
            symbols |= coeff.free_symbols
        return symbols

    def is_zero(self):
        return not self._terms

    def is_homogeneous(self):
        return len(self.grades) <= 1

    def component(self, grade):
        return AltForm._from_sorted({key: c for key, c in self._terms.items() if len(key) == grade},
            self._dim)

    def coefficient(self, *indices):
        """! @brief Coefficient of e^{indices}, with the permutation sign of the given order."""
        sign, key = sort_with_sign(tuple(indices))
        if sign == 0:
            return ZERO
        return sign * self._terms.get(key, ZERO)

    def scalar_part(self):
        return self._terms.get((), ZERO)

    def _check_dim(self, other):
        if other._dim != self._dim:
            raise DimensionMismatchError("forms of dimension %d and %d" % (self._dim, other._dim))

    def _as_form(self, other):
        if isinstance(other, AltForm):
            self._check_dim(other)
            return other
        return AltForm.scalar(other, dim=self._dim)

    def __add__(self, other):
        other = self._as_form(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = normalize(terms.get(key, ZERO) + coeff)
        return AltForm._from_sorted(terms, self._dim)

    __radd__ = __add__

    def __neg__(self):
        return AltForm._from_sorted({key: -c for key, c in self._terms.items()}, self._dim)

    def __sub__(self, other):
        return self + (-self._as_form(other))

    def __rsub__(self, other):
        return self._as_form(other) - self

    def __mul__(self, other):
        """! @brief Multiplication by a scalar; a form operand means the wedge product."""
        if isinstance(other, AltForm):
            return self.wedge(other)
        factor = _coerce(other)
        return AltForm._from_sorted({key: normalize(factor * c) for key, c in self._terms.items()},
            self._dim)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __xor__(self, other):
        return self.wedge(self._as_form(other))

    def __rxor__(self, other):
        return self._as_form(other).wedge(self)

    def __truediv__(self, other):
        return self * (1 / _coerce(other))

    def wedge(self, other):
        """! @brief Exterior product, with signs from the parity of the merged index tuples."""
        other = self._as_form(other)
        terms = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                sign, key = sort_with_sign(left + right)
                if sign == 0:
                    continue
                terms[key] = terms.get(key, ZERO) + sign * a * b
        return AltForm._from_sorted({key: normalize(c) for key, c in terms.items()}, self._dim)

    def power(self, n):
        result = AltForm.scalar(1, dim=self._dim)
        for _ in range(n):
            result = result.wedge(self)
        return result

    def hodge(self):
        """! @brief Hodge star for the orientation e^0 ^ ... ^ e^{dim-1}.

        On monomials *e^I = sign(I + I^c) e^{I^c}, so that a ^ *b = <a, b> Vol.
        """
        everything = tuple(range(self._dim))
        terms = {}
        for key, coeff in self._terms.items():
            complement = tuple(i for i in everything if i not in key)
            sign, _ = sort_with_sign(key + complement)
            terms[complement] = sign * coeff
        return AltForm._from_sorted(terms, self._dim)

    def inner(self, other):
        """! @brief Inner product for which the coframe monomials are orthonormal."""
        other = self._as_form(other)
        total = ZERO
        for key, coeff in self._terms.items():
            if key in other._terms:
                total += coeff * other._terms[key]
        return normalize(total)

    def norm_squared(self):
        return self.inner(self)

    def interior(self, vector):
        """! @brief Contraction with a vector in its first slot.

        @param self
        @param vector A basis index or any indexable vector. Components beyond the coframe
            dimension are ignored.
        """
        if isinstance(vector, int):
            components = {vector: sympy.Integer(1)}
        else:
            components = {a: _coerce(vector[a]) for a in range(min(self._dim, len(vector)))}
            components = {a: c for a, c in components.items() if c != 0}
        terms = {}
        for key, coeff in self._terms.items():
            for position, index in enumerate(key):
                if index not in components:
                    continue
                reduced = key[:position] + key[position + 1:]
                value = coeff * components[index]
                if position % 2:
                    value = -value
                terms[reduced] = terms.get(reduced, ZERO) + value
        return AltForm._from_sorted({key: normalize(c) for key, c in terms.items()}, self._dim)

    def evaluate(self, *vectors):
        """! @brief Value of the grade-p part on p vectors."""
        form = self.component(len(vectors))
        for vector in vectors:
            form = form.interior(vector)
        return form.scalar_part()

    def apply_derivation(self, image):
        """! @brief Apply the degree-zero derivation determined by its values on the covectors.

        @param self
        @param image Callable taking a coframe index a and returning the image of e^a.
        """
        result = AltForm.zero(self._dim)
        cache = {}
        for key, coeff in self._terms.items():
            for position, index in enumerate(key):
                if index not in cache:
                    cache[index] = image(index)
                if cache[index].is_zero():
                    continue
                left = AltForm._from_sorted({key[:position]: coeff}, self._dim)
                right = AltForm._from_sorted({key[position + 1:]: sympy.Integer(1)}, self._dim)
                result = result + left.wedge(cache[index]).wedge(right)
        return result

    def endo_action(self, endo):
        """! @brief Derivation action of an endomorphism B of the frame.

        (B.w)(X1, ..., Xp) = -sum_i w(X1, ..., B Xi, ..., Xp), which acts on covectors by
        B.e^j = -sum_a <B e_a, e_j> e^a.
        """
        if endo.dim != self._dim:
            raise DimensionMismatchError("endomorphism of dimension %d acting on %d-dimensional forms"
                % (endo.dim, self._dim))
        return self.apply_derivation(endo.covector_image)

    def depends_on_curvature(self):
        return any(has_curvature_symbols(c) for c in self._terms.values())

    def map_coefficients(self, function):
        return AltForm._from_sorted({key: normalize(function(c)) for key, c in self._terms.items()},
            self._dim)

    def subs(self, mapping):
        return self.map_coefficients(lambda c: c.subs(mapping))

    def sharp(self):
        """! @brief Metric dual vector of a 1-form.

        @exception GradeError The form is not of grade 1.
        """
        from .vectors import AmbientVector
        if self.grade not in (None, 1):
            raise GradeError("sharp requires a 1-form, got grade %d" % self.grade)
        if self._dim != DIMENSION:
            raise DimensionMismatchError("sharp is defined on the %d-dimensional coframe" % DIMENSION)
        return AmbientVector({key[0]: coeff for key, coeff in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, AltForm):
            return self._dim == other._dim and self._terms == other._terms
        try:
            return self == self._as_form(other)
        except (TypeError, sympy.SympifyError):
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        text = " + ".join(_format_term(coeff, key) for key, coeff in self.items())
        return text.replace(" + -", " - ")

    def __repr__(self):
        return "<%s@%x: %s>" % (self.__class__.__name__, id(self), self)

def monomial_basis(grade, dim=DIMENSION):
    """! @brief Iterate the coframe monomials of one grade in lexicographic order."""
    for indices in combinations(range(dim), grade):
        yield AltForm._from_sorted({indices: sympy.Integer(1)}, dim)

def volume_form(dim=DIMENSION):
    return AltForm.monomial(*range(dim), dim=dim)
