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
import re
from fractions import Fraction
from functools import reduce

import sympy

from ..core.exceptions import (UnknownSymbolError, UsageError)

LOG = logging.getLogger(__name__)

## @brief Sectional curvature of the base.
K = sympy.Symbol('k')

## @brief Einstein constant of the base.
LAMBDA = sympy.Symbol('lambda')

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)
HALF = sympy.Rational(1, 2)

_RIEMANN_NAME = re.compile(r'^R_[0-3]{4}$')

def riemann_symbol(i, j, k, l):
    """! @brief Symbol for the curvature component R_ijkl of the base."""
    return sympy.Symbol("R_%d%d%d%d" % (i, j, k, l))

def is_riemann_symbol(symbol):
    return _RIEMANN_NAME.match(symbol.name) is not None

def normalize(value):
    """! @brief Canonical form of a scalar: the fully expanded polynomial.

    Expansion is idempotent and yields sorted monomials without zero coefficients, so two scalars
    are equal exactly when their normal forms are structurally equal.
    """
    return sympy.expand(value)

def check_symbols(value):
    """! @brief Reject scalars that contain symbols outside {k, lambda, R_ijkl}.

    @exception UnknownSymbolError A foreign symbol was found.
    """
    for symbol in value.free_symbols:
        if symbol not in (K, LAMBDA) and not is_riemann_symbol(symbol):
            raise UnknownSymbolError("unknown symbol '%s'" % symbol)
    return value

def as_scalar(value):
    """! @brief Convert an int, Fraction, or sympy expression into a normalized scalar."""
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating point values are not exact scalars")
    if isinstance(value, str):
        value = parse_rational(value)
    return check_symbols(normalize(sympy.sympify(value)))

def parse_rational(text):
    """! @brief Convert 'p/q', an integer, or a terminating decimal string to a Rational.

    @exception UsageError The text is not a rational number.
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError("'%s' is not a rational number" % text)
    return sympy.Rational(value.numerator, value.denominator)

def is_zero(value):
    return normalize(value) == 0

def substitute(value, mapping):
    """! @brief Substitute values for symbols and renormalize."""
    return normalize(sympy.sympify(value).subs(mapping))

def has_curvature_symbols(value):
    return any(is_riemann_symbol(s) for s in sympy.sympify(value).free_symbols)

def roots_in_k(value):
    """! @brief Return the sorted list of roots of a polynomial in k.

    A nonzero constant has no roots. The zero polynomial has every value as a root, reported as
    None.
    """
    value = normalize(value)
    if value == 0:
        return None
    if K not in value.free_symbols:
        return []
    return sorted(sympy.roots(sympy.Poly(value, K)).keys(), key=sympy.default_sort_key)

def common_factor(values):
    """! @brief Monic greatest common divisor in k of the nonzero values.

    The common zero set of the values is the root set of the result. Returns zero when every
    value vanishes.
    """
    values = [v for v in (normalize(value) for value in values) if v != 0]
    if not values:
        return ZERO
    factor = reduce(sympy.gcd, values)
    if not factor.free_symbols <= {K}:
        return normalize(factor)
    return normalize(sympy.Poly(factor, K).monic().as_expr())

def factor_text(value):
    """! @brief Compact factored form of a scalar, e.g. 'k*(k-1)'."""
    return str(sympy.factor(value)).replace(' ', '')

def format_scalar(value):
    return str(normalize(value))
