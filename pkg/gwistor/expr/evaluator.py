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

import sympy

from ..algebra.scalar import (K, as_scalar)
from ..algebra.forms import AltForm
from ..core.exceptions import InternalError
from ..frame.adapted_frame import (CATALOG, VOL_SM)
from ..geometry.curvature import CurvatureSpec
from ..geometry.connection import LeviCivitaConnection
from ..geometry.torsion import CharacteristicConnection
from .parser import (parse, to_text, Number, Name, Negate, BinaryOp, Call)

LOG = logging.getLogger(__name__)

## @brief Outcome of evaluating an expression: canonical text, grade and value.
Evaluation = namedtuple('Evaluation', 'expression grade value')

class Evaluator(object):
    """! @brief Evaluates grade-checked expressions on a base of constant curvature k."""

    def __init__(self, k=K):
        self._k = as_scalar(k)
        self._connection = LeviCivitaConnection(CurvatureSpec.constant(self._k))
        self._characteristic = None

    @property
    def k(self):
        return self._k

    @property
    def characteristic(self):
        if self._characteristic is None:
            self._characteristic = CharacteristicConnection(self._connection)
        return self._characteristic

    def evaluate(self, expression):
        """! @brief Evaluate expression text or a checked tree.

        @return Evaluation tuple.
        """
        node = parse(expression) if isinstance(expression, str) else expression
        LOG.debug("Evaluating %s at k=%s", to_text(node), self._k)
        return Evaluation(to_text(node), node.grade, self._eval(node))

    def _eval(self, node):
        if isinstance(node, Number):
            return AltForm.scalar(sympy.Rational(node.numerator, node.denominator or 1))
        elif isinstance(node, Name):
            return self._name(node.name)
        elif isinstance(node, Negate):
            return -self._eval(node.operand)
        elif isinstance(node, BinaryOp):
            left = self._eval(node.left)
            right = self._eval(node.right)
            if node.op == '+':
                return left + right
            elif node.op == '-':
                return left - right
            elif node.op == '^':
                return left.wedge(right)
            elif node.left.grade == 0:
                return left.scalar_part() * right
            return right.scalar_part() * left
        elif isinstance(node, Call):
            return self._call(node.function, [self._eval(a) for a in node.args])
        raise InternalError("cannot evaluate %r" % (node,))

    def _name(self, name):
        if name in CATALOG:
            return CATALOG[name]
        elif name == 'k':
            return AltForm.scalar(self._k)
        elif name == 'Vol':
            return VOL_SM
        elif name == 'Tc':
            return self.characteristic.torsion
        return AltForm.monomial(int(name[1:]))

    def _call(self, function, args):
        if function == 'star':
            return args[0].hodge()
        elif function == 'd':
            return self._connection.ext_d(args[0])
        elif function == 'delta':
            return self._connection.codiff(args[0])
        elif function == 'inner':
            return AltForm.scalar(args[0].inner(args[1]))
        direction = args[0].sharp()
        if function == 'ip':
            return args[1].interior(direction)
        elif function == 'nabla_g':
            return self._connection.nabla(direction, args[1])
        elif function == 'nabla_ch':
            return self.characteristic.nabla(direction, args[1])
        raise InternalError("unhandled function '%s'" % function)

def evaluate(text, k=K):
    return Evaluator(k).evaluate(text)
