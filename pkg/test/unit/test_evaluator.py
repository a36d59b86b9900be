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

import pytest
import sympy

from gwistor.expr.evaluator import (Evaluator, Evaluation, evaluate)
from gwistor.expr.parser import parse
from gwistor.algebra.scalar import K
from gwistor.algebra.forms import AltForm
from gwistor.frame.adapted_frame import (MU, DMU, VOL, ALPHA, ALPHA1, PHI, STAR_PHI, VOL_SM)
from gwistor.geometry.torsion import constant_curvature_torsion
from gwistor.core.exceptions import GradeError

@pytest.fixture(scope='module')
def symbolic():
    return Evaluator()

@pytest.fixture(scope='module')
def half():
    return Evaluator(sympy.Rational(1, 2))

class TestEvaluate(object):
    def test_dmu(self, symbolic):
        result = symbolic.evaluate("d(mu) - (e4^e1 + e5^e2 + e6^e3)")
        assert result.grade == 2
        assert result.value.is_zero()

    def test_result(self, symbolic):
        result = symbolic.evaluate("mu^dmu")
        assert result == Evaluation("mu ^ dmu", 3, MU.wedge(DMU))

    def test_names(self, symbolic):
        assert symbolic.evaluate("Vol").value == VOL_SM
        assert symbolic.evaluate("vol").value == VOL
        assert symbolic.evaluate("k").value == AltForm.scalar(K)
        assert symbolic.evaluate("e3").value == AltForm.monomial(3)

    def test_scalars(self, symbolic):
        assert symbolic.evaluate("3/7 * phi").value == sympy.Rational(3, 7) * PHI
        assert symbolic.evaluate("phi * k").value == K * PHI
        assert symbolic.evaluate("-phi + phi").value.is_zero()

    def test_hodge(self, symbolic):
        assert symbolic.evaluate("star(phi)").value == STAR_PHI
        assert symbolic.evaluate("star(star(phi)) - phi").value.is_zero()

    def test_d_phi(self, symbolic):
        expected = 3 * K * VOL - DMU.wedge(DMU) - (K + 2) * MU.wedge(ALPHA1)
        assert symbolic.evaluate("d(phi)").value == expected

    def test_inner(self, symbolic):
        assert symbolic.evaluate("inner(d(phi), star_phi)").value == AltForm.scalar(6 * K + 12)

    def test_codiff(self, symbolic):
        assert symbolic.evaluate("delta(phi)").value.is_zero()

    def test_interior(self, symbolic):
        assert symbolic.evaluate("ip(e0, star_phi)").value == STAR_PHI.interior(0)

    def test_torsion(self, symbolic):
        assert symbolic.evaluate("Tc").value == constant_curvature_torsion(K)

    def test_nabla_ch_phi(self, symbolic):
        for a in range(7):
            assert symbolic.evaluate("nabla_ch(e%d, phi)" % a).value.is_zero()

    def test_tree_input(self, symbolic):
        assert symbolic.evaluate(parse("alpha1")).value == ALPHA1

    def test_grade_error(self, symbolic):
        with pytest.raises(GradeError):
            symbolic.evaluate("phi + mu")

class TestRational(object):
    def test_k(self, half):
        assert half.k == sympy.Rational(1, 2)
        assert half.evaluate("inner(d(phi), star_phi)").value == AltForm.scalar(15)

    def test_parallel_torsion(self, half):
        expected = AltForm({(0, 3, 5): 1, (0, 2, 6): -1, (1, 2, 5): 1, (1, 3, 6): 1})
        assert half.evaluate("nabla_ch(e4, Tc)").value == -sympy.Rational(1, 4) * expected
        assert half.evaluate("nabla_ch(e0, Tc)").value.is_zero()

    def test_function(self):
        assert evaluate("Tc", 0).value == -2 * ALPHA
        assert evaluate("nabla_ch(e5, Tc)", 1).value.is_zero()
