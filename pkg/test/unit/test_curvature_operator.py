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

from gwistor.geometry.curvature_operator import (CurvatureOperator, FLAT_TORSION,
    flat_riemann, flat_levi_civita_operator, flat_sphere_display, flat_characteristic_operator,
    levi_civita_from_characteristic, characteristic_from_levi_civita)
from gwistor.geometry.torsion import (CharacteristicConnection, characteristic_torsion)
from gwistor.geometry.connection import LeviCivitaConnection
from gwistor.geometry.curvature import CurvatureSpec
from gwistor.algebra.forms import AltForm
from gwistor.frame.adapted_frame import ALPHA
from gwistor.contact.ricci import ricci_matrix
from gwistor.core.exceptions import DimensionMismatchError

@pytest.fixture(scope='function')
def sphere():
    return flat_levi_civita_operator()

class TestOperator(object):
    def test_value_signs(self, sphere):
        assert sphere.value(4, 5, 5, 4) == 1
        assert sphere.value(4, 5, 4, 5) == -1
        assert sphere.value(5, 4, 4, 5) == -1
        assert sphere.value(4, 4, 5, 6) == 0
        assert sphere.value(0, 4, 4, 0) == 0

    def test_from_products(self):
        sigma = AltForm.monomial(0, 1)
        tau = AltForm.monomial(2, 3)
        operator = CurvatureOperator.from_products([(3, sigma, tau)])
        assert operator.value(0, 1, 2, 3) == 3
        assert operator.value(1, 0, 2, 3) == -3
        assert operator.value(2, 3, 0, 1) == 0

    def test_symmetry_defects(self):
        operator = CurvatureOperator.from_products([(1, AltForm.monomial(0, 1), AltForm.monomial(2, 3))])
        kinds = set(d[0] for d in operator.symmetry_defects())
        assert 'pair' in kinds

    def test_endomorphism(self, sphere):
        endo = sphere.endomorphism(4, 5)
        assert endo.is_skew
        assert endo.entry(4, 5) == sphere.value(4, 5, 5, 4)

    def test_arithmetic(self, sphere):
        assert (sphere - sphere).is_zero()
        assert 2 * sphere == sphere + sphere
        assert -sphere == CurvatureOperator.zero() - sphere

    def test_bad_shape(self):
        with pytest.raises(DimensionMismatchError):
            CurvatureOperator(sympy.zeros(3, 3))

    def test_dimension_mismatch(self, sphere):
        with pytest.raises(DimensionMismatchError):
            sphere + CurvatureOperator.zero(dim=4)

    def test_str(self):
        assert str(CurvatureOperator.zero()) == "0"
        operator = CurvatureOperator.from_products([(2, AltForm.monomial(0, 1), AltForm.monomial(0, 1))])
        assert str(operator) == "R(e0,e1,e0,e1) = 2"

class TestFlatBase(object):
    def test_riemann(self):
        assert flat_riemann(4, 5, 5, 4) == 1
        assert flat_riemann(0, 1, 1, 0) == 0

    def test_gauss(self, sphere):
        assert sphere == flat_sphere_display()
        assert sphere.symmetry_defects() == []

    def test_torsion(self):
        assert FLAT_TORSION == -2 * ALPHA
        assert characteristic_torsion(LeviCivitaConnection(CurvatureSpec.constant(0))) == FLAT_TORSION

    def test_torsion_square(self, sphere):
        assert CurvatureOperator.torsion_square(FLAT_TORSION) == -sphere

    def test_torsion_wedge(self):
        assert CurvatureOperator.torsion_wedge(FLAT_TORSION).is_zero()

    def test_characteristic_curvature(self):
        assert flat_characteristic_operator().is_zero()

    def test_round_trip(self, sphere):
        characteristic = characteristic_from_levi_civita(sphere, FLAT_TORSION)
        assert levi_civita_from_characteristic(characteristic, FLAT_TORSION) == sphere

    def test_ricci(self, sphere):
        ricci = sphere.ricci()
        assert ricci == sympy.diag(0, 0, 0, 0, 2, 2, 2)
        assert ricci == ricci_matrix(0, 4)

    def test_parallel(self):
        characteristic = CharacteristicConnection(LeviCivitaConnection(CurvatureSpec.constant(0)))
        for a in range(7):
            assert characteristic.nabla(a, FLAT_TORSION).is_zero()
