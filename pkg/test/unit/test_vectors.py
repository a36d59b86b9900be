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

from gwistor.algebra.vectors import (AmbientVector, SkewEndo, U_INDEX, AMBIENT_DIMENSION)
from gwistor.algebra.forms import AltForm
from gwistor.algebra.scalar import K
from gwistor.core.exceptions import DimensionMismatchError

@pytest.fixture(scope='function')
def rotation():
    # e_1 -> e_2, e_2 -> -e_1
    matrix = sympy.zeros(7, 7)
    matrix[2, 1] = 1
    matrix[1, 2] = -1
    return SkewEndo(matrix)

class TestAmbientVector(object):
    def test_components(self):
        vector = AmbientVector([1, 2, 3])
        assert len(vector) == AMBIENT_DIMENSION
        assert vector[2] == 3
        assert vector[U_INDEX] == 0
        assert list(vector)[3:] == [0] * 5

    def test_dict_constructor(self):
        vector = AmbientVector({4: 1, U_INDEX: 2})
        assert vector[4] == 1
        assert not vector.is_tangent

    def test_too_long(self):
        with pytest.raises(DimensionMismatchError):
            AmbientVector(range(9))

    def test_split(self):
        vector = AmbientVector([1, 2, 3, 4, 5, 6, 7, 8])
        assert vector.horizontal == AmbientVector([1, 2, 3, 4])
        assert vector.vertical == AmbientVector([0, 0, 0, 0, 5, 6, 7, 8])
        assert vector.horizontal + vector.vertical == vector

    def test_arithmetic(self):
        a = AmbientVector.basis(0)
        b = AmbientVector.basis(4)
        assert (a + b) - b == a
        assert -a == AmbientVector({0: -1})
        assert 2 * a == a * 2
        assert (K * b)[4] == K

    def test_dot(self):
        a = AmbientVector([1, 2, 0, 0, 0, 0, 0, 1])
        b = AmbientVector([3, 4, 0, 0, 0, 0, 0, 5])
        assert a.dot(b) == 16

    def test_flat(self):
        assert AmbientVector.basis(5).flat() == AltForm.monomial(5)

    def test_subs(self):
        assert (K * AmbientVector.basis(1)).subs({K: 3}) == 3 * AmbientVector.basis(1)

    def test_str(self):
        assert str(AmbientVector({0: 1, 4: -2, U_INDEX: 1})) == "e0 - 2*e4 + U"
        assert str(AmbientVector()) == "0"

class TestSkewEndo(object):
    def test_apply(self, rotation):
        assert rotation.apply(AmbientVector.basis(1)) == AmbientVector.basis(2)
        assert rotation.apply(AmbientVector.basis(2)) == -AmbientVector.basis(1)
        assert rotation.apply(AmbientVector.basis(0)).is_zero()

    def test_entry_and_skew(self, rotation):
        assert rotation.entry(2, 1) == 1
        assert rotation.is_skew
        assert rotation.transpose() == -rotation

    def test_not_skew(self):
        assert not SkewEndo(sympy.eye(7)).is_skew

    def test_from_function(self, rotation):
        built = SkewEndo.from_function(lambda j: rotation.apply(AmbientVector.basis(j)))
        assert built == rotation

    def test_compose(self, rotation):
        square = rotation.compose(rotation)
        assert square.apply(AmbientVector.basis(1)) == -AmbientVector.basis(1)

    def test_covector_image(self, rotation):
        # B.e^2 = -sum_a <B e_a, e_2> e^a = -e^1
        assert rotation.covector_image(2) == -AltForm.monomial(1)

    def test_small_dimension(self):
        endo = SkewEndo(sympy.Matrix([[0, -1], [1, 0]]))
        assert endo.dim == 2
        assert endo.apply((1, 0)) == (0, 1)

    def test_square_required(self):
        with pytest.raises(DimensionMismatchError):
            SkewEndo(sympy.zeros(2, 3))

    def test_arithmetic(self, rotation):
        assert (rotation - rotation).is_zero()
        assert (rotation + rotation) == 2 * rotation
        assert SkewEndo.zero().is_zero()
        assert (K * rotation).subs({K: 0}).is_zero()
