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

from gwistor.homogeneous.lie import (LieElement, bracket, so_basis, jacobi_defect, matrix_rank,
    killing_rank)
from gwistor.core.exceptions import (DimensionMismatchError, RangeError)

def E(size, i, j):
    return LieElement.unit(size, i, j)

class TestLieElement(object):
    def test_unit(self):
        element = E(4, 1, 3)
        assert element.matrix[0, 2] == 1
        assert element.matrix[2, 0] == -1
        assert element.is_skew()
        assert element.coordinate(1, 3) == 1

    def test_unit_range(self):
        with pytest.raises(RangeError):
            E(3, 1, 4)

    def test_coordinates(self):
        element = LieElement.from_coordinates(4, {(1, 2): 3, (2, 4): -1})
        assert element == 3 * E(4, 1, 2) - E(4, 2, 4)
        coordinates = element.coordinates()
        assert len(coordinates) == 6
        assert coordinates[(1, 2)] == 3
        assert coordinates[(3, 4)] == 0

    def test_inner_orthonormal(self):
        basis = [e for _, e in so_basis(4)]
        for p, a in enumerate(basis):
            for q, b in enumerate(basis):
                assert a.inner(b) == (1 if p == q else 0)

    def test_bracket(self):
        assert bracket(E(4, 1, 2), E(4, 2, 3)) == E(4, 1, 3)
        assert bracket(E(4, 1, 2), E(4, 3, 4)).is_zero()
        assert bracket(E(5, 1, 5), E(5, 1, 4)) == E(5, 4, 5)

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            bracket(E(3, 1, 2), E(4, 1, 2))
        with pytest.raises(DimensionMismatchError):
            LieElement(sympy.zeros(2, 3))

    def test_jacobi(self):
        a = LieElement.from_coordinates(4, {(1, 2): 1, (3, 4): sympy.Rational(1, 2)})
        b = LieElement.from_coordinates(4, {(1, 3): 2, (2, 4): -1})
        c = LieElement.from_coordinates(4, {(1, 4): 1, (2, 3): 5})
        assert jacobi_defect(a, b, c).is_zero()

    def test_repr(self):
        assert "E12" in repr(E(3, 1, 2))
        assert repr(LieElement.zero(3)).endswith("0>")

class TestRank(object):
    def test_matrix_rank(self):
        assert matrix_rank([]) == 0
        assert matrix_rank([[1, 0], [2, 0]]) == 1

    @pytest.mark.parametrize(("size", "rank"), [
        (2, 0),
        (3, 3),
        (4, 6),
        ])
    def test_killing_rank(self, size, rank):
        assert killing_rank([e for _, e in so_basis(size)]) == rank

    def test_abelian(self):
        assert killing_rank([E(4, 1, 2), E(4, 3, 4)]) == 0
