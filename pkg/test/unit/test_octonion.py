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

import random

import pytest
import sympy

from gwistor.frame import octonion
from gwistor.frame.octonion import (Quaternion, Octonion, OCTONION_BASIS, CONVENTIONS,
    ACCEPTED_CONVENTION, octonion_mult, multiplication_table, format_table, parse_table,
    load_golden_table, derive_phi, matching_conventions, norm_defects, cross_product,
    quaternion_mult, quaternion_norm_defects)
from gwistor.frame.adapted_frame import (frame_vector, PHI)
from gwistor.algebra.vectors import AmbientVector
from gwistor.core.exceptions import (PreconditionError, UsageError)

class TestQuaternion(object):
    def test_units(self):
        i = Quaternion(0, 1)
        j = Quaternion(0, 0, 1)
        k = Quaternion(0, 0, 0, 1)
        assert i * j == k
        assert j * i == -k
        assert i * i == Quaternion(-1)

    def test_norm(self):
        p = Quaternion(1, 2, 3, 4)
        assert p.norm_squared() == 30
        assert (p * p.conjugate()) == Quaternion(30)

class TestOctonion(object):
    def test_unit_real(self):
        u = Octonion.unit('U')
        for name in OCTONION_BASIS:
            assert octonion_mult(u, Octonion.unit(name)) == Octonion.unit(name)

    def test_pair_roundtrip(self):
        x = Octonion(range(8))
        a, b = x.to_pair()
        assert Octonion.from_pair(a, b) == x

    def test_imaginary_squares(self):
        for name in OCTONION_BASIS[1:]:
            unit = Octonion.unit(name)
            assert unit.multiply(unit) == Octonion({'U': -1})

    def test_sample_products(self):
        e = lambda name: Octonion.unit(name)
        assert e('e0').multiply(e('e1')) == e('e4')
        assert e('e4').multiply(e('e5')) == e('e6')
        assert e('e1').multiply(e('e2')) == Octonion({'e6': -1})

    def test_imaginary_vector(self):
        assert Octonion.unit('e3').imaginary_vector() == frame_vector(3)

    def test_unknown_convention(self):
        with pytest.raises(UsageError):
            Octonion.unit('e0').multiply(Octonion.unit('e1'), 'nonsense')

class TestConventions(object):
    def test_accepted(self):
        assert derive_phi(ACCEPTED_CONVENTION) == PHI
        assert matching_conventions(PHI) == [ACCEPTED_CONVENTION]

    def test_others_differ(self):
        for name in CONVENTIONS:
            if name != ACCEPTED_CONVENTION:
                assert derive_phi(name) != PHI

class TestTable(object):
    def test_golden(self):
        assert multiplication_table() == load_golden_table()

    def test_format_parse(self):
        table = multiplication_table()
        assert parse_table(format_table(table)) == table

    def test_shape(self):
        table = load_golden_table()
        assert len(table) == 8
        assert all(len(row) == 8 for row in table)
        assert table[0][0] == (1, 0)

class TestNorms(object):
    def test_octonion_norm(self):
        assert norm_defects(20, 3) == []

    def test_quaternion_norm(self):
        assert quaternion_norm_defects(20, 3) == []

    def test_random_rational(self):
        rng = random.Random(1)
        value = octonion.random_rational(rng)
        assert isinstance(value, sympy.Rational)

class TestFiberQuaternions(object):
    def test_cross_product(self):
        assert cross_product(frame_vector(1), frame_vector(2)) == frame_vector(3)
        assert cross_product(frame_vector(2), frame_vector(1)) == -frame_vector(3)

    def test_products(self):
        e = [frame_vector(i) for i in range(4)]
        assert quaternion_mult(e[0], e[2]) == e[2]
        assert quaternion_mult(e[1], e[1]) == -e[0]
        assert quaternion_mult(e[1], e[2]) == e[3]
        assert quaternion_mult(e[3], e[1]) == e[2]

    def test_general(self):
        p = AmbientVector([1, 1, 0, 0])
        q = AmbientVector([0, 1, 1, 0])
        # (1 + i)(i + j) = i + j - 1 + k
        assert quaternion_mult(p, q) == AmbientVector([-1, 1, 1, 1])

    def test_requires_horizontal(self):
        with pytest.raises(PreconditionError):
            quaternion_mult(frame_vector(4), frame_vector(1))
