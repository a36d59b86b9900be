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

from itertools import product

import pytest

from gwistor.geometry.curvature import (CurvatureSpec, normalize_riemann, canonical_symbols,
    constant_curvature_value, constant_substitution, BASE)
from gwistor.algebra.scalar import (K, LAMBDA, normalize, riemann_symbol, has_curvature_symbols)
from gwistor.frame.adapted_frame import (frame_vector, theta, mu_of, MU, ALPHA1)

@pytest.fixture(scope='function')
def constant():
    return CurvatureSpec.constant()

@pytest.fixture(scope='function')
def general():
    return CurvatureSpec.symbolic()

@pytest.fixture(scope='function')
def einstein():
    return CurvatureSpec.symbolic(einstein=True)

class TestNormalizeRiemann(object):
    def test_symmetries(self):
        for i, j, k, l in product(BASE, repeat=4):
            value = normalize_riemann(i, j, k, l)
            assert normalize(value + normalize_riemann(j, i, k, l)) == 0
            assert normalize(value + normalize_riemann(i, j, l, k)) == 0
            assert normalize(value - normalize_riemann(k, l, i, j)) == 0

    def test_bianchi(self):
        for i, j, k, l in product(BASE, repeat=4):
            assert normalize(normalize_riemann(i, j, k, l) + normalize_riemann(j, k, i, l)
                + normalize_riemann(k, i, j, l)) == 0

    def test_eliminated_symbol(self):
        assert normalize_riemann(0, 3, 1, 2) == \
            riemann_symbol(0, 2, 1, 3) - riemann_symbol(0, 1, 2, 3)

    def test_degenerate(self):
        assert normalize_riemann(1, 1, 0, 2) == 0

    def test_canonical_symbols(self):
        symbols = canonical_symbols()
        assert len(symbols) == 20
        assert riemann_symbol(0, 3, 1, 2) not in symbols

class TestConstantCurvature(object):
    def test_values(self):
        assert constant_curvature_value(0, 1, 1, 0) == K
        assert constant_curvature_value(0, 1, 0, 1) == -K
        assert constant_curvature_value(0, 1, 2, 3) == 0

    def test_substitution(self):
        mapping = constant_substitution(2)
        assert len(mapping) == 20
        assert mapping[riemann_symbol(0, 1, 0, 1)] == -2

    def test_ricci(self, constant):
        for j, k in product(BASE, repeat=2):
            assert constant.ricci(j, k) == (3 * K if j == k else 0)

    def test_rho_rbar(self, constant):
        rho, rbar = constant.rho_rbar()
        assert rho.is_zero()
        assert rbar == 3 * K

    def test_riem_alpha(self, constant):
        assert constant.riem_alpha() == -K * MU.wedge(ALPHA1)

    def test_einstein_constant(self, constant):
        assert constant.is_einstein
        assert constant.einstein_constant == 3 * K
        assert CurvatureSpec.constant(2).k == 2

    def test_curvature_vector(self, constant):
        for a, b in product(range(7), repeat=2):
            x, y = frame_vector(a), frame_vector(b)
            assert constant.curvature_vector(x, y) == \
                K * (mu_of(y) * theta(x) - mu_of(x) * theta(y))

    def test_a_tensor(self, constant):
        # A(e_0, e_4) = k/2 (<theta e_0, e_4> + <theta e_4, e_0>) e_0 - k/2 theta^t e_4
        assert constant.a_tensor(frame_vector(0), frame_vector(4)) == -K / 2 * frame_vector(1)
        assert constant.a_tensor(frame_vector(1), frame_vector(4)) == K / 2 * frame_vector(0)
        assert constant.a_tensor(frame_vector(1), frame_vector(2)).is_zero()

    def test_a_tensor_symmetric(self, constant):
        for a, b in product(range(7), repeat=2):
            x, y = frame_vector(a), frame_vector(b)
            assert constant.a_tensor(x, y) == constant.a_tensor(y, x)

class TestSymbolicCurvature(object):
    def test_kind(self, general):
        assert general.kind == CurvatureSpec.SYMBOLIC
        assert not general.is_constant
        assert not general.is_einstein
        assert general.einstein_constant is None

    def test_rbar(self, general):
        assert has_curvature_symbols(general.rbar())
        assert general.substitute_constant(general.rbar()) == 3 * K

    def test_substitute_form(self, general):
        assert general.substitute_constant(general.riem_alpha()) == -K * MU.wedge(ALPHA1)
        assert general.substitute_constant(general.rho(), 1).is_zero()

    def test_riemann_matches_constant(self, general):
        for indices in product(BASE, repeat=4):
            assert general.substitute_constant(general.riemann(*indices)) == \
                constant_curvature_value(*indices)

    def test_curvature_vector_vertical(self, general):
        assert general.curvature_vector(frame_vector(4), frame_vector(1)).is_zero()
        assert general.a_tensor(frame_vector(1), frame_vector(2)).is_zero()

class TestEinstein(object):
    def test_ricci(self, einstein):
        for j, k in product(BASE, repeat=2):
            assert einstein.ricci(j, k) == (LAMBDA if j == k else 0)

    def test_rho(self, einstein):
        assert einstein.rho().is_zero()
        assert einstein.rbar() == LAMBDA

    def test_constant(self, einstein):
        assert einstein.is_einstein
        assert einstein.einstein_constant == LAMBDA
