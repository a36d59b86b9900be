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

from gwistor.frame.adapted_frame import (frame_vector, theta, theta_t, mu_of, beta, covector,
    named_form, structure_identities, beta_defects, CATALOG, MU, DMU, VOL, ALPHA, ALPHA1,
    ALPHA2, ALPHA3, PHI, STAR_PHI, VOL_SM, HORIZONTAL, VERTICAL)
from gwistor.algebra.forms import AltForm
from gwistor.algebra.vectors import (AmbientVector, U_INDEX)
from gwistor.core.exceptions import UnknownFormError

U = AmbientVector.basis(U_INDEX)

class TestTheta(object):
    def test_images(self):
        assert theta(frame_vector(0)) == U
        assert theta(frame_vector(2)) == frame_vector(5)
        assert theta(frame_vector(4)).is_zero()
        assert theta_t(U) == frame_vector(0)
        assert theta_t(frame_vector(6)) == frame_vector(3)
        assert theta_t(frame_vector(1)).is_zero()

    def test_squares(self):
        for a in range(7):
            x = frame_vector(a)
            assert theta(theta(x)).is_zero()
            assert theta_t(theta_t(x)).is_zero()

    def test_projections(self):
        for a in range(7):
            x = frame_vector(a)
            assert theta_t(theta(x)) == x.horizontal
            assert theta(theta_t(x)) == x.vertical

    def test_mu(self):
        assert mu_of(frame_vector(0)) == 1
        assert all(mu_of(frame_vector(a)) == 0 for a in range(1, 7))
        assert mu_of(AmbientVector({0: 3, 1: 2})) == 3

    def test_beta(self):
        assert beta(frame_vector(1), frame_vector(4)) == 1
        assert beta(frame_vector(4), frame_vector(1)) == -1
        assert beta_defects() == []

    def test_splitting(self):
        assert HORIZONTAL == (0, 1, 2, 3)
        assert VERTICAL == (4, 5, 6)
        assert covector(2) == AltForm.monomial(2)

class TestNamedForms(object):
    def test_dmu(self):
        assert DMU == AltForm.monomial(4, 1) + AltForm.monomial(5, 2) + AltForm.monomial(6, 3)

    def test_grades(self):
        grades = {name: form.grade for name, form in CATALOG.items()}
        assert grades == {'mu': 1, 'dmu': 2, 'vol': 4, 'alpha': 3, 'alpha1': 3, 'alpha2': 3,
            'alpha3': 3, 'phi': 3, 'star_phi': 4}

    def test_phi(self):
        assert PHI == ALPHA - MU.wedge(DMU) - ALPHA2
        assert len(PHI.terms) == 7
        assert all(abs(c) == 1 for c in PHI.terms.values())
        assert PHI.norm_squared() == 7

    def test_star_phi(self):
        assert PHI.hodge() == STAR_PHI
        assert PHI.wedge(STAR_PHI) == 7 * VOL_SM

    def test_vol(self):
        assert VOL == MU.wedge(ALPHA3)

    def test_named_form(self):
        assert named_form('alpha1') == ALPHA1
        with pytest.raises(UnknownFormError):
            named_form('omega')

class TestStructureIdentities(object):
    def test_count(self):
        identities = structure_identities()
        assert len(identities) == 10
        assert len(set(i.id for i in identities)) == 10

    @pytest.mark.parametrize("identity", structure_identities(), ids=lambda i: i.id)
    def test_identity(self, identity):
        assert identity.lhs == identity.rhs

    def test_alpha1_alpha2(self):
        assert ALPHA1.wedge(ALPHA2) == 3 * MU.hodge()
