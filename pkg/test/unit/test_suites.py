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

import threading

import pytest
import sympy

from gwistor.verify.suites import (VerificationContext, SUITES, SUITE_NAMES, ALL_SUITES,
    suite_names, build_suite, run_suite, build_stiefel_sequence, run_stiefel,
    check_parallel_torsion, check_holonomy, outcome, _contact)
from gwistor.algebra.scalar import K
from gwistor.algebra.forms import AltForm
from gwistor.core.exceptions import (RangeError, UsageError)

@pytest.fixture(scope='module')
def symbolic():
    return VerificationContext(sample_count=5, quaternion_samples=5)

@pytest.fixture(scope='module')
def half():
    return VerificationContext(k=sympy.Rational(1, 2), sample_count=5, quaternion_samples=5)

class TestSelection(object):
    def test_names(self):
        assert list(SUITES.keys()) == list(SUITE_NAMES)
        assert suite_names(ALL_SUITES) == list(SUITE_NAMES)
        assert suite_names('flat') == ['flat']

    def test_unknown(self):
        with pytest.raises(UsageError):
            suite_names('bogus')

    def test_check_ids(self):
        for name, checks in SUITES.items():
            ids = [check_id for check_id, _ in checks]
            assert len(ids) == len(set(ids))
            assert all(check_id.startswith(name + '.') for check_id in ids)

    def test_all_nests(self, symbolic):
        sequence = build_suite(ALL_SUITES, symbolic)
        assert sequence.names == list(SUITE_NAMES)

class TestOutcome(object):
    def test_form(self):
        assert outcome('x.y', "a", AltForm.zero()).passed
        result = outcome('x.y', "a", AltForm.monomial(0))
        assert not result.passed
        assert result.witness == "e0"

    def test_list(self):
        assert outcome('x.y', "a", []).passed
        result = outcome('x.y', "a", [(1, 2), (3, 4)])
        assert result.witness == "(1, 2); (3, 4)"

    def test_scalar(self):
        assert outcome('x.y', "a", K - K).passed
        assert outcome('x.y', "a", K).witness == "k"

    def test_matrix(self):
        assert outcome('x.y', "a", sympy.zeros(2, 2)).passed

class TestParallelTorsion(object):
    def test_symbolic(self, symbolic):
        result = check_parallel_torsion(symbolic)
        assert result.passed
        assert result.detail == "factor k*(k-1), roots {0, 1}"

    @pytest.mark.parametrize("k", [0, 1])
    def test_parallel(self, k):
        result = check_parallel_torsion(VerificationContext(k=sympy.Integer(k)))
        assert result.passed

    def test_half(self, half):
        result = check_parallel_torsion(half)
        assert not result.passed
        assert result.detail == "direction e4; factor k*(k-1) = -1/4"
        assert "e0^e3^e5" in result.witness

    def test_factor_from_computed_derivative(self, monkeypatch):
        ctx = VerificationContext(sample_count=5, quaternion_samples=5)
        characteristic = ctx.characteristic()
        monkeypatch.setattr(characteristic, 'nabla', lambda direction, form: AltForm.zero())
        result = check_parallel_torsion(ctx)
        assert not result.passed
        assert result.detail == "factor 0, roots every k"

class TestVerificationContext(object):
    def _build_on_thread(self, build):
        built = []
        worker = threading.Thread(target=lambda: built.append(build()))
        worker.daemon = True
        worker.start()
        worker.join(60)
        assert not worker.is_alive()
        return built[0]

    def test_characteristic_reuses_connection(self):
        ctx = VerificationContext(k=sympy.Integer(1))
        characteristic = self._build_on_thread(ctx.characteristic)
        assert characteristic.levi_civita is ctx.connection()
        assert ctx.characteristic() is characteristic

    def test_contact_structure(self):
        ctx = VerificationContext()
        structure = self._build_on_thread(lambda: _contact(ctx, 1))
        assert structure.connection is ctx.connection(1)
        assert structure.d_eta_defect().is_zero()

class TestSuites(object):
    @pytest.mark.parametrize("name", ['structure', 'properties', 'flat', 'contact'])
    def test_passes(self, symbolic, name):
        report = run_suite(name, symbolic)
        assert report.suite == name
        failed = [r.id for r in report.results if not r.passed]
        assert failed == []

    def test_torsion_symbolic(self, symbolic):
        report = run_suite('torsion', symbolic)
        assert report.passed
        assert report.exit_code == 0

    def test_torsion_half(self, half):
        report = run_suite('torsion', half, jobs=2)
        failed = [r.id for r in report.results if not r.passed]
        assert failed == ['torsion.parallel_torsion']
        assert report.exit_code == 1

    def test_connection(self, symbolic):
        assert run_suite('connection', symbolic).passed

    def test_all(self, symbolic):
        report = run_suite(ALL_SUITES, symbolic, jobs=2)
        failed = [r.id for r in report.results if not r.passed]
        assert failed == []
        for name in SUITE_NAMES:
            assert any(r.id.startswith(name + '.') for r in report.results)

    def test_holonomy_sweep(self, symbolic):
        result = check_holonomy(symbolic)
        assert result.passed
        assert result.detail == "dimensions l=4: 1, l=5: 3, l=6: 6, l=7: 10"

class TestStiefel(object):
    @pytest.mark.parametrize("l", [3, 10])
    def test_range(self, symbolic, l):
        with pytest.raises(RangeError) as info:
            build_stiefel_sequence(l, symbolic)
        assert "l out of range" in str(info.value)

    def test_max_l(self, symbolic):
        with pytest.raises(RangeError):
            build_stiefel_sequence(7, symbolic, max_l=6)

    def test_frame_checks(self, symbolic):
        assert 'stiefel.holonomy_in_g2' not in build_stiefel_sequence(4, symbolic).names
        assert 'stiefel.holonomy_in_g2' in build_stiefel_sequence(5, symbolic).names

    def test_run(self, symbolic):
        report = run_stiefel(4, symbolic)
        assert report.suite == "stiefel l=4"
        assert report.passed
        assert report.get('stiefel.holonomy').detail.startswith("holonomy dim 1")
