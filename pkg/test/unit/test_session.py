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

from gwistor.core.session import Session
from gwistor.algebra.scalar import K
from gwistor.core.exceptions import UsageError
from gwistor.verify.suites import VerificationContext

class TestSession(object):
    def test_defaults(self, session):
        assert session.k == K
        assert session.options.get('suite') == 'all'
        assert session.options.get('format') == 'text'
        assert session.options.get('stiefel.l') == 5
        assert session.log_tracebacks

    def test_current(self, session):
        assert Session.get_current() is session

    def test_config_file(self, project):
        session = Session(project_dir=str(project))
        assert session.k == sympy.Rational(1, 2)
        assert session.options.get('suite') == 'torsion'
        assert session.options.get('jobs') == 3

    def test_dotted_option(self, project):
        session = Session(project_dir=str(project))
        assert session.options.get('stiefel.l') == 6

    def test_no_config(self, project):
        session = Session(project_dir=str(project), no_config=True)
        assert session.k == K

    def test_precedence(self, project):
        session = Session({'suite': 'flat', 'k': '0'}, project_dir=str(project), k='symbolic')
        assert session.k == K
        assert session.options.get('suite') == 'flat'

    def test_explicit_config(self, tmpdir):
        tmpdir.join("other.yml").write("contact.m: 5\n")
        session = Session(project_dir=str(tmpdir), config_file="other.yml")
        assert session.options.get('contact.m') == 5

    def test_bad_k(self):
        session = Session(no_config=True, k='pi')
        with pytest.raises(UsageError):
            session.k

    def test_context(self, project):
        context = VerificationContext.from_session(Session(project_dir=str(project)))
        assert context.k == sympy.Rational(1, 2)
        assert not context.is_symbolic
        assert context.contact_m == 4
        assert context.random_seed == 1729
