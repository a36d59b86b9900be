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

from gwistor.core.session import Session

@pytest.fixture(scope='function')
def session():
    return Session(no_config=True)

@pytest.fixture(scope='function')
def project(tmpdir):
    """! @brief A project directory holding a gwistor.yaml config file."""
    tmpdir.join("gwistor.yaml").write("k: 1/2\nsuite: torsion\nstiefel.l: 6\njobs: 3\n")
    return tmpdir
