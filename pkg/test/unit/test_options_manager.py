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

import logging

import pytest

from gwistor.core.options_manager import OptionsManager
from gwistor.core.options import OPTIONS_INFO

@pytest.fixture(scope='function')
def mgr():
    return OptionsManager()

@pytest.fixture(scope='function')
def layer1():
    return {
            'foo': 1,
            'bar': 2,
            'k': '1/2',
            'debug.traceback': False,
        }

class TestOptionsManager(object):
    def test_defaults(self, mgr):
        assert mgr.get('k') == OPTIONS_INFO['k'].default
        assert mgr.get('k') == "symbolic"
        assert mgr.get('random_seed') == 1729

    def test_unknown_default(self, mgr):
        assert mgr.get('not_an_option') is None

    def test_front(self, mgr, layer1):
        mgr.add_front(layer1)
        assert mgr.get('k') == '1/2'
        assert mgr.get('foo') == 1
        assert mgr.get('debug.traceback') is False

    def test_front_priority(self, mgr, layer1):
        mgr.add_front(layer1)
        mgr.add_front({'k': '2'})
        assert mgr.get('k') == '2'
        assert mgr.get('bar') == 2

    def test_back_priority(self, mgr, layer1):
        mgr.add_front(layer1)
        mgr.add_back({'k': '2', 'jobs': 3})
        assert mgr.get('k') == '1/2'
        assert mgr.get('jobs') == 3

    def test_none_value(self, mgr):
        mgr.add_front({'suite': 'flat'})
        mgr.add_front({'suite': None})
        assert mgr.get('suite') == 'flat'

    def test_none_value_keeps_default(self, mgr):
        mgr.add_back({'suite': None})
        assert mgr.get('suite') == 'all'

    def test_convert_double_underscore(self, mgr):
        mgr.add_back({'contact__m': 5})
        assert mgr.get('contact.m') == 5

    @pytest.mark.parametrize("layer", [None, {}])
    def test_empty_layer(self, mgr, layer):
        mgr.add_front(layer)
        mgr.add_back(layer)
        assert mgr.get('jobs') == 1

    def test_logs_source(self, mgr, caplog):
        with caplog.at_level(logging.DEBUG, logger='gwistor.core.options_manager'):
            mgr.add_back({'stiefel__l': 6}, "config file")
        assert "Options from config file: {'stiefel.l': 6}" in caplog.text
