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

from gwistor.utility.sequencer import CheckSequence

class TestCheckSequence(object):
    def test_empty(self):
        cs = CheckSequence()
        assert cs.count == 0
        assert cs.invoke() == []

    def test_a(self):
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                ('b', lambda : 'b ran'),
                )
        assert cs.count == 2
        assert cs.names == ['a', 'b']
        assert cs.invoke() == ['a ran', 'b ran']

    def test_lists_and_none(self):
        cs = CheckSequence(
                ('a', lambda : ['a1', 'a2']),
                ('b', lambda : None),
                ('c', lambda : ('c1',)),
                )
        assert cs.invoke() == ['a1', 'a2', 'c1']

    def test_append(self):
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                )
        cs.append(
                ('b', lambda : 'b ran'),
                ('c', lambda : 'c ran'),
                )
        assert cs.count == 3
        assert cs.invoke() == ['a ran', 'b ran', 'c ran']

    def test_remove(self):
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                ('b', lambda : 'b ran'),
                )
        cs.remove_task('b')
        assert cs.count == 1
        assert cs.invoke() == ['a ran']

    def test_remove_missing(self):
        cs = CheckSequence()
        with pytest.raises(KeyError):
            cs.remove_task('a')

    def test_get_and_has(self):
        task = lambda : 'a ran'
        cs = CheckSequence(('a', task))
        assert cs.has_task('a')
        assert not cs.has_task('b')
        assert cs.get_task('a') is task

    def test_replace(self):
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                ('b', lambda : 'b ran'),
                )
        cs.replace_task('b', lambda : 'new b')
        assert cs.invoke() == ['a ran', 'new b']
        with pytest.raises(KeyError):
            cs.replace_task('z', lambda : None)

    def test_insert_after(self):
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                ('c', lambda : 'c ran'),
                )
        cs.insert_after('a', ('b', lambda : 'b ran'))
        assert cs.names == ['a', 'b', 'c']
        assert cs.invoke() == ['a ran', 'b ran', 'c ran']
        with pytest.raises(KeyError):
            cs.insert_after('z', ('y', lambda : None))

    def test_nested(self):
        inner = CheckSequence(
                ('x', lambda : 'x ran'),
                ('y', lambda : 'y ran'),
                )
        cs = CheckSequence(
                ('a', lambda : 'a ran'),
                ('inner', lambda : inner),
                ('b', lambda : 'b ran'),
                )
        assert cs.invoke() == ['a ran', 'x ran', 'y ran', 'b ran']

    def test_callable(self):
        cs = CheckSequence(('a', lambda : 'a ran'))
        outer = CheckSequence(('cs', cs))
        assert outer.invoke() == ['a ran']

    def test_jobs_preserve_order(self):
        cs = CheckSequence(*[(str(i), (lambda i=i: i)) for i in range(20)])
        assert cs.invoke(jobs=4) == list(range(20))

    def test_iter(self):
        cs = CheckSequence(
                ('a', lambda : None),
                ('b', lambda : None),
                )
        assert [name for name, _ in cs] == ['a', 'b']
