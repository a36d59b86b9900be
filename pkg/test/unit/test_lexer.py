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

from gwistor.expr.lexer import (tokenize, Token, NUMBER, IDENT, OP, END)
from gwistor.core.exceptions import ParseError

def kinds(text):
    return [t.kind for t in tokenize(text)]

class TestLexer(object):
    def test_empty(self):
        assert list(tokenize("")) == [Token(END, '', 1, 1)]

    def test_simple(self):
        tokens = list(tokenize("d(mu) + 3/7*alpha1"))
        assert [t.text for t in tokens] == ['d', '(', 'mu', ')', '+', '3', '/', '7', '*', 'alpha1', '']
        assert kinds("d(mu)") == [IDENT, OP, IDENT, OP, END]
        assert kinds("12") == [NUMBER, END]

    def test_columns(self):
        tokens = list(tokenize("e0 ^  e1"))
        assert [t.column for t in tokens] == [1, 4, 7, 9]

    def test_lines(self):
        tokens = list(tokenize("mu\n  + dmu"))
        assert (tokens[1].line, tokens[1].column) == (2, 3)
        assert (tokens[2].line, tokens[2].column) == (2, 5)

    def test_identifier_with_digits(self):
        tokens = list(tokenize("star_phi alpha2"))
        assert [t.text for t in tokens[:2]] == ['star_phi', 'alpha2']

    def test_bad_character(self):
        with pytest.raises(ParseError) as info:
            list(tokenize("mu $ dmu"))
        assert info.value.line == 1
        assert info.value.column == 4
        assert "unexpected character '$'" in str(info.value)
