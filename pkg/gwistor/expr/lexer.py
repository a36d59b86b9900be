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
import re
from collections import namedtuple

from ..core.exceptions import ParseError

LOG = logging.getLogger(__name__)

## @brief A lexical token with its 1-based source position.
Token = namedtuple('Token', 'kind text line column')

NUMBER = 'number'
IDENT = 'ident'
OP = 'op'
END = 'end'

## @brief Single-character operators and punctuation.
OPERATORS = "+-*^/(),"

_TOKEN_PATTERN = re.compile(r"(?P<space>[ \t\r]+)|(?P<newline>\n)|(?P<number>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/(),])")

def tokenize(text):
    """! @brief Split expression text into tokens, ending with an END token.

    @exception ParseError A character that starts no token was found.
    """
    line = 1
    line_start = 0
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        column = position - line_start + 1
        if match is None:
            raise ParseError("unexpected character '%s'" % text[position], line, column)
        kind = match.lastgroup
        if kind == 'newline':
            line += 1
            line_start = match.end()
        elif kind != 'space':
            yield Token(kind, match.group(), line, column)
        position = match.end()
    yield Token(END, '', line, position - line_start + 1)
