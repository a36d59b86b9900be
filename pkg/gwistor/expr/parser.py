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

from ..core.exceptions import (ParseError, UnknownIdentifierError, GradeError)
from ..frame.adapted_frame import CATALOG
from .lexer import (tokenize, NUMBER, IDENT, OP, END)

LOG = logging.getLogger(__name__)

## @brief Top grade of forms on the sphere bundle.
TOP_GRADE = 7

## @brief Grades of the builtin identifiers other than the catalog forms.
BUILTIN_GRADES = dict([('k', 0), ('Tc', 3), ('Vol', TOP_GRADE)]
    + [('e%d' % i, 1) for i in range(TOP_GRADE)])

## @brief Builtin functions and their arities.
FUNCTIONS = {
    'star': 1,
    'd': 1,
    'delta': 1,
    'ip': 2,
    'nabla_g': 2,
    'nabla_ch': 2,
    'inner': 2,
    }

def identifier_grade(name):
    if name in CATALOG:
        return CATALOG[name].grade
    return BUILTIN_GRADES.get(name)

class Node(object):
    """! @brief Base of the expression tree.

    Nodes compare structurally; source positions and grades do not take part in equality.
    """

    ## @brief Binding strength used by the printer.
    precedence = 4

    def __init__(self, line=1, column=1):
        self.line = line
        self.column = column
        self.grade = None

    def _key(self):
        raise NotImplementedError()

    def children(self):
        return []

    def __eq__(self, other):
        if isinstance(other, Node):
            return type(self) is type(other) and self._key() == other._key()
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return "<%s: %s>" % (self.__class__.__name__, to_text(self))

class Number(Node):
    def __init__(self, numerator, denominator=None, line=1, column=1):
        super(Number, self).__init__(line, column)
        self.numerator = numerator
        self.denominator = denominator

    def _key(self):
        return (self.numerator, self.denominator)

class Name(Node):
    def __init__(self, name, line=1, column=1):
        super(Name, self).__init__(line, column)
        self.name = name

    def _key(self):
        return (self.name,)

class Negate(Node):
    precedence = 3

    def __init__(self, operand, line=1, column=1):
        super(Negate, self).__init__(line, column)
        self.operand = operand

    def _key(self):
        return (self.operand,)

    def children(self):
        return [self.operand]

class BinaryOp(Node):
    def __init__(self, op, left, right, line=1, column=1):
        super(BinaryOp, self).__init__(line, column)
        self.op = op
        self.left = left
        self.right = right

    @property
    def precedence(self):
        return 1 if self.op in '+-' else 2

    def _key(self):
        return (self.op, self.left, self.right)

    def children(self):
        return [self.left, self.right]

class Call(Node):
    def __init__(self, function, args, line=1, column=1):
        super(Call, self).__init__(line, column)
        self.function = function
        self.args = list(args)

    def _key(self):
        return (self.function, tuple(self.args))

    def children(self):
        return list(self.args)

def to_text(node):
    """! @brief Canonical text of an expression, parsing back to an equal tree."""
    if isinstance(node, Number):
        if node.denominator is None:
            return str(node.numerator)
        return "%d/%d" % (node.numerator, node.denominator)
    elif isinstance(node, Name):
        return node.name
    elif isinstance(node, Negate):
        return "-" + _wrap(node.operand, node.precedence)
    elif isinstance(node, BinaryOp):
        left = _wrap(node.left, node.precedence)
        right = _wrap(node.right, node.precedence + 1)
        return "%s %s %s" % (left, node.op, right)
    elif isinstance(node, Call):
        return "%s(%s)" % (node.function, ", ".join(to_text(a) for a in node.args))
    raise TypeError("not an expression node: %r" % (node,))

def _wrap(node, precedence):
    text = to_text(node)
    if node.precedence < precedence:
        return "(%s)" % text
    return text

class Parser(object):
    """! @brief Recursive descent parser for form expressions.

    expr := term (('+' | '-') term)*
    term := factor (('^' | '*') factor)*
    factor := '-' factor | NUMBER ['/' NUMBER] | IDENT ['(' expr (',' expr)* ')'] | '(' expr ')'
    """

    def __init__(self, text):
        self._tokens = list(tokenize(text))
        self._position = 0

    def _peek(self):
        return self._tokens[self._position]

    def _next(self):
        token = self._tokens[self._position]
        if token.kind != END:
            self._position += 1
        return token

    def _at(self, text):
        token = self._peek()
        return token.kind == OP and token.text == text

    def _error(self, token, message=None):
        if message is None:
            if token.kind == END:
                message = "unexpected end of input"
            else:
                message = "unexpected '%s'" % token.text
        return ParseError(message, token.line, token.column)

    def _expect(self, text):
        token = self._next()
        if token.kind != OP or token.text != text:
            raise self._error(token, "expected '%s'" % text if token.kind != END else None)
        return token

    def parse(self):
        node = self._expr()
        token = self._peek()
        if token.kind != END:
            raise self._error(token)
        return node

    def _expr(self):
        node = self._term()
        while self._at('+') or self._at('-'):
            token = self._next()
            node = BinaryOp(token.text, node, self._term(), token.line, token.column)
        return node

    def _term(self):
        node = self._factor()
        while self._at('^') or self._at('*'):
            token = self._next()
            node = BinaryOp(token.text, node, self._factor(), token.line, token.column)
        return node

    def _factor(self):
        token = self._next()
        if token.kind == OP and token.text == '-':
            return Negate(self._factor(), token.line, token.column)
        elif token.kind == NUMBER:
            if self._at('/'):
                self._next()
                denominator = self._next()
                if denominator.kind != NUMBER:
                    raise self._error(denominator, "expected a denominator")
                if int(denominator.text) == 0:
                    raise self._error(denominator, "zero denominator")
                return Number(int(token.text), int(denominator.text), token.line, token.column)
            return Number(int(token.text), None, token.line, token.column)
        elif token.kind == IDENT:
            if self._at('('):
                self._next()
                args = [self._expr()]
                while self._at(','):
                    self._next()
                    args.append(self._expr())
                self._expect(')')
                return Call(token.text, args, token.line, token.column)
            return Name(token.text, token.line, token.column)
        elif token.kind == OP and token.text == '(':
            node = self._expr()
            self._expect(')')
            return node
        raise self._error(token)

def _position(node):
    return " at line %d, column %d" % (node.line, node.column)

def check(node):
    """! @brief Assign grades to every node of a tree.

    @exception UnknownIdentifierError An identifier or function name is not defined.
    @exception GradeError Operands have grades the operation does not accept, or a result
        would have a grade above the top grade.
    @exception ParseError A function is called with the wrong number of arguments.
    """
    for child in node.children():
        check(child)
    if isinstance(node, Number):
        node.grade = 0
    elif isinstance(node, Name):
        grade = identifier_grade(node.name)
        if grade is None:
            raise UnknownIdentifierError("unknown identifier '%s'%s" % (node.name, _position(node)))
        node.grade = grade
    elif isinstance(node, Negate):
        node.grade = node.operand.grade
    elif isinstance(node, BinaryOp):
        left, right = node.left.grade, node.right.grade
        if node.op in '+-':
            if left != right:
                raise GradeError("cannot combine grades %d and %d with '%s'%s"
                    % (left, right, node.op, _position(node)))
            node.grade = left
        elif node.op == '^':
            node.grade = left + right
        elif left == 0 or right == 0:
            node.grade = left + right
        else:
            raise GradeError("'*' needs a scalar operand, use '^' for the wedge product%s"
                % _position(node))
    elif isinstance(node, Call):
        node.grade = _call_grade(node)
    if not 0 <= node.grade <= TOP_GRADE:
        raise GradeError("grade %d is outside 0..%d%s" % (node.grade, TOP_GRADE, _position(node)))
    return node

def _call_grade(node):
    name = node.function
    if name not in FUNCTIONS:
        raise UnknownIdentifierError("unknown function '%s'%s" % (name, _position(node)))
    arity = FUNCTIONS[name]
    if len(node.args) != arity:
        raise ParseError("%s expects %d argument%s, got %d" % (name, arity,
            "" if arity == 1 else "s", len(node.args)), node.line, node.column)
    grades = [a.grade for a in node.args]
    if name == 'star':
        return TOP_GRADE - grades[0]
    elif name == 'd':
        return grades[0] + 1
    elif name == 'delta':
        if grades[0] == 0:
            raise GradeError("delta needs a form of positive grade%s" % _position(node))
        return grades[0] - 1
    elif name == 'inner':
        if grades[0] != grades[1]:
            raise GradeError("inner needs forms of equal grade, got %d and %d%s"
                % (grades[0], grades[1], _position(node)))
        return 0
    # ip, nabla_g and nabla_ch take a direction given by a 1-form.
    if grades[0] != 1:
        raise GradeError("%s needs a 1-form as direction, got grade %d%s"
            % (name, grades[0], _position(node)))
    if name == 'ip':
        if grades[1] == 0:
            raise GradeError("ip needs a form of positive grade%s" % _position(node))
        return grades[1] - 1
    return grades[1]

def parse(text):
    """! @brief Parse and grade-check an expression."""
    return check(Parser(text).parse())
