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

class Error(RuntimeError):
    """! @brief Parent of all errors gwistor can raise"""
    pass

class InternalError(Error):
    """! @brief An inconsistency inside the engine itself"""
    pass

class UsageError(Error):
    """! @brief Invalid input supplied by the user.

    The command line tool maps this class and its subclasses to exit status 2.
    """
    pass

class RangeError(UsageError):
    """! @brief A numeric parameter lies outside its supported range"""
    pass

class ExpressionError(UsageError):
    """! @brief Problem with an expression given to the evaluator"""
    pass

class ParseError(ExpressionError):
    """! @brief Syntax error in an expression, with its position"""
    def __init__(self, msg, line=1, column=1):
        super(ParseError, self).__init__(msg)
        self._msg = msg
        self._line = line
        self._column = column

    @property
    def line(self):
        return self._line

    @property
    def column(self):
        return self._column

    def __str__(self):
        return "line %d, column %d: %s" % (self._line, self._column, self._msg)

class UnknownIdentifierError(ExpressionError):
    """! @brief An identifier that is neither a named form nor a builtin"""
    pass

class GradeError(ExpressionError):
    """! @brief Operands of the wrong form degree"""
    pass

class UnknownFormError(UsageError):
    """! @brief Lookup of a name missing from the form catalog"""
    pass

class UnknownSymbolError(UsageError):
    """! @brief A scalar uses a symbol outside the fixed symbol set"""
    pass

class CurvatureError(Error):
    """! @brief Curvature data does not allow the requested computation"""
    pass

class CocalibrationError(CurvatureError):
    """! @brief The characteristic connection was requested for a non-Einstein base"""
    pass

class CurvatureDependenceError(CurvatureError):
    """! @brief Derivative of a form whose coefficients depend on the base curvature"""
    pass

class PreconditionError(Error):
    """! @brief An operation was called outside the parameter values it is defined for"""
    pass

class DimensionMismatchError(Error):
    """! @brief Matrices of different sizes were combined"""
    pass

class DecompositionError(Error):
    """! @brief A 3-form has a component in the 7-dimensional summand"""
    def __init__(self, msg, residual=None):
        super(DecompositionError, self).__init__(msg)
        self._residual = residual

    @property
    def residual(self):
        return self._residual
