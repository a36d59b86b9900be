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
from collections import namedtuple

import sympy

from ..algebra.scalar import (K, as_scalar, normalize, roots_in_k)
from ..core.exceptions import RangeError

LOG = logging.getLogger(__name__)

## @brief Ricci tensor of the contact metric g~ = g/4 at k = 1: Ric = lam g~ + nu eta (x) eta.
EtaEinstein = namedtuple('EtaEinstein', 'lam nu')

class RicciModel(object):
    """! @brief Ricci tensor of the sphere bundle over an m-dimensional base of curvature k.

    Ric_g = c_h g^h + c_v g^v + c_mu mu (x) mu, with g^h the metric on the horizontal
    directions (including e_0) and g^v the metric on the vertical directions.
    """

    def __init__(self, m=4, k=K):
        if m < 3:
            raise RangeError("base dimension must be at least 3, got %d" % m)
        self._m = m
        self._k = as_scalar(k)

    @property
    def m(self):
        return self._m

    @property
    def k(self):
        return self._k

    @property
    def c_h(self):
        return normalize((self._m - 1) * self._k - self._k ** 2 / 2)

    @property
    def c_v(self):
        return normalize(self._m - 2 + self._k ** 2 / 2)

    @property
    def c_mu(self):
        return normalize(self._k ** 2 * (2 - self._m) / 2)

    def matrix(self):
        """! @brief Ricci matrix in the adapted frame, for a 4-dimensional base."""
        if self._m != 4:
            raise RangeError("the adapted frame exists for a 4-dimensional base only")
        diagonal = [self.c_h + self.c_mu] + [self.c_h] * 3 + [self.c_v] * 3
        return sympy.ImmutableMatrix(sympy.diag(*[normalize(d) for d in diagonal]))

    def eta_einstein_polynomial(self):
        """! @brief c_h - c_v, which vanishes exactly when the metric is eta-Einstein."""
        model = RicciModel(self._m, K)
        return normalize(model.c_h - model.c_v)

    def eta_einstein_roots(self):
        """! @brief Values of k with an eta-Einstein metric: the roots {1, m - 2}."""
        return roots_in_k(self.eta_einstein_polynomial())

    def contact_ricci(self):
        """! @brief (lam, nu) with Ric = lam g~ + nu eta (x) eta at k = 1."""
        model = RicciModel(self._m, 1)
        return EtaEinstein(normalize(4 * model.c_h), normalize(4 * model.c_mu))

def ricci_matrix(k=K, m=4):
    """! @brief Ricci matrix of the sphere bundle metric in the adapted frame."""
    return RicciModel(m, k).matrix()
