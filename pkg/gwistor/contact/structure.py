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
from collections import OrderedDict

from ..algebra.scalar import (K, HALF, ONE, as_scalar, normalize, roots_in_k, common_factor)
from ..algebra.forms import (AltForm, DIMENSION)
from ..algebra.vectors import (AmbientVector, SkewEndo)
from ..core.exceptions import PreconditionError
from ..frame.adapted_frame import (frame_vector, theta, theta_t, mu_of, MU, DMU, PHI)
from ..geometry.curvature import CurvatureSpec
from ..geometry.connection import LeviCivitaConnection
from ..geometry.torsion import (CharacteristicConnection, torsion_endo)

LOG = logging.getLogger(__name__)

## @brief Factor relating the contact metric to the sphere bundle metric, g~ = g/4.
METRIC_SCALE = HALF * HALF

## @brief Contact form eta = mu/2.
ETA = HALF * MU

## @brief Reeb vector xi = 2 e_0.
XI = AmbientVector({0: 2})

def phi_c(vector):
    """! @brief phi_c X = theta X - mu(X) U - theta^t X, so e_i -> e_{i+3} and e_{i+3} -> -e_i."""
    return theta(vector) - mu_of(vector) * AmbientVector({7: 1}) - theta_t(vector)

PHI_C = SkewEndo.from_function(lambda j: phi_c(frame_vector(j)))

def contact_metric(x, y):
    return normalize(METRIC_SCALE * x.dot(y))

def fundamental_form():
    """! @brief F(X, Y) = g~(X, phi_c Y)."""
    return AltForm({(a, b): contact_metric(frame_vector(a), phi_c(frame_vector(b)))
        for a in range(DIMENSION) for b in range(DIMENSION) if a < b})

class ContactStructure(object):
    """! @brief Almost contact metric structure (phi_c, xi, eta, g~) on the sphere bundle."""

    def __init__(self, connection=None):
        self._connection = connection if connection is not None \
            else LeviCivitaConnection(CurvatureSpec.constant(K))

    @property
    def connection(self):
        return self._connection

    def axiom_defects(self):
        """! @brief Check the almost contact metric axioms on the frame.

        @return OrderedDict mapping each axiom to the list of its nonzero defects.
        """
        result = OrderedDict()
        result['eta(xi) = 1'] = [v for v in [normalize(ETA.evaluate(XI) - 1)] if v != 0]
        result['phi_c xi = 0'] = [] if phi_c(XI).is_zero() else [phi_c(XI)]
        square = []
        metric = []
        for a in range(DIMENSION):
            x = frame_vector(a)
            defect = phi_c(phi_c(x)) + x - ETA.evaluate(x) * XI
            if not defect.is_zero():
                square.append((a, defect))
            for b in range(a, DIMENSION):
                y = frame_vector(b)
                value = normalize(contact_metric(phi_c(x), phi_c(y)) - contact_metric(x, y)
                    + ETA.evaluate(x) * ETA.evaluate(y))
                if value != 0:
                    metric.append((a, b, value))
        result['phi_c^2 = -Id + eta (x) xi'] = square
        result['g~(phi_c X, phi_c Y) = g~(X, Y) - eta(X) eta(Y)'] = metric
        return result

    def d_eta_defect(self):
        """! @brief d eta - 2F, with d eta computed from the connection."""
        return self._connection.ext_d(ETA) - 2 * fundamental_form()

    @staticmethod
    def dmu_phi_defects():
        """! @brief Frame pairs where dmu(X, Y) differs from g(X, phi_c Y)."""
        defects = []
        for a in range(DIMENSION):
            for b in range(DIMENSION):
                value = normalize(DMU.evaluate(a, b) - frame_vector(a).dot(phi_c(frame_vector(b))))
                if value != 0:
                    defects.append((a, b, value))
        return defects

    def k_contact_defects(self):
        """! @brief nabla_X xi + phi_c X on every frame direction.

        @return OrderedDict from direction index to the defect vector.
        """
        result = OrderedDict()
        for a in range(DIMENSION):
            x = frame_vector(a)
            result[a] = self._connection.nabla_vector(x, XI) + phi_c(x)
        return result

    def k_contact_roots(self):
        """! @brief Values of k where the whole defect vanishes, per direction with a nonzero defect.

        The roots are those of the common factor of all defect components.
        """
        roots = OrderedDict()
        for a, defect in self.k_contact_defects().items():
            if not defect.is_zero():
                roots[a] = roots_in_k(common_factor(defect))
        return roots

    def phi_derivative(self, z, y):
        """! @brief (nabla_Z phi_c) Y = sum_a (nabla_Z dmu)(e_a, Y) e_a."""
        derivative = self._connection.nabla(z, DMU)
        return AmbientVector({a: derivative.evaluate(frame_vector(a), y) for a in range(DIMENSION)})

    def sasakian_defects(self):
        """! @brief (nabla_Z phi_c) Y - g~(Z, Y) xi + eta(Y) Z on all frame pairs."""
        defects = []
        for c in range(DIMENSION):
            z = frame_vector(c)
            for b in range(DIMENSION):
                y = frame_vector(b)
                defect = (self.phi_derivative(z, y) - contact_metric(z, y) * XI
                    + ETA.evaluate(y) * z)
                if not defect.is_zero():
                    defects.append((c, b, defect))
        return defects

def contact_torsion(k, contact_units=False):
    """! @brief Torsion of the contact connection.

    In g units this is 4 eta ^ d eta = mu ^ dmu. With contact_units set it is eta ^ d eta =
    1/4 mu ^ dmu, measured with g~ = g/4.

    @exception PreconditionError k is not 1; the structure is Sasakian only for k = 1.
    """
    k = as_scalar(k)
    if k != ONE:
        raise PreconditionError("the contact connection is defined for k = 1 only, got k = %s" % k)
    eta_d_eta = ETA.wedge(2 * fundamental_form())
    return eta_d_eta if contact_units else 4 * eta_d_eta

def contact_connection_defects():
    """! @brief Compare the contact connection with the characteristic connection at k = 1.

    Both connections are nabla^g + 1/2 T; they agree when their torsion forms agree and the
    contact connection then preserves phi.
    """
    lc = LeviCivitaConnection(CurvatureSpec.constant(1))
    characteristic = CharacteristicConnection(lc)
    contact = CharacteristicConnection(lc, contact_torsion(1))
    defects = []
    if contact.torsion != characteristic.torsion:
        defects.append(('torsion', contact.torsion - characteristic.torsion))
    for a in range(DIMENSION):
        if torsion_endo(contact.torsion, a) != characteristic.endo(a):
            defects.append(('endo', a))
        value = contact.nabla(a, PHI)
        if not value.is_zero():
            defects.append(('phi', a, value))
    return defects
