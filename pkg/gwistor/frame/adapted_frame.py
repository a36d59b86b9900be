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
from collections import (OrderedDict, namedtuple)

from ..algebra.scalar import (ZERO, HALF, normalize)
from ..algebra.forms import (AltForm, volume_form)
from ..algebra.vectors import (AmbientVector, U_INDEX)
from ..core.exceptions import UnknownFormError

LOG = logging.getLogger(__name__)

## @brief Action of theta on the ambient basis; theta vanishes on e4, e5, e6 and U.
THETA_TABLE = {0: U_INDEX, 1: 4, 2: 5, 3: 6}

## @brief Action of the metric transpose of theta; it vanishes on the horizontal basis.
THETA_T_TABLE = {4: 1, 5: 2, 6: 3, U_INDEX: 0}

## @brief Indices of the horizontal frame vectors.
HORIZONTAL = (0, 1, 2, 3)

## @brief Indices of the vertical frame vectors tangent to the sphere bundle.
VERTICAL = (4, 5, 6)

def frame_vector(index):
    return AmbientVector.basis(index)

def _apply_table(table, vector):
    components = [ZERO] * len(vector)
    for source, target in table.items():
        components[target] = components[target] + vector[source]
    return AmbientVector(components)

def theta(vector):
    """! @brief The map identifying horizontal with vertical directions, e_0 -> U."""
    return _apply_table(THETA_TABLE, vector)

def theta_t(vector):
    return _apply_table(THETA_T_TABLE, vector)

def mu_of(vector):
    """! @brief mu(X) = <U, theta X>, the e_0 component of X."""
    return theta(vector)[U_INDEX]

def beta(x, y):
    """! @brief beta(X, Y) = <theta X, Y> - <theta Y, X>."""
    return normalize(theta(x).dot(y) - theta(y).dot(x))

def covector(index):
    return AltForm.monomial(index)

MU = AltForm.monomial(0)
DMU = AltForm({(4, 1): 1, (5, 2): 1, (6, 3): 1})
VOL = AltForm.monomial(0, 1, 2, 3)
ALPHA = AltForm.monomial(4, 5, 6)
ALPHA1 = AltForm({(1, 5, 6): 1, (2, 6, 4): 1, (3, 4, 5): 1})
ALPHA2 = AltForm({(1, 2, 6): 1, (2, 3, 4): 1, (3, 1, 5): 1})
ALPHA3 = AltForm.monomial(1, 2, 3)
PHI = ALPHA - MU.wedge(DMU) - ALPHA2
STAR_PHI = VOL - HALF * DMU.wedge(DMU) - MU.wedge(ALPHA1)

## @brief Volume form of the sphere bundle, e^0123456.
VOL_SM = volume_form()

## @brief Named global forms, in catalog order.
CATALOG = OrderedDict([
    ('mu', MU),
    ('dmu', DMU),
    ('vol', VOL),
    ('alpha', ALPHA),
    ('alpha1', ALPHA1),
    ('alpha2', ALPHA2),
    ('alpha3', ALPHA3),
    ('phi', PHI),
    ('star_phi', STAR_PHI),
    ])

def named_form(name):
    """! @brief Return a catalog form by name.

    @exception UnknownFormError No form of that name exists.
    """
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownFormError("unknown form '%s'" % name)

## @brief An identity between two forms, with a check id and the statement it anchors to.
StructureIdentity = namedtuple('StructureIdentity', 'id anchor lhs rhs')

def structure_identities():
    """! @brief The basic structure equations relating the catalog forms."""
    dmu2 = DMU.wedge(DMU)
    dmu3 = dmu2.wedge(DMU)
    alphas = [ALPHA, ALPHA1, ALPHA2]
    return [
        StructureIdentity('structure.star_alpha', "*alpha = vol",
            ALPHA.hodge(), VOL),
        StructureIdentity('structure.vol_mu_alpha3', "vol = mu ^ alpha3 (pullback of vol_M)",
            VOL, MU.wedge(ALPHA3)),
        StructureIdentity('structure.star_alpha1', "*alpha1 = -mu ^ alpha2",
            ALPHA1.hodge(), -MU.wedge(ALPHA2)),
        StructureIdentity('structure.star_alpha2', "*alpha2 = mu ^ alpha1",
            ALPHA2.hodge(), MU.wedge(ALPHA1)),
        StructureIdentity('structure.star_dmu', "*dmu = 1/2 mu ^ (dmu)^2",
            DMU.hodge(), HALF * MU.wedge(dmu2)),
        StructureIdentity('structure.star_dmu2', "*(dmu)^2 = 2 mu ^ dmu",
            dmu2.hodge(), 2 * MU.wedge(DMU)),
        StructureIdentity('structure.dmu3_mu', "(dmu)^3 ^ mu = 6 Vol",
            dmu3.wedge(MU), 6 * VOL_SM),
        StructureIdentity('structure.alpha1_alpha2', "alpha1 ^ alpha2 = 3 *mu",
            ALPHA1.wedge(ALPHA2), 3 * MU.hodge()),
        StructureIdentity('structure.star_mu_dmu3', "3 *mu = 1/2 (dmu)^3",
            3 * MU.hodge(), HALF * dmu3),
        StructureIdentity('structure.vanishing_products',
            "dmu ^ alpha_i = dmu ^ *alpha_i = alpha_0 ^ alpha_i = 0 for i = 0, 1, 2",
            sum((DMU.wedge(a).norm_squared() + DMU.wedge(a.hodge()).norm_squared()
                + ALPHA.wedge(a).norm_squared() for a in alphas), ZERO) * VOL_SM,
            AltForm.zero()),
        ]

def beta_defects():
    """! @brief Frame pairs (a, b) where beta(e_a, e_b) differs from -dmu(e_a, e_b)."""
    defects = []
    for a in range(7):
        for b in range(7):
            value = normalize(beta(frame_vector(a), frame_vector(b)) + DMU.evaluate(a, b))
            if value != 0:
                defects.append((a, b, value))
    return defects
