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
import random
import threading
from collections import OrderedDict
from functools import partial
from itertools import combinations, product

import sympy

from ..algebra.scalar import (K, LAMBDA, ZERO, HALF, normalize, roots_in_k, common_factor,
    factor_text)
from ..algebra.forms import (AltForm, DIMENSION, sort_with_sign, monomial_basis)
from ..algebra.vectors import (AmbientVector, SkewEndo)
from ..core.exceptions import (CocalibrationError, GradeError, RangeError, UsageError)
from ..frame.adapted_frame import (frame_vector, theta, theta_t, mu_of, structure_identities,
    beta_defects, CATALOG, MU, DMU, VOL, ALPHA, ALPHA1, ALPHA2, PHI, STAR_PHI, VOL_SM)
from ..frame import octonion
from ..geometry.curvature import (CurvatureSpec, normalize_riemann)
from ..geometry.connection import (LeviCivitaConnection, generator_derivative_defects)
from ..geometry.torsion import (CharacteristicConnection, characteristic_torsion,
    constant_curvature_torsion, einstein_torsion, strong_torsion_form)
from ..geometry import decomposition
from ..geometry.curvature_operator import (CurvatureOperator, FLAT_TORSION,
    flat_levi_civita_operator, flat_sphere_display, flat_characteristic_operator)
from ..contact.structure import (ContactStructure, contact_torsion, contact_connection_defects)
from ..contact.ricci import (RicciModel, ricci_matrix)
from ..homogeneous.lie import (LieElement, jacobi_defect)
from ..homogeneous.stiefel import StiefelModel
from ..utility.sequencer import CheckSequence
from .report import (CheckResult, CheckReport)

LOG = logging.getLogger(__name__)

## @brief Suite names in the order 'all' runs them.
SUITE_NAMES = ('structure', 'properties', 'connection', 'torsion', 'flat', 'contact', 'stiefel')

## @brief Name selecting every suite.
ALL_SUITES = 'all'

## @brief Matrix sizes used by the Stiefel checks that sweep l.
STIEFEL_SWEEP = (4, 5, 6, 7)

class VerificationContext(object):
    """! @brief Parameters and shared connections for one verification run.

    Connections are built on first use under a reentrant lock, so checks may run on worker
    threads and a factory may request the connections it is built from.
    """

    def __init__(self, k=K, random_seed=1729, sample_count=100, quaternion_samples=50,
            contact_m=4, convention=octonion.ACCEPTED_CONVENTION):
        self.k = k
        self.random_seed = random_seed
        self.sample_count = sample_count
        self.quaternion_samples = quaternion_samples
        self.contact_m = contact_m
        self.convention = convention
        self._cache = {}
        self._lock = threading.RLock()

    @classmethod
    def from_session(cls, session):
        options = session.options
        return cls(k=session.k,
            random_seed=options.get('random_seed'),
            sample_count=options.get('sample_count'),
            quaternion_samples=options.get('quaternion_samples'),
            contact_m=options.get('contact.m'),
            convention=options.get('octonion.convention'))

    @property
    def is_symbolic(self):
        return self.k == K

    def _cached(self, key, factory):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    def connection(self, k=None):
        """! @brief Levi-Civita connection over constant curvature k, default the run's k."""
        k = self.k if k is None else sympy.sympify(k)
        return self._cached(('lc', k), lambda: LeviCivitaConnection(CurvatureSpec.constant(k)))

    def characteristic(self, k=None):
        k = self.k if k is None else sympy.sympify(k)
        return self._cached(('ch', k), lambda: CharacteristicConnection(self.connection(k)))

    def general_connection(self, einstein=False):
        return self._cached(('general', einstein),
            lambda: LeviCivitaConnection(CurvatureSpec.symbolic(einstein=einstein)))

    def stiefel(self, l):
        return self._cached(('stiefel', l), lambda: StiefelModel(l))

    def rng(self, salt):
        return random.Random("%s:%s" % (self.random_seed, salt))

def _format_item(item):
    if isinstance(item, tuple):
        return "(%s)" % ", ".join(_format_item(x) for x in item)
    return str(item)

def _format_defects(defects, limit=3):
    text = "; ".join(_format_item(d) for d in defects[:limit])
    if len(defects) > limit:
        text += "; ... (%d total)" % len(defects)
    return text

def outcome(check_id, anchor, defect, detail=None):
    """! @brief Build a CheckResult from a defect that is zero exactly when the check passes.

    @param defect A form, vector, curvature operator, scalar, or list of defect entries.
    """
    if isinstance(defect, (AltForm, AmbientVector, CurvatureOperator, SkewEndo, LieElement)):
        passed = defect.is_zero()
        witness = str(defect)
    elif isinstance(defect, (list, tuple)):
        passed = not defect
        witness = _format_defects(list(defect))
    elif isinstance(defect, sympy.MatrixBase):
        passed = all(normalize(c) == 0 for c in defect)
        witness = str(defect.tolist())
    else:
        defect = normalize(defect)
        passed = defect == 0
        witness = str(defect)
    if not passed:
        LOG.info("Check %s failed: %s", check_id, witness)
    return CheckResult(check_id, anchor, passed, witness, detail)

def _differences(pairs):
    """! @brief Entries (label, lhs - rhs) for every labelled pair that differs."""
    result = []
    for label, lhs, rhs in pairs:
        difference = lhs - rhs
        if isinstance(difference, (AltForm, AmbientVector, CurvatureOperator)):
            if not difference.is_zero():
                result.append((label, difference))
        elif isinstance(difference, sympy.MatrixBase):
            if any(normalize(c) != 0 for c in difference):
                result.append((label, difference.tolist()))
        elif normalize(difference) != 0:
            result.append((label, normalize(difference)))
    return result

# Structure suite

def check_structure_identities(ctx):
    return [outcome(identity.id, identity.anchor, identity.lhs - identity.rhs)
        for identity in structure_identities()]

def check_beta(ctx):
    return outcome('structure.beta', "beta(X, Y) = <theta X, Y> - <theta Y, X> equals -dmu",
        beta_defects())

def check_theta(ctx):
    defects = []
    e0_sharp = theta_t(AmbientVector({7: 1}))
    for a in range(DIMENSION):
        x = frame_vector(a)
        defects += _differences([
            (('theta theta', a), theta(theta(x)), AmbientVector()),
            (('theta^t theta', a), theta_t(theta(x)), x.horizontal),
            (('theta theta^t', a), theta(theta_t(x)), x.vertical),
            (('mu', a), AltForm.monomial(a).sharp().dot(e0_sharp), mu_of(x)),
            ])
    return outcome('structure.theta',
        "theta^2 = 0, theta^t theta and theta theta^t project onto H and V, mu(X) = <theta^t U, X>",
        defects)

def check_phi_monomials(ctx):
    defects = []
    if len(PHI.terms) != 7 or any(abs(c) != 1 for c in PHI.terms.values()):
        defects.append(('monomials', PHI))
    defects += _differences([
        ('<phi, phi>', PHI.norm_squared(), 7),
        ('phi ^ *phi', PHI.wedge(STAR_PHI), 7 * VOL_SM),
        ('*phi', PHI.hodge(), STAR_PHI),
        ])
    return outcome('structure.phi',
        "phi = alpha - mu ^ dmu - alpha2 has seven unit monomials and *phi = vol - 1/2 dmu^2 - mu ^ alpha1",
        defects)

def check_octonion_phi(ctx):
    matches = octonion.matching_conventions(PHI)
    defects = [] if ctx.convention in matches else [('matching conventions', tuple(matches))]
    return outcome('structure.octonion_phi', "phi(x, y, z) = <xy, z> on the imaginary fiber octonions",
        defects, detail="conventions reproducing phi: %s" % ", ".join(matches))

def check_octonion_table(ctx):
    generated = octonion.multiplication_table(ctx.convention)
    golden = octonion.load_golden_table()
    defects = [(octonion.OCTONION_BASIS[i], octonion.OCTONION_BASIS[j])
        for i, j in product(range(8), range(8)) if generated[i][j] != golden[i][j]]
    return outcome('structure.octonion_table', "fiber octonion multiplication table", defects)

def check_octonion_norm(ctx):
    return outcome('structure.octonion_norm', "|pq| = |p| |q| for fiber octonions",
        octonion.norm_defects(ctx.sample_count, ctx.random_seed, ctx.convention))

def check_quaternions(ctx):
    e = [frame_vector(i) for i in range(4)]
    defects = _differences([
        ('u e1', octonion.quaternion_mult(e[0], e[1]), e[1]),
        ('e1 e1', octonion.quaternion_mult(e[1], e[1]), -e[0]),
        ('e1 e2', octonion.quaternion_mult(e[1], e[2]), e[3]),
        ('e2 e3', octonion.quaternion_mult(e[2], e[3]), e[1]),
        ])
    defects += octonion.quaternion_norm_defects(ctx.quaternion_samples, ctx.random_seed)
    return outcome('structure.quaternion',
        "(l1 u + X1)(l2 u + X2) = (l1 l2 - <X1, X2>) u + l1 X2 + l2 X1 + X1 x X2 is normed", defects)

# Properties suite

def _subsets():
    for grade in range(DIMENSION + 1):
        for indices in combinations(range(DIMENSION), grade):
            yield indices

def check_graded_commutativity(ctx):
    defects = []
    subsets = list(_subsets())
    for left in subsets:
        for right in subsets:
            s1, _ = sort_with_sign(left + right)
            s2, _ = sort_with_sign(right + left)
            if s1 != (-1) ** (len(left) * len(right)) * s2:
                defects.append((left, right))
    return outcome('properties.graded_commutativity', "a ^ b = (-1)^(pq) b ^ a", defects)

def check_hodge_involution(ctx):
    defects = [indices for indices in _subsets()
        if AltForm.monomial(*indices).hodge().hodge() != AltForm.monomial(*indices)]
    return outcome('properties.hodge_involution', "** = 1 in dimension 7", defects)

def check_hodge_inner(ctx):
    defects = []
    for grade in range(DIMENSION + 1):
        basis = list(monomial_basis(grade))
        for a in basis:
            for b in basis:
                if a.wedge(b.hodge()) != a.inner(b) * VOL_SM:
                    defects.append((a, b))
    return outcome('properties.hodge_inner', "a ^ *b = <a, b> Vol", defects)

def _random_monomial(rng, grade=None):
    if grade is None:
        grade = rng.randint(0, DIMENSION)
    return AltForm.monomial(*sorted(rng.sample(range(DIMENSION), grade)))

def check_interior_antiderivation(ctx):
    rng = ctx.rng('interior')
    defects = []
    for _ in range(ctx.sample_count):
        p = rng.randint(0, DIMENSION)
        a = _random_monomial(rng, p)
        b = _random_monomial(rng)
        v = rng.randrange(DIMENSION)
        lhs = a.wedge(b).interior(v)
        rhs = a.interior(v).wedge(b) + (-1) ** p * a.wedge(b.interior(v))
        if lhs != rhs:
            defects.append((a, b, v))
    return outcome('properties.interior_antiderivation',
        "X _| (a ^ b) = (X _| a) ^ b + (-1)^p a ^ (X _| b)", defects)

def _random_skew(rng):
    matrix = sympy.zeros(DIMENSION, DIMENSION)
    for i, j in combinations(range(DIMENSION), 2):
        value = octonion.random_rational(rng)
        matrix[i, j] = value
        matrix[j, i] = -value
    return SkewEndo(matrix)

def check_endo_derivation(ctx):
    rng = ctx.rng('endo')
    defects = []
    for _ in range(ctx.sample_count):
        endo = _random_skew(rng)
        a = _random_monomial(rng, rng.randint(1, 3))
        b = _random_monomial(rng, rng.randint(1, 3))
        if a.wedge(b).endo_action(endo) != a.endo_action(endo).wedge(b) + a.wedge(b.endo_action(endo)):
            defects.append(('leibniz', a, b))
        # (B.a)(X1, ..., Xp) = -sum_i a(X1, ..., B Xi, ..., Xp)
        vectors = [frame_vector(rng.randrange(DIMENSION)) for _ in range(a.grade)]
        direct = ZERO
        for i in range(len(vectors)):
            moved = list(vectors)
            moved[i] = endo.apply(vectors[i])
            direct -= a.evaluate(*moved)
        if normalize(a.endo_action(endo).evaluate(*vectors) - direct) != 0:
            defects.append(('evaluation', a))
    return outcome('properties.endo_derivation',
        "B.(a ^ b) = (B.a) ^ b + a ^ (B.b) and agrees with multilinear evaluation", defects)

def check_flat_sharp(ctx):
    defects = []
    u_flat = AltForm.flat(AmbientVector({7: 1}))
    for a in range(DIMENSION):
        x = frame_vector(a)
        if AltForm.monomial(a).sharp() != x:
            defects.append(('sharp', a))
        if AltForm.flat(x) != AltForm.monomial(a):
            defects.append(('flat', a))
        if u_flat.evaluate(x) != 0:
            defects.append(('U flat', a))
    try:
        DMU.sharp()
        defects.append(('sharp of a 2-form', DMU))
    except GradeError:
        pass
    return outcome('properties.flat_sharp',
        "flat and sharp are inverse on tangent directions and U flat vanishes on them", defects)

def check_scalar_normalize(ctx):
    samples = [(K - 1) * (K + 2), (K - 2) * HALF + K / 2, LAMBDA * (K - 1) ** 2, sympy.Rational(6, 4)]
    defects = [s for s in samples if normalize(normalize(s)) != normalize(s)]
    return outcome('properties.scalar_normalize', "normalization is idempotent", defects)

def check_d_squared(ctx):
    connection = ctx.connection()
    defects = [(name, connection.ext_d(connection.ext_d(form))) for name, form in CATALOG.items()
        if not connection.ext_d(connection.ext_d(form)).is_zero()]
    return outcome('properties.d_squared', "d^2 = 0 on the named forms", defects)

# Connection suite

def check_curvature_vector(ctx):
    spec = ctx.connection().spec
    defects = []
    for a, b in product(range(DIMENSION), range(DIMENSION)):
        x, y = frame_vector(a), frame_vector(b)
        expected = spec.k * (mu_of(y) * theta(x) - mu_of(x) * theta(y))
        defects += _differences([((a, b), spec.curvature_vector(x, y), expected)])
    return outcome('connection.curvature_vector', "R(X, Y) = k (mu(Y) theta X - mu(X) theta Y)",
        defects)

def check_a_tensor(ctx):
    spec = ctx.connection().spec
    k = spec.k
    defects = []
    for a, b in product(range(DIMENSION), range(DIMENSION)):
        x, y = frame_vector(a), frame_vector(b)
        expected = (k / 2) * ((theta(x).dot(y) + theta(y).dot(x)) * frame_vector(0)
            - mu_of(x) * theta_t(y) - mu_of(y) * theta_t(x))
        defects += _differences([((a, b), spec.a_tensor(x, y), expected)])
    return outcome('connection.a_tensor',
        "A(X, Y) = k/2 ((<theta X, Y> + <theta Y, X>) e0 - mu(X) theta^t Y - mu(Y) theta^t X)",
        defects)

def check_generator_derivatives(ctx):
    return outcome('connection.generator_derivatives',
        "closed forms of nabla_X of theta^t U, vol, alpha, mu, dmu, alpha1, alpha2, alpha3 and phi",
        generator_derivative_defects(ctx.connection()))

def check_metric(ctx):
    connection = ctx.connection()
    return outcome('connection.metric', "<nabla_X Y, Z> + <Y, nabla_X Z> = 0",
        connection.metric_defects() + connection.tangency_defects())

def check_structure_equations(ctx):
    defects = [('constant',) + d for d in ctx.connection().structure_defects()]
    defects += [('general',) + d for d in ctx.general_connection().structure_defects()]
    return outcome('connection.structure_equations',
        "de0 = dmu, dei = mu ^ e(i+3), de(i+3) = sum R_ac0i e^ac", defects)

def check_leibniz(ctx):
    connection = ctx.connection()
    product_form = MU.wedge(ALPHA1)
    defects = []
    for a in range(DIMENSION):
        derivative = connection.nabla(a, product_form)
        defects += _differences([
            (('product', a), derivative, connection.nabla(a, MU).wedge(ALPHA1)
                + MU.wedge(connection.nabla(a, ALPHA1))),
            (('alpha2 = *(mu ^ alpha1)', a), connection.nabla(a, ALPHA2), derivative.hodge()),
            ])
    return outcome('connection.leibniz', "nabla is a derivation commuting with *", defects)

def check_d_mu(ctx):
    defects = _differences([
        ('constant', ctx.connection().ext_d(MU), DMU),
        ('general', ctx.general_connection().ext_d(MU), DMU),
        ])
    return outcome('connection.d_mu', "d mu = e41 + e52 + e63", defects)

def check_d_alpha(ctx):
    general = ctx.general_connection()
    connection = ctx.connection()
    defects = _differences([
        ('general', general.ext_d(ALPHA), general.spec.riem_alpha()),
        ('constant', connection.ext_d(ALPHA), -connection.spec.k * MU.wedge(ALPHA1)),
        ])
    return outcome('connection.d_alpha', "d alpha = R alpha, equal to -k mu ^ alpha1 for constant k",
        defects)

def check_d_alpha2(ctx):
    pairs = []
    for label, connection in (('general', ctx.general_connection()), ('constant', ctx.connection())):
        expected = 2 * MU.wedge(ALPHA1) - connection.spec.rbar() * VOL
        pairs.append((label, connection.ext_d(ALPHA2), expected))
    return outcome('connection.d_alpha2', "d alpha2 = 2 mu ^ alpha1 - rbar vol", _differences(pairs))

def check_d_phi(ctx):
    general = ctx.general_connection()
    spec = general.spec
    connection = ctx.connection()
    k = connection.spec.k
    dmu2 = DMU.wedge(DMU)
    defects = _differences([
        ('general', general.ext_d(PHI),
            spec.riem_alpha() + spec.rbar() * VOL - dmu2 - 2 * MU.wedge(ALPHA1)),
        ('constant', connection.ext_d(PHI), 3 * k * VOL - dmu2 - (k + 2) * MU.wedge(ALPHA1)),
        ])
    return outcome('connection.d_phi', "d phi = R alpha + rbar vol - dmu^2 - 2 mu ^ alpha1", defects)

def check_d_star_phi(ctx):
    general = ctx.general_connection()
    defects = _differences([
        ('general', general.ext_d(STAR_PHI), -general.spec.rho().wedge(VOL)),
        ('constant', ctx.connection().ext_d(STAR_PHI), AltForm.zero()),
        ])
    return outcome('connection.d_star_phi', "d *phi = -rho ^ vol, zero for constant k", defects)

def check_codiff(ctx):
    connection = ctx.connection()
    defects = _differences([
        ('delta phi', connection.codiff(PHI), AltForm.zero()),
        ('delta mu', connection.codiff(MU), AltForm.zero()),
        ])
    return outcome('connection.codiff', "delta phi = 0 and delta mu = 0 for constant k", defects)

def check_rho_rbar(ctx):
    spec = ctx.connection().spec
    rho, rbar = spec.rho_rbar()
    defects = _differences([('rho', rho, AltForm.zero()), ('rbar', rbar, 3 * spec.k),
        ('R alpha', spec.riem_alpha(), -spec.k * MU.wedge(ALPHA1))])
    return outcome('connection.rho_rbar', "rho = 0, rbar = 3k and R alpha = -k mu ^ alpha1", defects)

def check_inner_dphi(ctx):
    connection = ctx.connection()
    k = connection.spec.k
    defects = _differences([
        ('<dphi, *phi>', connection.ext_d(PHI).inner(STAR_PHI), 2 * (3 * k + 6)),
        ('<phi, phi>', PHI.norm_squared(), 7),
        ])
    return outcome('connection.inner_dphi', "<dphi, *phi> = 2(lambda + 6) with lambda = 3k", defects)

def check_curvature_symmetries(ctx):
    defects = []
    for i, j, k, l in product(range(4), repeat=4):
        value = normalize_riemann(i, j, k, l)
        for label, other in (('ij', -normalize_riemann(j, i, k, l)),
                ('kl', -normalize_riemann(i, j, l, k)), ('pairs', normalize_riemann(k, l, i, j))):
            if normalize(value - other) != 0:
                defects.append((label, (i, j, k, l)))
        cyclic = normalize(value + normalize_riemann(j, k, i, l) + normalize_riemann(k, i, j, l))
        if cyclic != 0:
            defects.append(('bianchi', (i, j, k, l)))
    return outcome('connection.curvature_symmetries',
        "R_ijkl = -R_jikl = -R_ijlk = R_klij and the first Bianchi identity", defects)

def check_einstein_reduction(ctx):
    spec = ctx.general_connection(einstein=True).spec
    defects = [((j, k), spec.ricci(j, k)) for j in range(4) for k in range(4)
        if normalize(spec.ricci(j, k) - (LAMBDA if j == k else 0)) != 0]
    if not spec.rho().is_zero():
        defects.append(('rho', spec.rho()))
    return outcome('connection.einstein_reduction', "Ric = lambda g on the base and rho = 0",
        defects)

def check_constant_substitution(ctx):
    general = ctx.general_connection()
    constant = ctx.connection(K)
    pairs = [(name, general.spec.substitute_constant(general.ext_d(form)), constant.ext_d(form))
        for name, form in (('phi', PHI), ('star_phi', STAR_PHI), ('alpha', ALPHA), ('alpha2', ALPHA2))]
    return outcome('connection.constant_substitution',
        "R_ijkl = k(d_il d_jk - d_ik d_jl) specializes the general structure equations",
        _differences(pairs))

# Torsion suite

def check_characteristic_torsion(ctx):
    connection = ctx.connection()
    return outcome('torsion.characteristic_torsion', "T = 2(k - 1) alpha + k mu ^ dmu",
        characteristic_torsion(connection) - constant_curvature_torsion(connection.spec.k))

def check_einstein_torsion(ctx):
    einstein = ctx.general_connection(einstein=True)
    constant_spec = ctx.connection().spec
    defects = _differences([
        ('einstein', characteristic_torsion(einstein), einstein_torsion(einstein.spec)),
        ('lambda = 3k', einstein_torsion(constant_spec), constant_curvature_torsion(constant_spec.k)),
        ])
    return outcome('torsion.einstein_torsion',
        "T = *R alpha + (2 lambda - 6)/3 alpha + lambda/3 (mu ^ dmu + alpha2)", defects)

def check_cocalibration(ctx):
    try:
        characteristic_torsion(ctx.general_connection())
        defects = [('non-Einstein base accepted',)]
    except CocalibrationError:
        defects = []
    return outcome('torsion.cocalibration',
        "a characteristic connection needs d *phi = 0, an Einstein base", defects)

def check_codiff_torsion(ctx):
    characteristic = ctx.characteristic()
    return outcome('torsion.codiff', "delta T = 0",
        characteristic.levi_civita.codiff(characteristic.torsion))

def check_torsion_skew(ctx):
    return outcome('torsion.skew', "T_X is skew-symmetric for every X",
        ctx.characteristic().skew_defects())

def check_nabla_ch_phi(ctx):
    characteristic = ctx.characteristic()
    defects = [(a, characteristic.nabla(a, PHI)) for a in range(DIMENSION)
        if not characteristic.nabla(a, PHI).is_zero()]
    return outcome('torsion.nabla_ch_phi', "nabla^c phi = 0", defects)

def check_nabla_ch_metric(ctx):
    return outcome('torsion.metric', "nabla^c g = 0", ctx.characteristic().metric_defects())

def check_parallel_torsion_formula(ctx):
    return outcome('torsion.parallel_torsion_formula',
        "nabla^c_X T = k(k - 1) X^v _| (mu ^ alpha1 - 1/2 dmu^2)",
        ctx.characteristic().parallel_torsion_defects(ctx.connection().spec.k))

def check_proof_formula(ctx):
    characteristic = ctx.characteristic()
    defects = _differences([(a, characteristic.proof_formula(a),
        characteristic.nabla(a, characteristic.torsion)) for a in range(DIMENSION)])
    return outcome('torsion.proof_formula',
        "nabla^c_X T = nabla^g_X T - 1/2 sum_j beta_j ^ (e_j _| T)", defects)

def _parallel_torsion_factor(characteristic):
    """! @brief Common factor in k of every component of nabla^c T, over all directions."""
    torsion = characteristic.torsion
    return common_factor(value for a in range(DIMENSION)
        for value in characteristic.nabla(a, torsion).terms.values())

def _format_roots(roots):
    if roots is None:
        return "every k"
    return "{%s}" % ", ".join(str(r) for r in roots)

def check_parallel_torsion(ctx):
    """! @brief The check whose outcome depends on the chosen k."""
    anchor = "nabla^c T = 0 if and only if k = 0 or k = 1"
    factor = _parallel_torsion_factor(ctx.characteristic(K))
    roots = roots_in_k(factor)
    if ctx.is_symbolic:
        defects = [] if roots == [0, 1] else [('roots', _format_roots(roots))]
        return outcome('torsion.parallel_torsion', anchor, defects,
            detail="factor %s, roots %s" % (factor_text(factor), _format_roots(roots)))
    found = ctx.characteristic().parallel_torsion_witness()
    value = normalize(factor.subs(K, ctx.k))
    detail = "factor %s = %s" % (factor_text(factor), value)
    if found is None:
        return CheckResult('torsion.parallel_torsion', anchor, True, detail=detail)
    direction, form = found
    LOG.info("Torsion is not parallel along e%d: %s", direction, form)
    return CheckResult('torsion.parallel_torsion', anchor, False, str(form),
        detail="direction e%d; %s" % (direction, detail))

def check_strong_torsion(ctx):
    characteristic = ctx.characteristic()
    k = ctx.connection().spec.k
    defects = _differences([('dT', characteristic.levi_civita.ext_d(characteristic.torsion),
        strong_torsion_form(k))])
    symbolic = strong_torsion_form(K)
    root_sets = [set(roots_in_k(c)) for c in symbolic.terms.values()]
    common = sorted(set.intersection(*root_sets))
    if common != [0]:
        defects.append(('closed for k in', tuple(common)))
    return outcome('torsion.strong_torsion', "dT = k dmu^2 - 2k(k - 1) mu ^ alpha1, closed iff k = 0",
        defects, detail="dT = 0 iff k in {%s}" % ", ".join(str(c) for c in common))

def _split_defects(label, omega, coeff, tau):
    split = decomposition.lambda3_split(omega)
    wedge_phi, wedge_star = decomposition.purity_defects(split.in27)
    return _differences([
        ((label, 'coefficient'), split.coeff1, coeff),
        ((label, 'in7'), split.in7, AltForm.zero()),
        ((label, 'in27'), split.in27, tau),
        ((label, 'in27 ^ phi'), wedge_phi, AltForm.zero()),
        ((label, 'in27 ^ *phi'), wedge_star, AltForm.zero()),
        ((label, 'reconstruction'), split.coeff1 * PHI + split.in7 + split.in27, omega),
        ])

def check_lambda3_dphi(ctx):
    connection = ctx.connection()
    k = connection.spec.k
    return outcome('torsion.lambda3_dphi', "dphi = 6/7 (k + 2) *phi + *tau3",
        _split_defects('*dphi', connection.ext_d(PHI).hodge(), decomposition.dphi_coefficient(k),
            decomposition.tau3_dphi(k)))

def check_lambda3_torsion(ctx):
    characteristic = ctx.characteristic()
    k = ctx.connection().spec.k
    return outcome('torsion.lambda3_torsion', "T = -(k + 2)/7 phi + tau3",
        _split_defects('T', characteristic.torsion, decomposition.torsion_coefficient(k),
            decomposition.tau3_dphi(k)))

def check_lambda3_dtorsion(ctx):
    characteristic = ctx.characteristic()
    k = ctx.connection().spec.k
    dtorsion = characteristic.levi_civita.ext_d(characteristic.torsion)
    return outcome('torsion.lambda3_dtorsion', "dT = 6/7 k(k - 2) *phi + *tau3",
        _split_defects('*dT', dtorsion.hodge(), decomposition.dtorsion_coefficient(k),
            decomposition.tau3_dtorsion(k)))

def check_pure_dphi(ctx):
    connection = ctx.connection(-2)
    split = decomposition.lambda3_split(connection.ext_d(PHI).hodge())
    defects = _differences([('coefficient', split.coeff1, 0), ('in7', split.in7, AltForm.zero())])
    roots = roots_in_k(decomposition.dphi_coefficient(K))
    if roots != [-2]:
        defects.append(('roots', tuple(roots)))
    return outcome('torsion.pure_dphi', "dphi lies in the 27-dimensional summand iff k = -2",
        defects)

# Flat suite

def check_flat_torsion(ctx):
    return outcome('flat.torsion', "T = -2 alpha over a flat base",
        characteristic_torsion(ctx.connection(0)) - FLAT_TORSION)

def check_flat_gauss(ctx):
    operator = flat_levi_civita_operator()
    return outcome('flat.gauss',
        "R^g = -(e45 (x) e45 + e56 (x) e56 + e64 (x) e64) on R^4 x S^3",
        _differences([('R^g', operator, flat_sphere_display())]) + operator.symmetry_defects())

def check_flat_torsion_square(ctx):
    return outcome('flat.torsion_square', "1/4 sum (e_i _| T) (x) (e_i _| T) = -R^g",
        CurvatureOperator.torsion_square(FLAT_TORSION) + flat_levi_civita_operator())

def check_flat_torsion_wedge(ctx):
    return outcome('flat.torsion_wedge', "sum (e_i _| T) ^ (e_i _| T) = 0",
        CurvatureOperator.torsion_wedge(FLAT_TORSION))

def check_flat_characteristic(ctx):
    return outcome('flat.characteristic_curvature', "R^c = 0 over a flat base",
        flat_characteristic_operator())

def check_flat_ricci(ctx):
    return outcome('flat.ricci', "Ricci contraction of R^g matches the Ricci formula at k = 0",
        flat_levi_civita_operator().ricci() - ricci_matrix(0, 4))

def check_flat_parallel(ctx):
    characteristic = ctx.characteristic(0)
    defects = [(a, characteristic.nabla(a, FLAT_TORSION)) for a in range(DIMENSION)
        if not characteristic.nabla(a, FLAT_TORSION).is_zero()]
    return outcome('flat.parallel_torsion', "nabla^c T = 0 over a flat base", defects)

# Contact suite

def _contact(ctx, k):
    return ctx._cached(('contact', k), lambda: ContactStructure(ctx.connection(k)))

def check_almost_contact(ctx):
    axioms = _contact(ctx, 1).axiom_defects()
    defects = [(name,) + tuple(entries[:1]) for name, entries in axioms.items() if entries]
    return outcome('contact.almost_contact',
        "eta(xi) = 1, phi_c^2 = -Id + eta (x) xi, g~(phi_c X, phi_c Y) = g~(X, Y) - eta(X) eta(Y)",
        defects)

def check_d_eta(ctx):
    return outcome('contact.d_eta', "d eta = 2F", _contact(ctx, 1).d_eta_defect())

def check_dmu_phi(ctx):
    return outcome('contact.dmu_phi', "dmu(X, Y) = g(X, phi_c Y)", ContactStructure.dmu_phi_defects())

def check_k_contact(ctx):
    roots = _contact(ctx, K).k_contact_roots()
    defects = [(a, tuple(r) if r is not None else None) for a, r in roots.items() if r != [1]]
    if not roots:
        defects.append(('no direction depends on k',))
    return outcome('contact.k_contact', "xi is Killing if and only if k = 1", defects,
        detail="nabla_X xi + phi_c X = (1 - k)(theta^t X + theta X - mu(X) U); roots {1}")

def check_sasakian(ctx):
    return outcome('contact.sasakian', "(nabla_Z phi_c) Y = g~(Z, Y) xi - eta(Y) Z at k = 1",
        _contact(ctx, 1).sasakian_defects())

def check_eta_einstein(ctx):
    model = RicciModel(ctx.contact_m)
    roots = model.eta_einstein_roots()
    expected = sorted(set([1, ctx.contact_m - 2]))
    defects = [] if roots == expected else [('roots', tuple(roots))]
    return outcome('contact.eta_einstein', "eta-Einstein if and only if k = 1 or k = m - 2",
        defects, detail="m = %d, roots {%s}" % (ctx.contact_m, ", ".join(str(r) for r in roots)))

def check_contact_ricci(ctx):
    m = ctx.contact_m
    result = RicciModel(m).contact_ricci()
    defects = _differences([('lambda + nu', result.lam + result.nu, 2 * (m - 1))])
    if m == 4:
        defects += _differences([('lambda', result.lam, 10), ('nu', result.nu, -4)])
    return outcome('contact.ricci', "Ric = lambda g~ + nu eta (x) eta with lambda + nu = 2n at k = 1",
        defects, detail="lambda = %s, nu = %s" % (result.lam, result.nu))

def check_contact_torsion(ctx):
    torsion = contact_torsion(1)
    defects = _differences([
        ('4 eta ^ d eta', torsion, MU.wedge(DMU)),
        ('characteristic', characteristic_torsion(ctx.connection(1)), torsion),
        ])
    return outcome('contact.torsion', "4 eta ^ d eta = mu ^ dmu = T at k = 1", defects)

def check_contact_connection(ctx):
    return outcome('contact.connection',
        "the contact connection with torsion eta ^ d eta is the characteristic connection at k = 1",
        contact_connection_defects())

# Stiefel suite

def _random_element(rng, l):
    return LieElement.from_coordinates(l, {(i, j): octonion.random_rational(rng)
        for i, j in combinations(range(1, l + 1), 2)})

def check_jacobi(ctx):
    defects = []
    for l in STIEFEL_SWEEP:
        rng = ctx.rng('jacobi:%d' % l)
        for _ in range(ctx.sample_count):
            triple = [_random_element(rng, l) for _ in range(3)]
            if not jacobi_defect(*triple).is_zero():
                defects.append((l, triple[0]))
    return outcome('stiefel.jacobi', "the Jacobi identity in so(l)", defects)

def check_reductive(ctx):
    defects = [(l,) + d for l in STIEFEL_SWEEP for d in ctx.stiefel(l).reductive_defects()]
    return outcome('stiefel.reductive', "[h, h] in h and [h, m] in m", defects)

def check_stiefel_skew(ctx):
    defects = [(l,) + d for l in STIEFEL_SWEEP for d in ctx.stiefel(l).skewness_defects()]
    return outcome('stiefel.torsion_skew', "T(X, Y, Z) = -<[X, Y]_m, Z> is totally skew", defects)

def check_holonomy(ctx):
    defects = []
    dimensions = []
    for l in STIEFEL_SWEEP:
        model = ctx.stiefel(l)
        result = model.holonomy_algebra()
        dimensions.append("l=%d: %d" % (l, result.dimension))
        if result.dimension != StiefelModel.expected_holonomy_dimension(l):
            defects.append((l, result.dimension))
        if result.killing_rank != model.reference_killing_rank():
            defects.append((l, 'killing rank', result.killing_rank))
    return outcome('stiefel.holonomy', "the holonomy of the canonical connection is SO(l - 2)",
        defects, detail="dimensions " + ", ".join(dimensions))

def check_bracket_identity(ctx):
    return outcome('stiefel.bracket_identity', "mu ^ dmu (X, Y, Z) = -<[X, Y], Z> on m",
        ctx.stiefel(5).bracket_identity_defect())

def check_frame_torsion(ctx):
    model = ctx.stiefel(5)
    return outcome('stiefel.frame_torsion',
        "the canonical torsion corresponds to T = mu ^ dmu at k = 1",
        model.frame_correspondence(model.torsion_form()) - characteristic_torsion(ctx.connection(1)))

def check_curvature_squares(ctx):
    model = ctx.stiefel(5)
    defect, gram = model.curvature_squares()
    defects = _differences([('R^c + sum S (x) S', defect, CurvatureOperator.zero())])
    image = model.curvature_image_dimension()
    if image != 3:
        defects.append(('image dimension', image))
    return outcome('stiefel.curvature_squares', "R^c = -sum_s S_s (x) S_s", defects,
        detail="Gram diagonal %s" % [gram[i, i] for i in range(gram.rows)])

def check_stiefel_ricci(ctx):
    model = ctx.stiefel(5)
    ricci = model.ricci()
    defects = _differences([('expected', ricci, model.expected_ricci()),
        ('k = 1, m = 4', ricci, ricci_matrix(1, 4))])
    return outcome('stiefel.ricci', "Ricci of SO(5)/SO(3) matches the Ricci formula at k = 1",
        defects, detail="diagonal %s" % [ricci[i, i] for i in range(ricci.rows)])

def check_holonomy_in_g2(ctx):
    return outcome('stiefel.holonomy_in_g2', "R^c(X, Y) fixes e0 and preserves phi",
        ctx.stiefel(5).holonomy_in_g2_defects())

## @brief Checks of each suite, in report order.
SUITES = OrderedDict([
    ('structure', [
        ('structure.identities', check_structure_identities),
        ('structure.beta', check_beta),
        ('structure.theta', check_theta),
        ('structure.phi', check_phi_monomials),
        ('structure.octonion_phi', check_octonion_phi),
        ('structure.octonion_table', check_octonion_table),
        ('structure.octonion_norm', check_octonion_norm),
        ('structure.quaternion', check_quaternions),
        ]),
    ('properties', [
        ('properties.graded_commutativity', check_graded_commutativity),
        ('properties.hodge_involution', check_hodge_involution),
        ('properties.hodge_inner', check_hodge_inner),
        ('properties.interior_antiderivation', check_interior_antiderivation),
        ('properties.endo_derivation', check_endo_derivation),
        ('properties.flat_sharp', check_flat_sharp),
        ('properties.scalar_normalize', check_scalar_normalize),
        ('properties.d_squared', check_d_squared),
        ]),
    ('connection', [
        ('connection.curvature_vector', check_curvature_vector),
        ('connection.a_tensor', check_a_tensor),
        ('connection.generator_derivatives', check_generator_derivatives),
        ('connection.metric', check_metric),
        ('connection.structure_equations', check_structure_equations),
        ('connection.leibniz', check_leibniz),
        ('connection.d_mu', check_d_mu),
        ('connection.d_alpha', check_d_alpha),
        ('connection.d_alpha2', check_d_alpha2),
        ('connection.d_phi', check_d_phi),
        ('connection.d_star_phi', check_d_star_phi),
        ('connection.codiff', check_codiff),
        ('connection.rho_rbar', check_rho_rbar),
        ('connection.inner_dphi', check_inner_dphi),
        ('connection.curvature_symmetries', check_curvature_symmetries),
        ('connection.einstein_reduction', check_einstein_reduction),
        ('connection.constant_substitution', check_constant_substitution),
        ]),
    ('torsion', [
        ('torsion.characteristic_torsion', check_characteristic_torsion),
        ('torsion.einstein_torsion', check_einstein_torsion),
        ('torsion.cocalibration', check_cocalibration),
        ('torsion.codiff', check_codiff_torsion),
        ('torsion.skew', check_torsion_skew),
        ('torsion.nabla_ch_phi', check_nabla_ch_phi),
        ('torsion.metric', check_nabla_ch_metric),
        ('torsion.parallel_torsion_formula', check_parallel_torsion_formula),
        ('torsion.proof_formula', check_proof_formula),
        ('torsion.parallel_torsion', check_parallel_torsion),
        ('torsion.strong_torsion', check_strong_torsion),
        ('torsion.lambda3_dphi', check_lambda3_dphi),
        ('torsion.lambda3_torsion', check_lambda3_torsion),
        ('torsion.lambda3_dtorsion', check_lambda3_dtorsion),
        ('torsion.pure_dphi', check_pure_dphi),
        ]),
    ('flat', [
        ('flat.torsion', check_flat_torsion),
        ('flat.gauss', check_flat_gauss),
        ('flat.torsion_square', check_flat_torsion_square),
        ('flat.torsion_wedge', check_flat_torsion_wedge),
        ('flat.characteristic_curvature', check_flat_characteristic),
        ('flat.ricci', check_flat_ricci),
        ('flat.parallel_torsion', check_flat_parallel),
        ]),
    ('contact', [
        ('contact.almost_contact', check_almost_contact),
        ('contact.d_eta', check_d_eta),
        ('contact.dmu_phi', check_dmu_phi),
        ('contact.k_contact', check_k_contact),
        ('contact.sasakian', check_sasakian),
        ('contact.eta_einstein', check_eta_einstein),
        ('contact.ricci', check_contact_ricci),
        ('contact.torsion', check_contact_torsion),
        ('contact.connection', check_contact_connection),
        ]),
    ('stiefel', [
        ('stiefel.jacobi', check_jacobi),
        ('stiefel.reductive', check_reductive),
        ('stiefel.torsion_skew', check_stiefel_skew),
        ('stiefel.holonomy', check_holonomy),
        ('stiefel.bracket_identity', check_bracket_identity),
        ('stiefel.frame_torsion', check_frame_torsion),
        ('stiefel.curvature_squares', check_curvature_squares),
        ('stiefel.ricci', check_stiefel_ricci),
        ('stiefel.holonomy_in_g2', check_holonomy_in_g2),
        ]),
    ])

def suite_names(name):
    """! @brief Expand a suite selection into suite names.

    @exception UsageError The name is neither a suite nor 'all'.
    """
    if name == ALL_SUITES:
        return list(SUITE_NAMES)
    if name not in SUITES:
        raise UsageError("unknown suite '%s' (choose from %s)" % (name,
            ", ".join(list(SUITE_NAMES) + [ALL_SUITES])))
    return [name]

def build_suite(name, context):
    """! @brief Build the CheckSequence of a suite, or of all suites nested in order."""
    names = suite_names(name)
    if len(names) == 1:
        return CheckSequence(*[(check_id, partial(check, context))
            for check_id, check in SUITES[names[0]]])
    return CheckSequence(*[(suite, partial(build_suite, suite, context)) for suite in names])

def run_suite(name, context, jobs=1):
    """! @brief Run a suite and return its CheckReport."""
    sequence = build_suite(name, context)
    LOG.info("Running suite %s with k = %s", name, context.k)
    return CheckReport(name, sequence.invoke(jobs=jobs))

## @brief Smallest l accepted by the stiefel command.
STIEFEL_MIN_L = 4

def _model_holonomy(ctx, l):
    result = ctx.stiefel(l).holonomy_algebra()
    expected = StiefelModel.expected_holonomy_dimension(l)
    defects = [] if result.dimension == expected else [('dimension', result.dimension)]
    return outcome('stiefel.holonomy', "the holonomy algebra is so(%d)" % (l - 2), defects,
        detail="holonomy dim %d, Killing rank %d" % (result.dimension, result.killing_rank))

def _model_skew(ctx, l):
    return outcome('stiefel.torsion_skew', "T(X, Y, Z) = -<[X, Y]_m, Z> is totally skew",
        ctx.stiefel(l).skewness_defects())

def _model_bracket(ctx, l):
    return outcome('stiefel.bracket_identity', "mu ^ dmu (X, Y, Z) = -<[X, Y], Z> on m",
        ctx.stiefel(l).bracket_identity_defect())

def _model_reductive(ctx, l):
    return outcome('stiefel.reductive', "[h, h] in h and [h, m] in m",
        ctx.stiefel(l).reductive_defects())

def _model_ricci(ctx, l):
    model = ctx.stiefel(l)
    return outcome('stiefel.ricci', "Ricci of SO(l)/SO(l - 2) matches the Ricci formula at k = 1",
        model.ricci() - model.expected_ricci())

def build_stiefel_sequence(l, context, max_l=9):
    """! @brief Checks of the Stiefel model for a single l.

    @exception RangeError l lies outside [4, max_l].
    """
    if not STIEFEL_MIN_L <= l <= max_l:
        raise RangeError("l out of range: %d (expected %d <= l <= %d)" % (l, STIEFEL_MIN_L, max_l))
    tasks = [
        ('stiefel.holonomy', partial(_model_holonomy, context, l)),
        ('stiefel.torsion_skew', partial(_model_skew, context, l)),
        ('stiefel.bracket_identity', partial(_model_bracket, context, l)),
        ('stiefel.reductive', partial(_model_reductive, context, l)),
        ('stiefel.ricci', partial(_model_ricci, context, l)),
        ]
    if l == 5:
        tasks += [
            ('stiefel.frame_torsion', partial(check_frame_torsion, context)),
            ('stiefel.curvature_squares', partial(check_curvature_squares, context)),
            ('stiefel.holonomy_in_g2', partial(check_holonomy_in_g2, context)),
            ]
    return CheckSequence(*tasks)

def run_stiefel(l, context, max_l=9, jobs=1):
    sequence = build_stiefel_sequence(l, context, max_l)
    return CheckReport("stiefel l=%d" % l, sequence.invoke(jobs=jobs))
