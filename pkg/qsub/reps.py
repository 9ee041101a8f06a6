"""Comodules, modules, relative Hopf modules and bicomodules.

Index conventions: a right action ``M (x) A -> M`` reads column ``m * dim A + a``,
a left action ``A (x) M -> M`` reads ``a * dim M + m``; a right coaction writes
row ``n * dim C + c`` and a left coaction row ``c * dim N + n``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dataclass_field

from sympy import Poly, Symbol

from .checks import Check, CheckSuite
from .exceptions import (
    DimensionMismatch,
    NotInducedByCoalgebraMap,
    RadicalUnavailable,
    VerificationFailed,
)
from .hopf import (
    AlgebraData,
    CoalgebraData,
    CoalgebraMap,
    HopfAlgebraData,
    check_coalgebra_map,
    compare_maps,
    dual_algebra,
    restrict_algebra,
)
from .linalg import (
    LinMap,
    Subspace,
    canonicalize_subspace,
    find_invertible,
    flip_map,
    identity,
    kernel_of,
    map_space,
    tensor_maps,
    tensor_of_maps,
)

logger = logging.getLogger(__name__)

RIGHT = 'right'
LEFT = 'left'
SIDES = (RIGHT, LEFT)


def _require_side(side):
    if side not in SIDES:
        raise DimensionMismatch('side must be left or right, got %(side)s', side=side)


def _same_structure(a, b):
    return a is b or a == b


@dataclass(frozen=True)
class ComoduleData:
    dim: int
    coaction: LinMap
    over: CoalgebraData
    side: str = RIGHT
    labels: tuple[str, ...] = ()

    @property
    def field(self):
        return self.over.field

    def basis_labels(self):
        return list(self.labels) if self.labels else [f'v{i}' for i in range(self.dim)]


@dataclass(frozen=True)
class ModuleData:
    dim: int
    action: LinMap
    over: AlgebraData
    side: str = RIGHT
    labels: tuple[str, ...] = ()

    @property
    def field(self):
        return self.over.field

    def basis_labels(self):
        return list(self.labels) if self.labels else [f'v{i}' for i in range(self.dim)]

    def operator(self, element):
        """Matrix of the action of one algebra element on the carrier."""
        column = LinMap.from_columns([element], self.over.dim, self.field)
        own = identity(self.dim, self.field)
        if self.side == RIGHT:
            return self.action @ tensor_of_maps(own, column)
        return self.action @ tensor_of_maps(column, own)

    def basis_operators(self):
        return [self.operator(self.over.basis_vector(i)) for i in range(self.over.dim)]


@dataclass(frozen=True)
class ComoduleAlgebraData:
    """An algebra ``A`` with a right ``H``-coaction ``A -> A (x) H`` that is an algebra map."""

    algebra: AlgebraData
    coaction: LinMap
    hopf: HopfAlgebraData
    inclusion: LinMap | None = None

    @property
    def dim(self):
        return self.algebra.dim

    def as_comodule(self):
        return ComoduleData(self.dim, self.coaction, self.hopf.coalgebra, RIGHT, self.algebra.labels)


@dataclass(frozen=True)
class RelHopfModuleData:
    comodule: ComoduleData
    module: ModuleData
    base: ComoduleAlgebraData

    @property
    def dim(self):
        return self.comodule.dim

    @property
    def field(self):
        return self.comodule.field


@dataclass(frozen=True)
class BicomoduleData:
    """Left coaction over ``left.over`` and right coaction over ``right.over`` on one space."""

    dim: int
    left: ComoduleData
    right: ComoduleData


# certificates


def _check_comodule(V: ComoduleData, suite: CheckSuite, prefix=''):
    _require_side(V.side)
    C, n = V.over, V.dim
    field = V.field
    if V.coaction.shape != (n * C.dim, n):
        raise DimensionMismatch('coaction has shape %(got)s, expected %(expected)s',
                                got=V.coaction.shape, expected=(n * C.dim, n))
    own, co = identity(n, field), identity(C.dim, field)
    carrier, coalgebra = V.basis_labels(), list(C.labels)
    rho = V.coaction
    if V.side == RIGHT:
        compare_maps(suite, prefix + 'coassociativity',
                     tensor_of_maps(rho, co) @ rho, tensor_of_maps(own, C.comult) @ rho,
                     [carrier], [carrier, coalgebra, coalgebra])
        compare_maps(suite, prefix + 'counit', tensor_of_maps(own, C.counit) @ rho, own,
                     [carrier], [carrier])
    else:
        compare_maps(suite, prefix + 'coassociativity',
                     tensor_of_maps(co, rho) @ rho, tensor_of_maps(C.comult, own) @ rho,
                     [carrier], [coalgebra, coalgebra, carrier])
        compare_maps(suite, prefix + 'counit', tensor_of_maps(C.counit, own) @ rho, own,
                     [carrier], [carrier])


def _check_module(M: ModuleData, suite: CheckSuite, prefix=''):
    _require_side(M.side)
    A, n = M.over, M.dim
    field = M.field
    if M.action.shape != (n, n * A.dim):
        raise DimensionMismatch('action has shape %(got)s, expected %(expected)s',
                                got=M.action.shape, expected=(n, n * A.dim))
    own, alg = identity(n, field), identity(A.dim, field)
    carrier, algebra = M.basis_labels(), list(A.labels)
    act = M.action
    if M.side == RIGHT:
        compare_maps(suite, prefix + 'associativity',
                     act @ tensor_of_maps(act, alg), act @ tensor_of_maps(own, A.mult),
                     [carrier, algebra, algebra], [carrier])
        compare_maps(suite, prefix + 'unit', act @ tensor_of_maps(own, A.unit), own,
                     [carrier], [carrier])
    else:
        compare_maps(suite, prefix + 'associativity',
                     act @ tensor_of_maps(alg, act), act @ tensor_of_maps(A.mult, own),
                     [algebra, algebra, carrier], [carrier])
        compare_maps(suite, prefix + 'unit', act @ tensor_of_maps(A.unit, own), own,
                     [carrier], [carrier])


def action_colinearity_maps(M: RelHopfModuleData):
    """Both sides of ``rho(m a) = m_0 a_0 (x) m_1 a_1`` as maps ``M (x) A -> M (x) H``."""
    H, base = M.base.hopf, M.base
    n, a, h = M.dim, base.dim, H.dim
    rho, act = M.comodule.coaction, M.module.action
    lhs = rho @ act
    rhs = tensor_of_maps(act, H.mult) @ tensor_maps(identity(n, H.field), flip_map(h, a, H.field),
                                                    identity(h, H.field)) @ tensor_of_maps(rho, base.coaction)
    return lhs, rhs


def check_representation(x) -> CheckSuite:
    """Per-axiom verdicts for any representation type."""
    if isinstance(x, ComoduleData):
        suite = CheckSuite('comodule')
        _check_comodule(x, suite)
        return suite
    if isinstance(x, ModuleData):
        suite = CheckSuite('module')
        _check_module(x, suite)
        return suite
    if isinstance(x, RelHopfModuleData):
        if x.comodule.dim != x.module.dim:
            raise DimensionMismatch('comodule has dim %(comodule)s, module %(module)s',
                                    comodule=x.comodule.dim, module=x.module.dim)
        suite = CheckSuite('relative_hopf_module')
        _check_comodule(x.comodule, suite, 'comodule_')
        _check_module(x.module, suite, 'module_')
        _check_comodule(x.base.as_comodule(), suite, 'algebra_')
        lhs, rhs = action_colinearity_maps(x)
        compare_maps(suite, 'action_colinear', lhs, rhs,
                     [x.module.basis_labels(), list(x.base.algebra.labels)],
                     [x.comodule.basis_labels(), list(x.base.hopf.labels)])
        return suite
    if isinstance(x, BicomoduleData):
        if not (x.dim == x.left.dim == x.right.dim):
            raise DimensionMismatch('bicomodule dims %(left)s and %(right)s differ',
                                    left=x.left.dim, right=x.right.dim)
        suite = CheckSuite('bicomodule')
        _check_comodule(x.left, suite, 'left_')
        _check_comodule(x.right, suite, 'right_')
        gamma, d = x.left.over, x.right.over
        lam, rho = x.left.coaction, x.right.coaction
        carrier = x.left.basis_labels()
        compare_maps(suite, 'coactions_commute',
                     tensor_of_maps(lam, identity(d.dim, d.field)) @ rho,
                     tensor_of_maps(identity(gamma.dim, gamma.field), rho) @ lam,
                     [carrier], [list(gamma.labels), carrier, list(d.labels)])
        return suite
    raise TypeError(f'no representation axioms for {type(x).__name__}')


# constructors


def regular_comodule(C: CoalgebraData, side=RIGHT) -> ComoduleData:
    _require_side(side)
    return ComoduleData(C.dim, C.comult, C, side, tuple(C.labels))


def trivial_comodule(H: HopfAlgebraData, dim=1, side=RIGHT) -> ComoduleData:
    """``v -> v (x) 1`` (or ``1 (x) v``)."""
    field = H.field
    entries = {}
    for i in range(dim):
        for k, value in H.unit.column_dict(0).items():
            row = i * H.dim + k if side == RIGHT else k * dim + i
            entries[(row, i)] = value
    return ComoduleData(dim, LinMap(dim * H.dim, dim, field, entries), H.coalgebra, side)


def zero_comodule(C: CoalgebraData, side=RIGHT) -> ComoduleData:
    return ComoduleData(0, LinMap.zero(0, 0, C.field), C, side)


def regular_module(A: AlgebraData, side=RIGHT) -> ModuleData:
    _require_side(side)
    return ModuleData(A.dim, A.mult, A, side, tuple(A.labels))


def regular_bicomodule(C: CoalgebraData) -> BicomoduleData:
    return BicomoduleData(C.dim, regular_comodule(C, LEFT), regular_comodule(C, RIGHT))


def regular_bicomodule_along(psi: CoalgebraMap) -> BicomoduleData:
    """The source ``H`` as a ``(B, H)``-bicomodule with left coaction ``(psi (x) id) Delta``."""
    H, B = psi.source, psi.target
    left = tensor_of_maps(psi.matrix, identity(H.dim, H.field)) @ H.comult
    return BicomoduleData(H.dim, ComoduleData(H.dim, left, B, LEFT, tuple(H.labels)),
                          regular_comodule(H, RIGHT))


def coaction_on_subspace(coaction: LinMap, S: Subspace, coalgebra_dim, side=RIGHT):
    """Restrict a coaction to ``S``; raises DimensionMismatch if ``S`` is not a subcomodule."""
    field = S.field
    image = coaction @ S.inclusion()
    if side == RIGHT:
        coordinates = S.tensor_coordinate_map(coalgebra_dim)
        back = tensor_of_maps(S.inclusion(), identity(coalgebra_dim, field))
    else:
        coordinates = S.left_tensor_coordinate_map(coalgebra_dim)
        back = tensor_of_maps(identity(coalgebra_dim, field), S.inclusion())
    restricted = coordinates @ image
    difference = (back @ restricted).first_difference(image)
    if difference is not None:
        raise DimensionMismatch('coaction of subspace basis vector %(index)s leaves the subspace',
                                index=difference[1])
    return restricted


def subcomodule(V: ComoduleData, S: Subspace) -> ComoduleData:
    return ComoduleData(S.dim, coaction_on_subspace(V.coaction, S, V.over.dim, V.side), V.over, V.side)


def quotient_comodule(V: ComoduleData, S: Subspace) -> ComoduleData:
    coaction_on_subspace(V.coaction, S, V.over.dim, V.side)
    q, section = S.quotient_map(), S.quotient_section()
    co = identity(V.over.dim, V.field)
    outer = tensor_of_maps(q, co) if V.side == RIGHT else tensor_of_maps(co, q)
    return ComoduleData(q.rows, outer @ V.coaction @ section, V.over, V.side)


def submodule(M: ModuleData, W: Subspace) -> ModuleData:
    field = M.field
    alg = identity(M.over.dim, field)
    inclusion = W.inclusion()
    image = M.action @ (tensor_of_maps(inclusion, alg) if M.side == RIGHT else tensor_of_maps(alg, inclusion))
    for column in range(image.cols):
        if not W.contains(image.column(column)):
            raise DimensionMismatch('subspace is not invariant at tensor basis index %(index)s',
                                    index=column)
    return ModuleData(W.dim, W.coordinate_map() @ image, M.over, M.side)


def quotient_module(M: ModuleData, W: Subspace) -> ModuleData:
    submodule(M, W)
    q, section = W.quotient_map(), W.quotient_section()
    alg = identity(M.over.dim, M.field)
    lift = tensor_of_maps(section, alg) if M.side == RIGHT else tensor_of_maps(alg, section)
    return ModuleData(q.rows, q @ M.action @ lift, M.over, M.side)


def restrict_module(M: ModuleData, inclusion: LinMap, K: AlgebraData) -> ModuleData:
    """Pull ``M`` back along an algebra map ``K -> A``."""
    own = identity(M.dim, M.field)
    lift = tensor_of_maps(own, inclusion) if M.side == RIGHT else tensor_of_maps(inclusion, own)
    return ModuleData(M.dim, M.action @ lift, K, M.side, M.labels)


def subalgebra_comodule_algebra(H: HopfAlgebraData, S: Subspace, labels=None) -> ComoduleAlgebraData:
    """A right coideal subalgebra of ``H`` with the restricted comultiplication as coaction."""
    algebra = restrict_algebra(H.algebra, S, labels)
    coaction = coaction_on_subspace(H.comult, S, H.dim, RIGHT)
    return ComoduleAlgebraData(algebra, coaction, H, S.inclusion())


# tensor and cotensor


def tensor_comodules(V: ComoduleData, W: ComoduleData, H: HopfAlgebraData) -> ComoduleData:
    """``v (x) w -> v_0 (x) w_0 (x) v_1 w_1``."""
    if not (_same_structure(V.over, H.coalgebra) and _same_structure(W.over, H.coalgebra)):
        raise DimensionMismatch('comodules over different coalgebras (dims %(left)s and %(right)s)',
                                left=V.over.dim, right=W.over.dim)
    if V.side != RIGHT or W.side != RIGHT:
        raise DimensionMismatch('tensor product needs right comodules, got %(left)s and %(right)s',
                                left=V.side, right=W.side)
    field, h = H.field, H.dim
    shuffle = tensor_maps(identity(V.dim, field), flip_map(h, W.dim, field), identity(h, field))
    coaction = tensor_maps(identity(V.dim * W.dim, field), H.mult) @ shuffle @ tensor_of_maps(V.coaction, W.coaction)
    return ComoduleData(V.dim * W.dim, coaction, H.coalgebra, RIGHT)


def tensor_module_action(X: ComoduleData, M: RelHopfModuleData) -> RelHopfModuleData:
    """``X (x) M`` with tensor coaction and ``A`` acting on the ``M`` leg."""
    comodule = tensor_comodules(X, M.comodule, M.base.hopf)
    action = tensor_of_maps(identity(X.dim, X.field), M.module.action)
    return RelHopfModuleData(comodule, ModuleData(X.dim * M.dim, action, M.module.over, RIGHT), M.base)


def sigma_action(X: ComoduleData, M: ComoduleData, sigma: LinMap, B: CoalgebraData) -> ComoduleData:
    """``X (x) M`` as a ``B``-comodule: ``x (x) m -> x_0 (x) m_0 (x) sigma(x_1 (x) m_1)``."""
    field, h = X.field, X.over.dim
    shuffle = tensor_maps(identity(X.dim, field), flip_map(h, M.dim, field), identity(B.dim, field))
    coaction = tensor_of_maps(identity(X.dim * M.dim, field), sigma) @ shuffle @ tensor_of_maps(X.coaction, M.coaction)
    return ComoduleData(X.dim * M.dim, coaction, B, RIGHT)


def cotensor(V: ComoduleData, W: ComoduleData) -> Subspace:
    """``V []_D W``: kernel of ``rho_V (x) id - id (x) lambda_W``."""
    if V.side != RIGHT or W.side != LEFT:
        raise DimensionMismatch('cotensor needs a right and a left comodule, got %(left)s and %(right)s',
                                left=V.side, right=W.side)
    if not _same_structure(V.over, W.over):
        raise DimensionMismatch('cotensor over different coalgebras (dims %(left)s and %(right)s)',
                                left=V.over.dim, right=W.over.dim)
    field = V.field
    difference = tensor_of_maps(V.coaction, identity(W.dim, field)) \
        - tensor_of_maps(identity(V.dim, field), W.coaction)
    return kernel_of(difference)


def cotensor_comodule(V: ComoduleData, X: BicomoduleData):
    """``V []_D X`` with the right coaction of ``X``; returns ``(subspace, comodule)``."""
    S = cotensor(V, X.left)
    E = X.right.over
    ambient = tensor_of_maps(identity(V.dim, V.field), X.right.coaction)
    return S, ComoduleData(S.dim, coaction_on_subspace(ambient, S, E.dim, RIGHT), E, RIGHT)


def cotensor_left_comodule(X: BicomoduleData, W: ComoduleData):
    """``X []_D W`` with the left coaction of ``X``; returns ``(subspace, comodule)``."""
    S = cotensor(X.right, W)
    E = X.left.over
    ambient = tensor_of_maps(X.left.coaction, identity(W.dim, W.field))
    return S, ComoduleData(S.dim, coaction_on_subspace(ambient, S, E.dim, LEFT), E, LEFT)


def cotensor_map(f: LinMap, g: LinMap, source: Subspace, target: Subspace) -> LinMap:
    """``f [] g`` between computed cotensor subspaces."""
    return tensor_of_maps(f, g).restrict(source, target)


def cotensor_counit(V: ComoduleData):
    """``V []_D D -> V``, ``v (x) d -> v eps(d)``; returns ``(subspace, map)``."""
    D = V.over
    S = cotensor(V, regular_comodule(D, LEFT))
    return S, tensor_of_maps(identity(V.dim, V.field), D.counit) @ S.inclusion()


# morphisms


def colinearity_defect(f: LinMap, V: ComoduleData, W: ComoduleData) -> LinMap:
    co = identity(V.over.dim, V.field)
    if V.side == RIGHT:
        return W.coaction @ f - tensor_of_maps(f, co) @ V.coaction
    return W.coaction @ f - tensor_of_maps(co, f) @ V.coaction


def is_colinear(f: LinMap, V: ComoduleData, W: ComoduleData) -> bool:
    return colinearity_defect(f, V, W).is_zero()


def hom_colinear(V: ComoduleData, W: ComoduleData) -> Subspace:
    """Colinear maps ``V -> W`` as flattened ``W.dim x V.dim`` matrices."""
    if V.side != W.side or not _same_structure(V.over, W.over):
        raise DimensionMismatch('comodules live over different coalgebras or sides')
    return map_space(W.dim, V.dim, V.field, lambda f: colinearity_defect(f, V, W))


def linearity_defect(f: LinMap, V: ModuleData, W: ModuleData) -> LinMap:
    alg = identity(V.over.dim, V.field)
    if V.side == RIGHT:
        return f @ V.action - W.action @ tensor_of_maps(f, alg)
    return f @ V.action - W.action @ tensor_of_maps(alg, f)


def is_module_map(f: LinMap, V: ModuleData, W: ModuleData) -> bool:
    return linearity_defect(f, V, W).is_zero()


def hom_modules(V: ModuleData, W: ModuleData) -> Subspace:
    if V.side != W.side:
        raise DimensionMismatch('modules on different sides')
    return map_space(W.dim, V.dim, V.field, lambda f: linearity_defect(f, V, W))


def hom_relative(V: RelHopfModuleData, W: RelHopfModuleData) -> Subspace:
    """Maps that are both colinear and ``A``-linear."""
    return map_space(W.dim, V.dim, V.field, lambda f: [
        colinearity_defect(f, V.comodule, W.comodule),
        linearity_defect(f, V.module, W.module),
    ])


def find_isomorphism(space: Subspace, rows, cols, seed=0):
    return find_invertible(space, rows, cols, seed=seed)


# corestriction


def corestrict(psi: CoalgebraMap, M: ComoduleData) -> ComoduleData:
    """``(id (x) psi) rho_M`` as a comodule over the target coalgebra."""
    certificate = check_coalgebra_map(psi)
    if not certificate.passed:
        raise VerificationFailed('map is not a coalgebra map', certificate)
    own = identity(M.dim, M.field)
    if M.side == RIGHT:
        coaction = tensor_of_maps(own, psi.matrix) @ M.coaction
    else:
        coaction = tensor_of_maps(psi.matrix, own) @ M.coaction
    return ComoduleData(M.dim, coaction, psi.target, M.side, M.labels)


def coinduce(psi: CoalgebraMap, N: ComoduleData):
    """``N []_B H`` as a right ``H``-comodule; returns ``(subspace, comodule)``."""
    return cotensor_comodule(N, regular_bicomodule_along(psi))


@dataclass
class AdjunctionMaps:
    unit: LinMap
    counit: LinMap
    certificate: CheckSuite = dataclass_field(default_factory=lambda: CheckSuite('adjunction'))


def corestriction_adjunction(psi: CoalgebraMap, M: ComoduleData, N: ComoduleData) -> AdjunctionMaps:
    """Unit ``M -> psi*(M) []_B H`` and counit ``psi*(N []_B H) -> N`` with triangle identities."""
    field = M.field
    H = psi.source
    S_M, coinduced_M = coinduce(psi, corestrict(psi, M))
    unit = M.coaction.restrict(Subspace.full(M.dim, field), S_M)
    S_N, coinduced_N = coinduce(psi, N)
    counit = tensor_of_maps(identity(N.dim, field), H.counit) @ S_N.inclusion()

    suite = CheckSuite('corestriction_adjunction')
    suite.add('unit_colinear', is_colinear(unit, M, coinduced_M))
    suite.add('counit_colinear', is_colinear(counit, corestrict(psi, coinduced_N), N))
    counit_M = tensor_of_maps(identity(M.dim, field), H.counit) @ S_M.inclusion()
    suite.add('triangle_left', counit_M @ unit == identity(M.dim, field))
    S_twice, _ = coinduce(psi, corestrict(psi, coinduced_N))
    unit_N = coinduced_N.coaction.restrict(Subspace.full(S_N.dim, field), S_twice)
    back = cotensor_map(counit, identity(H.dim, field), S_twice, S_N)
    suite.add('triangle_right', back @ unit_N == identity(S_N.dim, field))
    return AdjunctionMaps(unit, counit, suite)


def recover_coalgebra_map(lam: LinMap, H: CoalgebraData, B: CoalgebraData) -> CoalgebraMap:
    """``psi = (eps_H (x) id_B) lambda`` for a ``B``-coaction on the carrier of ``H``."""
    field = H.field
    if lam.shape != (H.dim * B.dim, H.dim):
        raise DimensionMismatch('coaction has shape %(got)s, expected %(expected)s',
                                got=lam.shape, expected=(H.dim * B.dim, H.dim))
    suite = CheckSuite('recovered_coalgebra_map')
    _check_comodule(ComoduleData(H.dim, lam, B, RIGHT, tuple(H.labels)), suite, 'coaction_')
    psi = CoalgebraMap(H, B, tensor_of_maps(H.counit, identity(B.dim, field)) @ lam)
    suite.extend(check_coalgebra_map(psi).checks, 'map_')
    regenerated = tensor_of_maps(identity(H.dim, field), psi.matrix) @ H.comult
    compare_maps(suite, 'regenerates_coaction', regenerated, lam,
                 [list(H.labels)], [list(H.labels), list(B.labels)])
    if not suite.passed:
        raise NotInducedByCoalgebraMap('functor not induced by a coalgebra map', suite)
    return psi


# comodules as modules over the dual algebra


def dual_module(V: ComoduleData) -> ModuleData:
    """``V*`` as a module over ``C*`` on the same side (transpose of the coaction)."""
    return ModuleData(V.dim, V.coaction.transpose(), dual_algebra(V.over), V.side)


def rational_module(V: ComoduleData) -> ModuleData:
    """``V`` itself as a ``C*``-module: right comodules give left modules and vice versa."""
    n, c = V.dim, V.over.dim
    entries = {}
    for (row, k), value in V.coaction.entries.items():
        if V.side == RIGHT:
            j, d = divmod(row, c)
            entries[(j, d * n + k)] = value
        else:
            d, j = divmod(row, n)
            entries[(j, k * c + d)] = value
    side = LEFT if V.side == RIGHT else RIGHT
    return ModuleData(n, LinMap(n, n * c, V.field, entries), dual_algebra(V.over), side, V.labels)


def comodule_from_dual_module(M: ModuleData, C: CoalgebraData) -> ComoduleData:
    """Inverse of ``rational_module``."""
    n, c = M.dim, C.dim
    if M.over.dim != c:
        raise DimensionMismatch('module over a %(got)s-dim algebra, coalgebra has dim %(expected)s',
                                got=M.over.dim, expected=c)
    entries = {}
    for (j, column), value in M.action.entries.items():
        if M.side == LEFT:
            d, k = divmod(column, n)
            entries[(j * c + d, k)] = value
        else:
            k, d = divmod(column, c)
            entries[(d * n + j, k)] = value
    side = RIGHT if M.side == LEFT else LEFT
    return ComoduleData(n, LinMap(n * c, n, M.field, entries), C, side, M.labels)


# radical and simple modules


@dataclass(frozen=True)
class RadicalData:
    radical: Subspace
    simples: tuple[ModuleData, ...]


def trace_form(A: AlgebraData) -> LinMap:
    """Gram matrix of ``(x, y) -> tr(L_{xy})`` on the basis."""
    n, field = A.dim, A.field
    traces = [field.zero] * n
    for (row, column), value in A.mult.entries.items():
        left, right = divmod(column, n)
        if row == right:
            traces[left] += value
    gram = {}
    for (row, column), value in A.mult.entries.items():
        weight = traces[row]
        if not field.is_zero(weight):
            key = divmod(column, n)
            gram[key] = gram.get(key, field.zero) + value * weight
    return LinMap.from_entries(n, n, field, gram)


def jacobson_radical(A: AlgebraData) -> Subspace:
    p = A.field.characteristic
    if p and p <= A.dim:
        raise RadicalUnavailable(f'trace-form radical needs characteristic 0 or p > {A.dim}, got p = {p}')
    if A.dim == 0:
        return Subspace.zero(0, A.field)
    return kernel_of(trace_form(A))


def invariant_closure(operators, vectors, n, field) -> Subspace:
    """Smallest subspace containing ``vectors`` and stable under ``operators``."""
    space = canonicalize_subspace(vectors, n, field)
    frontier = list(space.basis)
    while frontier:
        fresh = []
        for vector in frontier:
            for op in operators:
                image = op.apply(vector)
                if not space.contains(image):
                    space = canonicalize_subspace(space.basis + (image,), n, field)
                    fresh.append(image)
        frontier = fresh
    return space


def _evaluate(coefficients, b: LinMap):
    result = LinMap.zero(b.rows, b.cols, b.field)
    one = identity(b.rows, b.field)
    for coefficient in coefficients:
        result = result @ b + one.scale(coefficient)
    return result


def _irreducible_factors(b: LinMap):
    field = b.field
    polynomial = Poly(b.charpoly(), Symbol('t'), domain=field.domain)
    _, factors = polynomial.factor_list()
    found = [[field.element(c) for c in factor.all_coeffs()] for factor, _ in factors]
    return sorted(found, key=lambda coefficients: (len(coefficients), [field.format(c) for c in coefficients]))


def find_proper_submodule(operators, n, field, seed=0, attempts=12) -> Subspace | None:
    """A proper nonzero invariant subspace, or None when irreducible.

    Random algebra elements are split by their characteristic polynomial; an
    irreducible factor whose null space has the factor's degree settles
    irreducibility through the spin of one vector and its transpose.
    """
    if n <= 1:
        return None
    rng = random.Random(seed)
    transposes = [op.transpose() for op in operators]
    for _ in range(attempts):
        b = LinMap.zero(n, n, field)
        for op in operators:
            b = b + op.scale(rng.randint(-3, 3))
        b = b + rng.choice(operators) @ rng.choice(operators)
        for coefficients in _irreducible_factors(b):
            value = _evaluate(coefficients, b)
            null = kernel_of(value)
            if null.dim == 0:
                continue
            spun = invariant_closure(operators, [null.basis[0]], n, field)
            if spun.dim < n:
                return spun
            if null.dim == len(coefficients) - 1:
                dual_null = kernel_of(value.transpose())
                dual = invariant_closure(transposes, [dual_null.basis[0]], n, field)
                if dual.dim < n:
                    return kernel_of(LinMap.from_rows(dual.basis, field, cols=n))
                return None
            for vector in null.basis[1:]:
                spun = invariant_closure(operators, [vector], n, field)
                if spun.dim < n:
                    return spun
    raise VerificationFailed(f'irreducibility of a {n}-dim module was not settled in {attempts} attempts')


def composition_factors(M: ModuleData, seed=0) -> list[ModuleData]:
    if M.dim == 0:
        return []
    W = find_proper_submodule(M.basis_operators(), M.dim, M.field, seed)
    if W is None:
        return [M]
    return composition_factors(submodule(M, W), seed) + composition_factors(quotient_module(M, W), seed)


def are_isomorphic_simples(S: ModuleData, T: ModuleData) -> bool:
    return S.dim == T.dim and hom_modules(S, T).dim > 0


def radical_and_simples(A: AlgebraData, side=RIGHT, seed=0) -> RadicalData:
    """Trace-form radical ``J`` and one representative per simple module of ``A``."""
    J = jacobson_radical(A)
    top = quotient_module(regular_module(A, side), J)
    simples: list[ModuleData] = []
    for factor in composition_factors(top, seed):
        if not any(are_isomorphic_simples(factor, known) for known in simples):
            simples.append(factor)
    simples.sort(key=lambda S: S.dim)
    logger.debug('radical of %s-dim algebra has dim %s; %s simple modules', A.dim, J.dim, len(simples))
    return RadicalData(J, tuple(simples))


def is_cosemisimple(C: CoalgebraData) -> Check:
    J = jacobson_radical(dual_algebra(C))
    return Check('cosemisimple', J.dim == 0, {'dual_radical_dim': J.dim})


def is_K_semisimple(V: ModuleData, K: Subspace) -> Check:
    """``V`` restricted to the subalgebra ``K`` is semisimple iff ``J(K)`` acts as zero."""
    algebra = restrict_algebra(V.over, K)
    restricted = restrict_module(V, K.inclusion(), algebra)
    J = jacobson_radical(algebra)
    field = V.field
    for row in J.basis:
        if not restricted.operator(row).is_zero():
            element = K.inclusion().apply(row)
            return Check('K_semisimple', False, {
                'radical_element': [field.format(x) for x in element],
                'radical_dim': J.dim,
            })
    return Check('K_semisimple', True, {'radical_dim': J.dim})
