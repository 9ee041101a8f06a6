"""Monads from adjunctions, the unit-object algebra, the internal hom and comonads.

Functors are extensional: Python callables on objects and maps, evaluated on
finite samples. Natural transformations are families of matrices indexed by
those samples, and every law is checked on them.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any, Callable

from .checks import CheckSuite
from .correspondence import (
    CoidealSubalgebraData,
    QuotientModuleCoalgebraData,
    coinvariants,
    is_faithfully_coflat,
    is_faithfully_flat,
)
from .exceptions import DimensionMismatch, PipelineHalted, VerificationFailed
from .hopf import (
    AlgebraData,
    CoalgebraData,
    HopfAlgebraData,
    antipode_bijective,
    check_algebra_axioms,
    check_coalgebra_axioms,
    compare_maps,
    restrict_algebra,
)
from .linalg import (
    LinMap,
    Subspace,
    flatten_map,
    flip_map,
    identity,
    image_of,
    kernel_of,
    left_composition_operator,
    right_composition_operator,
    tensor_maps,
    tensor_of_maps,
    unflatten_map,
)
from .reps import (
    LEFT,
    RIGHT,
    ComoduleAlgebraData,
    ComoduleData,
    ModuleData,
    RelHopfModuleData,
    action_colinearity_maps,
    check_representation,
    coaction_on_subspace,
    coinduce,
    corestrict,
    cotensor,
    cotensor_comodule,
    cotensor_map,
    hom_colinear,
    hom_relative,
    is_colinear,
    is_module_map,
    recover_coalgebra_map,
    regular_bicomodule_along,
    regular_comodule,
    sigma_action,
    submodule,
    tensor_comodules,
    tensor_module_action,
    trivial_comodule,
)

logger = logging.getLogger(__name__)

ASSUMED_COCONTINUITY = 'cocontinuity of the comonad beyond finite direct sums'
ASSUMED_LOCAL_PRESENTABILITY = 'local presentability of the module category (infinite colimits)'
FUNCTOR_DERIVED = 'derived from pi'
FUNCTOR_SUPPLIED = 'supplied'


# adjunctions and monads


@dataclass
class Adjunction:
    """``F -| G`` with ``F : C -> D``; ``unit(V) : V -> GF(V)``, ``counit(M) : FG(M) -> M``."""

    name: str
    left: Callable[[Any], Any]
    left_map: Callable[[LinMap, Any, Any], LinMap]
    right: Callable[[Any], ComoduleData]
    right_map: Callable[[LinMap, Any, Any], LinMap]
    unit: Callable[[Any], LinMap]
    counit: Callable[[Any], LinMap]
    witness: Callable[[ComoduleData, ComoduleData], LinMap] | None = None
    hypothesis_checks: Callable[[list], CheckSuite] | None = None
    hypotheses: dict[str, bool] = dataclass_field(default_factory=dict)

    def verify_hypotheses(self, samples) -> CheckSuite:
        """Evaluate the module-functor hypotheses on ``(name, comodule)`` samples and keep the verdicts."""
        if self.hypothesis_checks is None:
            suite = CheckSuite('module_functor_hypotheses')
        else:
            suite = self.hypothesis_checks(list(samples))
        self.hypotheses = {check.name: check.passed for check in suite.checks}
        return suite


def identity_adjunction() -> Adjunction:
    return Adjunction(
        'identity',
        left=lambda V: V,
        left_map=lambda f, V, W: f,
        right=lambda V: V,
        right_map=lambda f, V, W: f,
        unit=lambda V: identity(V.dim, V.field),
        counit=lambda V: identity(V.dim, V.field),
        witness=lambda V, TI: identity(V.dim * TI.dim, V.field),
    )


def free_relative_module(V: ComoduleData, base: ComoduleAlgebraData) -> RelHopfModuleData:
    """``V (x) A`` with the tensor coaction and ``A`` acting by multiplication on the right leg."""
    comodule = tensor_comodules(V, base.as_comodule(), base.hopf)
    action = tensor_of_maps(identity(V.dim, V.field), base.algebra.mult)
    return RelHopfModuleData(comodule, ModuleData(V.dim * base.dim, action, base.algebra, RIGHT), base)


def res_ind_adjunction(A: CoidealSubalgebraData) -> Adjunction:
    """``- (x) A : M^H -> M^H_A`` left adjoint to the forgetful functor."""
    base = A.comodule_algebra

    return Adjunction(
        'res-ind',
        left=lambda V: free_relative_module(V, base),
        left_map=lambda f, V, W: tensor_of_maps(f, identity(base.dim, f.field)),
        right=lambda M: M.comodule,
        right_map=lambda f, M, N: f,
        unit=lambda V: tensor_of_maps(identity(V.dim, V.field), base.algebra.unit),
        counit=lambda M: M.module.action,
        witness=lambda V, TI: identity(V.dim * TI.dim, V.field),
        hypothesis_checks=lambda samples: module_functor_checks(base.hopf, A=A, samples=samples),
    )


def corestriction_monad_adjunction(Q: QuotientModuleCoalgebraData) -> Adjunction:
    """Corestriction along ``pi`` left adjoint to ``- []_B H``."""
    H, psi = Q.hopf, Q.psi

    def right(N):
        return coinduce(psi, N)[1]

    def right_map(f, N, N2):
        return cotensor_map(f, identity(H.dim, f.field), coinduce(psi, N)[0], coinduce(psi, N2)[0])

    def unit(V):
        S, _ = coinduce(psi, corestrict(psi, V))
        return V.coaction.restrict(Subspace.full(V.dim, V.field), S)

    def counit(N):
        S, _ = coinduce(psi, N)
        return tensor_of_maps(identity(N.dim, N.field), H.counit) @ S.inclusion()

    def witness(V, TI):
        """``v (x) a -> v_0 (x) v_1 a`` from ``V (x) T(I)`` onto ``T(V)``."""
        field = V.field
        S_I, _ = coinduce(psi, corestrict(psi, trivial_comodule(H)))
        S_V, _ = coinduce(psi, corestrict(psi, V))
        ambient = tensor_of_maps(identity(V.dim, field), H.mult) @ tensor_of_maps(V.coaction, S_I.inclusion())
        return ambient.restrict(Subspace.full(V.dim * S_I.dim, field), S_V)

    return Adjunction(
        'corestriction-cotensor',
        left=lambda V: corestrict(psi, V),
        left_map=lambda f, V, W: f,
        right=right,
        right_map=right_map,
        unit=unit,
        counit=counit,
        witness=witness,
        hypothesis_checks=lambda samples: module_functor_checks(H, Q=Q, samples=samples),
    )


def _triangle_checks(adjunction: Adjunction, name, V, suite: CheckSuite):
    FV = adjunction.left(V)
    GFV = adjunction.right(FV)
    eta = adjunction.unit(V)
    F_eta = adjunction.left_map(eta, V, GFV)
    left_triangle = adjunction.counit(FV) @ F_eta
    suite.add(f'{name}_triangle_left', left_triangle == identity(FV.dim, V.field), {'object': name})
    right_triangle = adjunction.right_map(adjunction.counit(FV), adjunction.left(GFV), FV) @ adjunction.unit(GFV)
    suite.add(f'{name}_triangle_right', right_triangle == identity(GFV.dim, V.field), {'object': name})


@dataclass
class MonadSample:
    """``T = GF`` with ``mu = G counit F`` and ``eta = unit`` on named sample objects."""

    adjunction: Adjunction
    objects: dict
    certificate: CheckSuite

    def apply(self, V) -> ComoduleData:
        return self.adjunction.right(self.adjunction.left(V))

    def apply_map(self, f, V, W) -> LinMap:
        F = self.adjunction
        return F.right_map(F.left_map(f, V, W), F.left(V), F.left(W))

    def eta(self, V) -> LinMap:
        return self.adjunction.unit(V)

    def mu(self, V) -> LinMap:
        F = self.adjunction
        FV = F.left(V)
        return F.right_map(F.counit(FV), F.left(F.right(FV)), FV)


def monad_from_adjunction(adjunction: Adjunction, objects) -> MonadSample:
    """Certify the triangle identities, then the monad laws, on every sample."""
    objects = dict(objects)
    triangles = CheckSuite('triangle_identities')
    for name, V in objects.items():
        _triangle_checks(adjunction, name, V, triangles)
    if not triangles.passed:
        raise VerificationFailed('adjunction data fails a triangle identity', triangles)

    monad = MonadSample(adjunction, objects, CheckSuite(f'monad[{adjunction.name}]'))
    suite = monad.certificate
    for name, V in objects.items():
        TV = monad.apply(V)
        TTV = monad.apply(TV)
        mu, mu_T = monad.mu(V), monad.mu(TV)
        T_mu = monad.apply_map(mu, TTV, TV)
        carrier = [TV.basis_labels()]
        compare_maps(suite, f'{name}_associativity', mu @ T_mu, mu @ mu_T,
                     [[f'v{i}' for i in range(T_mu.cols)]], carrier)
        T_eta = monad.apply_map(monad.eta(V), V, TV)
        own = identity(TV.dim, V.field)
        compare_maps(suite, f'{name}_left_unit', mu @ T_eta, own, carrier, carrier)
        compare_maps(suite, f'{name}_right_unit', mu @ monad.eta(TV), own, carrier, carrier)
    suite.add('triangle_identities', True, {'objects': sorted(objects)})
    logger.debug('monad %s certified on %s objects', adjunction.name, len(objects))
    return monad


@dataclass
class UnitObjectAlgebra:
    algebra: AlgebraData
    carrier: ComoduleData
    unit_object: ComoduleData
    certificate: CheckSuite


def unit_object_algebra(monad: MonadSample, unit_object: ComoduleData, labels=None) -> UnitObjectAlgebra:
    """``(T(I), mu_I, eta_I)`` read through ``T(V) = V (x) T(I)``; checks ``mu = id (x) mu_I`` and ``eta = id (x) eta_I``."""
    witness = monad.adjunction.witness
    if witness is None:
        raise VerificationFailed(f'monad {monad.adjunction.name} has no T(V) = V (x) T(I) witness')
    field = unit_object.field
    TI = monad.apply(unit_object)
    d = TI.dim
    mult = monad.mu(unit_object) @ witness(TI, TI)
    algebra = AlgebraData(d, mult, monad.eta(unit_object), tuple(labels or TI.basis_labels()))
    suite = CheckSuite('unit_object_algebra')
    suite.extend(check_algebra_axioms(algebra).checks, 'algebra_')
    for name, V in monad.objects.items():
        w_V = witness(V, TI)
        suite.add(f'{name}_witness_bijective', w_V.is_invertible(), {'rank': w_V.rank(), 'dim': w_V.rows})
        TV = monad.apply(V)
        lhs = monad.mu(V) @ witness(TV, TI) @ tensor_of_maps(w_V, identity(d, field))
        rhs = w_V @ tensor_of_maps(identity(V.dim, field), mult)
        compare_maps(suite, f'{name}_mu_is_id_tensor_mu_I', lhs, rhs,
                     [V.basis_labels(), list(algebra.labels), list(algebra.labels)], [TV.basis_labels()])
        compare_maps(suite, f'{name}_eta_is_id_tensor_eta_I', monad.eta(V),
                     w_V @ tensor_of_maps(identity(V.dim, field), algebra.unit),
                     [V.basis_labels()], [TV.basis_labels()])
    if not suite.passed:
        raise VerificationFailed('module-functor hypothesis violated', suite)
    return UnitObjectAlgebra(algebra, TI, unit_object, suite)


@dataclass(frozen=True)
class TAlgebraData:
    carrier: ComoduleData
    lam: LinMap


def comparison_talgebra(adjunction: Adjunction, M) -> TAlgebraData:
    """``K(M) = (G M, G counit_M)``."""
    GM = adjunction.right(M)
    return TAlgebraData(GM, adjunction.right_map(adjunction.counit(M), adjunction.left(GM), M))


def check_talgebra(monad: MonadSample, X: TAlgebraData, name='') -> CheckSuite:
    N, lam = X.carrier, X.lam
    TN = monad.apply(N)
    suite = CheckSuite('t_algebra')
    carrier = [N.basis_labels()]
    compare_maps(suite, f'{name}unit_square', lam @ monad.eta(N), identity(N.dim, N.field), carrier, carrier)
    T_lam = monad.apply_map(lam, TN, N)
    compare_maps(suite, f'{name}multiplication_square', lam @ T_lam, lam @ monad.mu(N),
                 [[f'v{i}' for i in range(T_lam.cols)]], carrier)
    return suite


def compare_talgebras_to_modules(monad: MonadSample, unit_algebra: UnitObjectAlgebra, talgebras=()) -> CheckSuite:
    """T-algebras rewritten as right ``T(I)``-modules and back, on the nose.

    The free algebras ``(T(V), mu_V)`` of the samples and ``(T(I), mu_I)`` are
    always included.
    """
    witness = monad.adjunction.witness
    TI, algebra = unit_algebra.carrier, unit_algebra.algebra
    field = TI.field
    samples = [(f'free[{name}]', TAlgebraData(monad.apply(V), monad.mu(V))) for name, V in monad.objects.items()]
    samples += list(talgebras)
    suite = CheckSuite('t_algebras_vs_modules')
    for name, X in samples:
        suite.extend(check_talgebra(monad, X).checks, f'{name}_')
        w = witness(X.carrier, TI)
        action = X.lam @ w
        module = ModuleData(X.carrier.dim, action, algebra, RIGHT)
        suite.extend(check_representation(module).checks, f'{name}_module_')
        back = action @ w.inverse()
        suite.add(f'{name}_roundtrip', back == X.lam and back @ w == action, {'object': name})
    regular = monad.mu(unit_algebra.unit_object) @ witness(TI, TI)
    suite.add('free_unit_is_regular', regular == algebra.mult)
    return suite


# internal hom


@dataclass
class InternalHomData:
    """``HOM(A, N)`` and its relative part ``HOM~(A, N)`` inside flattened ``Hom(A, N)``."""

    base: ComoduleAlgebraData
    target: ComoduleData
    hom: Subspace
    carrier: Subspace
    coaction_full: LinMap
    action_full: LinMap
    certificate: CheckSuite

    @cached_property
    def comodule(self) -> ComoduleData:
        coaction = coaction_on_subspace(self.coaction_full, self.carrier, self.base.hopf.dim, RIGHT)
        return ComoduleData(self.carrier.dim, coaction, self.base.hopf.coalgebra, RIGHT)

    @cached_property
    def module(self) -> ModuleData:
        full = ModuleData(self.carrier.ambient_dim, self.action_full, self.base.algebra, RIGHT)
        return submodule(full, self.carrier)

    @cached_property
    def relative(self) -> RelHopfModuleData:
        return RelHopfModuleData(self.comodule, self.module, self.base)


def _omega(base: ComoduleAlgebraData, N: ComoduleData) -> LinMap:
    """``f -> (a -> f(a_0)_0 (x) f(a_0)_1 S(a_1))`` on flattened maps."""
    H = base.hopf
    field = H.field
    n, a, h = N.dim, base.dim, H.dim
    post = tensor_of_maps(identity(n, field), H.mult) @ tensor_maps(N.coaction, H.antipode)
    pre = base.coaction

    def image(index):
        f = unflatten_map(field.unit_vector(n * a, index), n, a, field)
        value = post @ tensor_of_maps(f, identity(h, field)) @ pre
        return {i: v for i, v in enumerate(flatten_map(value)) if not field.is_zero(v)}

    return LinMap.from_function(n * h * a, n * a, field, image)


def _nu(base: ComoduleAlgebraData, N: ComoduleData) -> LinMap:
    """``f (x) h -> (a -> f(a) (x) h)``: index ``(m a' + c) h' + k -> (m h' + k) a' + c``."""
    n, a, h = N.dim, base.dim, base.hopf.dim
    field = N.field
    return LinMap(n * h * a, n * a * h, field, {
        ((m * h + k) * a + c, (m * a + c) * h + k): field.one
        for m in range(n) for c in range(a) for k in range(h)
    })


def internal_hom(base: ComoduleAlgebraData, N: ComoduleData) -> InternalHomData:
    H = base.hopf
    field = H.field
    n, a, h = N.dim, base.dim, H.dim
    suite = CheckSuite('internal_hom')
    suite.checks.append(antipode_bijective(H))

    omega, nu = _omega(base, N), _nu(base, N)
    nu_rank = nu.rank()
    suite.add('nu_injective', nu_rank == nu.cols, {'rank': nu_rank, 'cols': nu.cols})
    if nu_rank != nu.cols:
        raise VerificationFailed('nu is not injective', suite)
    image = image_of(nu)
    hom = kernel_of(image.quotient_map() @ omega)
    square = image.coordinate_map() @ nu
    coaction_full = square.inverse() @ image.coordinate_map() @ omega

    def right_action(b):
        return right_composition_operator(base.algebra.left_multiplication(b), n)

    def action_image(column):
        index, generator = divmod(column, a)
        return right_action(base.algebra.basis_vector(generator)).column_dict(index)

    action_full = LinMap.from_function(n * a, n * a * a, field, action_image)

    conditions = []
    for j in range(a):
        b = base.algebra.basis_vector(j)
        lhs = coaction_full @ right_action(b)
        rhs = LinMap.zero(n * a * h, n * a, field)
        for row, value in base.coaction.column_dict(j).items():
            k, l = divmod(row, h)
            right_h = H.mult @ tensor_of_maps(identity(h, field),
                                             LinMap.from_columns([H.basis_vector(l)], h, field))
            rhs = rhs + (tensor_of_maps(right_action(base.algebra.basis_vector(k)), right_h) @ coaction_full).scale(value)
        conditions.append(lhs - rhs)
    compatible = kernel_of(LinMap.stack(conditions, cols=n * a, field=field)) if conditions else Subspace.full(n * a, field)
    carrier = hom.intersect(compatible)
    suite.add('hom_dim', True, {'hom_k': n * a, 'HOM': hom.dim, 'HOM~': carrier.dim})

    data = InternalHomData(base, N, hom, carrier, coaction_full, action_full, suite)
    try:
        suite.extend(check_representation(data.relative).checks, 'relative_')
    except DimensionMismatch as error:
        suite.add('relative_closed', False, {'detail': '; '.join(error.messages)})
    return data


@dataclass
class HomBijection:
    forward: LinMap
    backward: LinMap
    left: Subspace
    right: Subspace
    certificate: CheckSuite


def _evaluation_at_one(base: ComoduleAlgebraData, n) -> LinMap:
    """``Hom(A, N) -> N``, ``f -> f(1_A)``."""
    one = base.algebra.one
    a = base.dim
    field = base.algebra.field
    return LinMap(n, n * a, field, {(m, m * a + c): one[c] for m in range(n) for c in range(a)
                                    if not field.is_zero(one[c])})


def _phi_tilde(phi: LinMap, M: RelHopfModuleData) -> LinMap:
    """``m -> (a -> phi(m a))`` as a map ``M -> Hom(A, N)`` on flattened maps."""
    field = M.field
    a = M.module.over.dim
    columns = []
    for m in range(M.dim):
        element = LinMap.from_columns([field.unit_vector(M.dim, m)], M.dim, field)
        columns.append(flatten_map(phi @ M.module.action @ tensor_of_maps(element, identity(a, field))))
    return LinMap.from_columns(columns, phi.rows * a, field)


def adjunction_unit_counit_check(M: RelHopfModuleData, N: ComoduleData, ihom: InternalHomData | None = None) -> HomBijection:
    """``Hom^H(Ind M, N) ~ Hom^H_A(M, HOM~(A, N))`` with the three obligations rechecked per basis map."""
    ihom = ihom or internal_hom(M.base, N)
    field = M.field
    carrier = ihom.carrier
    left = hom_colinear(M.comodule, N)
    right = hom_relative(M, ihom.relative)
    suite = CheckSuite('hom_adjunction')
    suite.add('equal_dims', left.dim == right.dim, {'left': left.dim, 'right': right.dim})

    forward_columns = []
    for index, vector in enumerate(left.basis):
        phi = unflatten_map(vector, N.dim, M.dim, field)
        ambient = _phi_tilde(phi, M)
        inside = all(carrier.contains(ambient.column(m)) for m in range(M.dim))
        suite.add(f'basis{index}_valued_in_HOM~', inside)
        if not inside:
            continue
        image = carrier.coordinate_map() @ ambient
        suite.add(f'basis{index}_A_linear', is_module_map(image, M.module, ihom.module))
        suite.add(f'basis{index}_H_colinear', is_colinear(image, M.comodule, ihom.comodule))
        flat = flatten_map(image)
        if right.contains(flat):
            forward_columns.append(right.coordinates(flat))
    evaluation = _evaluation_at_one(M.base, N.dim) @ carrier.inclusion()
    backward_columns = []
    for vector in right.basis:
        phi = evaluation @ unflatten_map(vector, carrier.dim, M.dim, field)
        flat = flatten_map(phi)
        if left.contains(flat):
            backward_columns.append(left.coordinates(flat))
    suite.add('inverse_well_defined', len(backward_columns) == right.dim)
    complete = len(forward_columns) == left.dim and len(backward_columns) == right.dim
    forward = LinMap.from_columns(forward_columns, right.dim, field) if complete else LinMap.zero(right.dim, left.dim, field)
    backward = LinMap.from_columns(backward_columns, left.dim, field) if complete else LinMap.zero(left.dim, right.dim, field)
    suite.add('backward_after_forward', complete and backward @ forward == identity(left.dim, field))
    suite.add('forward_after_backward', complete and forward @ backward == identity(right.dim, field))
    return HomBijection(forward, backward, left, right, suite)


def adjunction_naturality_check(M: RelHopfModuleData, M2: RelHopfModuleData, f: LinMap,
                                N: ComoduleData, N2: ComoduleData | None = None, g: LinMap | None = None) -> CheckSuite:
    """``Delta(phi f) = Delta(phi) f`` for ``f : M -> M2`` and ``Delta(g phi) = HOM~(A, g) Delta(phi)``."""
    field = M.field
    suite = CheckSuite('hom_adjunction_naturality')
    a = M.base.dim
    for index, vector in enumerate(hom_colinear(M2.comodule, N).basis):
        phi = unflatten_map(vector, N.dim, M2.dim, field)
        compare_maps(suite, f'source_square[{index}]', _phi_tilde(phi @ f, M), _phi_tilde(phi, M2) @ f,
                     [M.comodule.basis_labels()], [[f'f{i}' for i in range(N.dim * a)]])
    if N2 is not None and g is not None:
        post = left_composition_operator(g, a)
        for index, vector in enumerate(hom_colinear(M.comodule, N).basis):
            phi = unflatten_map(vector, N.dim, M.dim, field)
            compare_maps(suite, f'target_square[{index}]', _phi_tilde(g @ phi, M), post @ _phi_tilde(phi, M),
                         [M.comodule.basis_labels()], [[f'f{i}' for i in range(N2.dim * a)]])
    return suite


# comonads on vector spaces


class TensorComonad:
    """``- (x) D`` with ``id (x) eps`` and ``id (x) Delta``."""

    def __init__(self, D: CoalgebraData):
        self.D = D
        self.field = D.field

    def apply(self, v):
        return v * self.D.dim

    def apply_map(self, f: LinMap):
        return tensor_of_maps(f, identity(self.D.dim, self.field))

    def counit(self, v):
        return tensor_of_maps(identity(v, self.field), self.D.counit)

    def comult(self, v):
        return tensor_of_maps(identity(v, self.field), self.D.comult)


class IdentityComonad:
    def __init__(self, field):
        self.field = field

    def apply(self, v):
        return v

    def apply_map(self, f):
        return f

    def counit(self, v):
        return identity(v, self.field)

    def comult(self, v):
        return identity(v, self.field)


class HomComonad:
    """``V -> HOM~(A, V (x) H)`` on vector spaces, from ``Forget o Ind -| HOM~(A, - (x) H)``."""

    def __init__(self, base: ComoduleAlgebraData):
        self.base = base
        self.H = base.hopf
        self.field = self.H.field
        self._cache = {}

    def cofree(self, v) -> ComoduleData:
        return ComoduleData(v * self.H.dim, tensor_of_maps(identity(v, self.field), self.H.comult),
                            self.H.coalgebra, RIGHT)

    def hom(self, v) -> InternalHomData:
        if v not in self._cache:
            self._cache[v] = internal_hom(self.base, self.cofree(v))
        return self._cache[v]

    def apply(self, v):
        return self.hom(v).carrier.dim

    def apply_map(self, f: LinMap):
        source, target = self.hom(f.cols), self.hom(f.rows)
        post = left_composition_operator(tensor_of_maps(f, identity(self.H.dim, self.field)), self.base.dim)
        return post.restrict(source.carrier, target.carrier)

    def counit(self, v):
        """``f -> (id (x) eps)(f(1))``."""
        evaluate = _evaluation_at_one(self.base, v * self.H.dim)
        return tensor_of_maps(identity(v, self.field), self.H.counit) @ evaluate @ self.hom(v).carrier.inclusion()

    def unit_on(self, M: RelHopfModuleData) -> LinMap:
        """``m -> (a -> rho(m a))`` into ``HOM~(A, M (x) H)``."""
        target = self.hom(M.dim)
        ambient = _phi_tilde(M.comodule.coaction, M)
        return ambient.restrict(Subspace.full(M.dim, self.field), target.carrier)

    def comult(self, v):
        return self.unit_on(self.hom(v).relative)


@dataclass
class ComonadCoalgebra:
    coalgebra: CoalgebraData
    certificate: CheckSuite
    assumed: tuple = (ASSUMED_COCONTINUITY,)


def additivity_witness(G, v) -> LinMap:
    """``V (x) G(k) -> G(V)`` assembled from ``G(e_i)`` for the basis inclusions ``e_i : k -> V``."""
    field = G.field
    blocks = [G.apply_map(LinMap.from_columns([field.unit_vector(v, i)], v, field)) for i in range(v)]
    if not blocks:
        return LinMap.zero(G.apply(0), 0, field)
    return LinMap.hstack(blocks)


def comonad_coalgebra(G, samples=(1, 2), labels=None) -> ComonadCoalgebra:
    """``C = G(k)`` with ``Delta_C = w^-1 delta_k`` and ``eps_C = eps_k``; ``G(V) ~ V (x) C`` checked on samples."""
    field = G.field
    c = G.apply(1)
    suite = CheckSuite('comonad_coalgebra')
    w_c = additivity_witness(G, c)
    suite.add('witness_C_bijective', w_c.is_invertible(), {'rank': w_c.rank(), 'dim': c * c})
    if not w_c.is_invertible():
        raise VerificationFailed('G(G(k)) is not G(k) (x) G(k)', suite)
    comult = w_c.inverse() @ G.comult(1)
    C = CoalgebraData(c, comult, G.counit(1), tuple(labels or (f'c{i}' for i in range(c))))
    suite.extend(check_coalgebra_axioms(C).checks, 'coalgebra_')
    for v in samples:
        w = additivity_witness(G, v)
        bijective = w.is_invertible()
        suite.add(f'dim{v}_additive', bijective, {'rank': w.rank(), 'dim': v * c})
        if not bijective:
            continue
        compare_maps(suite, f'dim{v}_counit', G.counit(v) @ w,
                     tensor_of_maps(identity(v, field), C.counit),
                     [[f'v{i}' for i in range(v)], list(C.labels)], [[f'v{i}' for i in range(v)]])
        lifted = G.apply_map(w) @ additivity_witness(G, v * c) @ tensor_of_maps(identity(v, field), comult)
        compare_maps(suite, f'dim{v}_comult', G.comult(v) @ w, lifted,
                     [[f'v{i}' for i in range(v)], list(C.labels)], [[f'w{i}' for i in range(lifted.rows)]])
    if not suite.passed:
        raise VerificationFailed('comonad does not come from a coalgebra', suite)
    return ComonadCoalgebra(C, suite)


def comparison_comodule(G: HomComonad, C: CoalgebraData, M: RelHopfModuleData) -> ComoduleData:
    """``F(M)`` with ``w^-1 F(eta_M)``, as a right ``C``-comodule."""
    coaction = additivity_witness(G, M.dim).inverse() @ G.unit_on(M)
    return ComoduleData(M.dim, coaction, C, RIGHT)


# the quotient side


def surjectivity_from_coflatness(Q: QuotientModuleCoalgebraData, seed=0) -> CheckSuite:
    """``H -> H []_B H -> B []_B H -> H`` is the identity, and ``rank pi = dim B``."""
    H, B, psi = Q.hopf, Q.coalgebra, Q.psi
    field = H.field
    suite = CheckSuite('surjectivity_from_coflatness')
    suite.checks.append(is_faithfully_coflat(Q, RIGHT, seed).as_check('faithfully_coflat'))
    rank = Q.pi.rank()
    suite.add('pi_surjective', rank == B.dim, {'rank': rank, 'dim_B': B.dim})
    right = corestrict(psi, regular_comodule(H.coalgebra, RIGHT))
    left = corestrict(psi, regular_comodule(H.coalgebra, LEFT))
    S_HH = cotensor(right, left)
    S_BH = cotensor(regular_comodule(B, RIGHT), left)
    try:
        into = H.comult.restrict(Subspace.full(H.dim, field), S_HH)
        across = cotensor_map(Q.pi, identity(H.dim, field), S_HH, S_BH)
    except DimensionMismatch as error:
        suite.add('composite_defined', False, {'detail': '; '.join(error.messages)})
        return suite
    back = tensor_of_maps(B.counit, identity(H.dim, field)) @ S_BH.inclusion()
    suite.add('counit_iso', back.is_invertible(), {'rank': back.rank(), 'dim': H.dim})
    labels = [list(H.labels)]
    compare_maps(suite, 'composite_identity', back @ across @ into, identity(H.dim, field), labels, labels)
    return suite


@dataclass
class GammaData:
    gamma: LinMap
    gamma_tilde: LinMap
    domain_dim: int
    certificate: CheckSuite


def _gamma_ambient(X: ComoduleData, m, H: HopfAlgebraData, antipode=False):
    field = H.field
    x, h = X.dim, H.dim
    leg = tensor_maps(identity(x, field), H.antipode, identity(m, field), identity(h, field)) if antipode \
        else identity(x * h * m * h, field)
    shuffle = tensor_maps(identity(x, field), flip_map(h, m, field), identity(h, field))
    multiply = tensor_maps(identity(x, field), identity(m, field), H.mult)
    lift = tensor_maps(X.coaction, identity(m, field), identity(h, field))
    return multiply @ shuffle @ leg @ lift


def gamma_isomorphism(X: ComoduleData, M: ComoduleData, Q: QuotientModuleCoalgebraData,
                      seed=0, samples=100) -> GammaData:
    """``x (x) (m (x) h) -> (x_0 (x) m) (x) x_1 h`` and ``(x (x) m) (x) h -> x_0 (x) (m (x) S(x_1) h)``."""
    H, B = Q.hopf, Q.coalgebra
    field = H.field
    suite = CheckSuite('gamma')
    suite.checks.append(antipode_bijective(H))
    suite.checks.append(is_faithfully_coflat(Q, RIGHT, seed).as_check('faithfully_coflat'))
    bicomodule = regular_bicomodule_along(Q.psi)
    S_M, MH = cotensor_comodule(M, bicomodule)
    XM = sigma_action(X, M, Q.sigma, B)
    S_XM, XMH = cotensor_comodule(XM, bicomodule)
    J = tensor_of_maps(identity(X.dim, field), S_M.inclusion())
    domain = image_of(J)
    gamma_full = _gamma_ambient(X, M.dim, H)
    tilde_full = _gamma_ambient(X, M.dim, H, antipode=True)

    gamma_image = gamma_full @ J
    bad = next((c for c in range(gamma_image.cols) if not S_XM.contains(gamma_image.column(c))), None)
    suite.add('gamma_well_defined', bad is None,
              None if bad is None else {'domain_basis': bad, 'membership': 'gamma(x (x) m (x) h) in (X (x) M) [] H'})
    tilde_image = tilde_full @ S_XM.inclusion()
    bad_tilde = next((c for c in range(tilde_image.cols) if not domain.contains(tilde_image.column(c))), None)
    suite.add('gamma_tilde_well_defined', bad_tilde is None,
              None if bad_tilde is None else {'cotensor_basis': bad_tilde, 'membership': 'gamma~ lands in X (x) (M [] H)'})
    if bad is not None or bad_tilde is not None:
        return GammaData(LinMap.zero(S_XM.dim, J.cols, field), LinMap.zero(J.cols, S_XM.dim, field), J.cols, suite)

    gamma = S_XM.coordinate_map() @ gamma_image
    gamma_tilde = tensor_of_maps(identity(X.dim, field), S_M.coordinate_map()) @ tilde_image
    suite.add('dims_agree', J.cols == S_XM.dim, {'domain': J.cols, 'codomain': S_XM.dim})
    suite.add('tilde_after_gamma', gamma_tilde @ gamma == identity(J.cols, field))
    suite.add('gamma_after_tilde', gamma @ gamma_tilde == identity(S_XM.dim, field))
    source = tensor_comodules(X, MH, H)
    suite.add('gamma_colinear', is_colinear(gamma, source, XMH))

    rng = random.Random(seed)
    exact = 0
    for _ in range(samples):
        v = domain.random_element(rng)
        if tilde_full.apply(gamma_full.apply(v)) == v:
            exact += 1
    suite.add('random_roundtrip', exact == samples, {'seed': seed, 'samples': samples, 'exact': exact})
    return GammaData(gamma, gamma_tilde, J.cols, suite)


# module-functor hypotheses


def module_functor_checks(H: HopfAlgebraData, A: CoidealSubalgebraData | None = None,
                          Q: QuotientModuleCoalgebraData | None = None, samples=(), induce=None) -> CheckSuite:
    """Which module-functor hypotheses hold on the samples, each reported by name.

    With ``A``: induction ``V -> V (x) A`` (or ``induce``) must satisfy
    ``Ind(X (x) V) = X (x) Ind(V)`` with coaction and ``A``-action equal, and
    ``X (x) M`` must stay a relative Hopf module for every induced ``M``.
    With ``Q``: corestriction must carry ``X (x) V`` to ``X . V`` over ``H/HA+``.
    """
    suite = CheckSuite('module_functor_hypotheses')
    pairs = [(f'{xn},{vn}', X, V) for xn, X in samples for vn, V in samples]
    if A is not None:
        base = A.comodule_algebra
        induce = induce or (lambda V: free_relative_module(V, base))
        ind_broken, res_broken = [], []
        for name, X, V in pairs:
            left = induce(tensor_comodules(X, V, H))
            right = tensor_module_action(X, induce(V))
            if left.comodule != right.comodule or left.module.action != right.module.action:
                ind_broken.append(name)
            lhs, rhs = action_colinearity_maps(right)
            if lhs != rhs:
                res_broken.append(name)
        suite.add('res_module_functor', not res_broken, {'pairs': res_broken} if res_broken else None)
        suite.add('ind_module_functor', not ind_broken, {'pairs': ind_broken} if ind_broken else None)
    if Q is not None:
        broken = []
        for name, X, V in pairs:
            lhs = corestrict(Q.psi, tensor_comodules(X, V, H))
            rhs = sigma_action(X, corestrict(Q.psi, V), Q.sigma, Q.coalgebra)
            if lhs.coaction != rhs.coaction:
                broken.append(name)
        suite.add('corestriction_module_functor', not broken, {'pairs': broken} if broken else None)
    return suite


@dataclass
class QuotientPipelineResult:
    subalgebra: CoidealSubalgebraData
    flat: Any
    certificate: CheckSuite
    hypotheses: dict[str, bool] = dataclass_field(default_factory=dict)
    functor: str = FUNCTOR_DERIVED
    assumed: tuple = (ASSUMED_LOCAL_PRESENTABILITY,)


def run_quotient_pipeline(Q: QuotientModuleCoalgebraData, seed=0, coaction: LinMap | None = None
                          ) -> QuotientPipelineResult:
    """From a coflat quotient to its coideal subalgebra; halts with the stage name on the first failure.

    ``coaction`` is the functor's value on ``H``: a right ``B``-coaction on
    the carrier of ``H``. Without it the coaction is built from ``Q.pi`` and
    the ``recover`` stage only confirms that construction.
    """
    H, B = Q.hopf, Q.coalgebra
    field = H.field
    suite = CheckSuite('quotient_pipeline')

    def stage(name, certificate):
        suite.extend(certificate.checks, f'{name}_')
        if not certificate.passed:
            raise PipelineHalted(name, certificate)

    source = FUNCTOR_DERIVED if coaction is None else FUNCTOR_SUPPLIED
    lam = tensor_of_maps(identity(H.dim, field), Q.pi) @ H.comult if coaction is None else coaction
    try:
        psi = recover_coalgebra_map(lam, H.coalgebra, B)
    except VerificationFailed as error:
        raise PipelineHalted('recover', error.certificate) from error
    recovered = CheckSuite('recover')
    recovered.add('matches_pi', psi.matrix == Q.pi, {'functor': source})
    stage('recover', recovered)
    stage('quotient', Q.certificate)
    coflat = CheckSuite('coflat')
    coflat.checks.append(is_faithfully_coflat(Q, RIGHT, seed).as_check('right'))
    stage('coflat', coflat)
    stage('surjectivity', surjectivity_from_coflatness(Q, seed))
    samples = [('k', trivial_comodule(H)), ('H', regular_comodule(H.coalgebra))]
    adjunction = corestriction_monad_adjunction(Q)
    stage('module_functor', adjunction.verify_hypotheses(samples))

    try:
        A = coinvariants(Q)
    except VerificationFailed as error:
        raise PipelineHalted('coinvariants', error.certificate) from error
    try:
        monad = monad_from_adjunction(adjunction, [('I', samples[0][1]), ('H', samples[1][1])])
        unit = unit_object_algebra(monad, samples[0][1])
    except VerificationFailed as error:
        raise PipelineHalted('monad', error.certificate) from error
    comparison = CheckSuite('monad')
    comparison.extend(monad.certificate.checks)
    S_I, _ = coinduce(Q.psi, corestrict(Q.psi, samples[0][1]))
    comparison.add('unit_object_is_coinvariants', S_I == A.subspace, {'dim_T(I)': S_I.dim, 'dim_A': A.dim})
    restricted = restrict_algebra(H.algebra, A.subspace)
    comparison.add('multiplication_is_restriction', S_I == A.subspace and unit.algebra.mult == restricted.mult)
    stage('monad', comparison)
    flat = is_faithfully_flat(A, LEFT, seed)
    flatness = CheckSuite('flat')
    flatness.checks.append(flat.as_check('left'))
    stage('flat', flatness)
    logger.info('quotient pipeline: dim A = %s over dim H = %s', A.dim, H.dim)
    return QuotientPipelineResult(A, flat, suite, dict(adjunction.hypotheses), source)
