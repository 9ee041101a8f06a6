"""Coideal subalgebras, quotient module coalgebras and faithful (co)flatness.

A right coideal subalgebra ``A`` of ``H`` gives the quotient left ``H``-module
coalgebra ``H_A = H / H A+``; a quotient ``pi : H -> B`` gives back its
coinvariants. Flatness over finite-dimensional algebras is decided as
projectivity plus nonvanishing on simple modules.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property

from . import choices
from .checks import Check, CheckSuite
from .exceptions import VerificationFailed
from .hopf import (
    AlgebraData,
    CoalgebraData,
    CoalgebraMap,
    HopfAlgebraData,
    PairingData,
    check_coalgebra_axioms,
    check_coalgebra_map,
    compare_maps,
    dual_algebra,
    hit_action,
    restrict_algebra,
    subspace_labels,
    tensor_label,
)
from .linalg import (
    LinMap,
    Subspace,
    canonicalize_subspace,
    commuting_constraint,
    find_section,
    flip_map,
    identity,
    image_of,
    kernel_of,
    tensor_maps,
    tensor_of_maps,
)
from .reps import (
    LEFT,
    RIGHT,
    ComoduleData,
    ModuleData,
    RelHopfModuleData,
    check_representation,
    coinduce,
    comodule_from_dual_module,
    corestrict,
    dual_module,
    find_isomorphism,
    find_proper_submodule,
    hom_modules,
    invariant_closure,
    is_colinear,
    is_cosemisimple,
    is_K_semisimple,
    is_module_map,
    quotient_module,
    radical_and_simples,
    regular_comodule,
    regular_module,
    subalgebra_comodule_algebra,
    submodule,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoidealSubalgebraData:
    hopf: HopfAlgebraData
    subspace: Subspace
    certificate: CheckSuite
    side: str = RIGHT
    hit_convention: str | None = None

    @property
    def is_subalgebra(self):
        return all(self.certificate[name].passed for name in ('contains_unit', 'closed_under_product'))

    @property
    def is_coideal(self):
        return self.certificate['coideal'].passed

    @property
    def verified(self):
        return self.certificate.passed

    @property
    def dim(self):
        return self.subspace.dim

    def require_verified(self):
        if not self.verified:
            raise VerificationFailed('subspace is not a coideal subalgebra', self.certificate)
        return self

    @cached_property
    def labels(self):
        return subspace_labels(self.subspace, self.hopf.labels, self.hopf.field)

    @cached_property
    def algebra(self) -> AlgebraData:
        return restrict_algebra(self.hopf.algebra, self.subspace, self.labels)

    @cached_property
    def comodule_algebra(self):
        return subalgebra_comodule_algebra(self.hopf, self.subspace, self.labels)


@dataclass(frozen=True)
class QuotientModuleCoalgebraData:
    hopf: HopfAlgebraData
    coalgebra: CoalgebraData
    pi: LinMap
    sigma: LinMap

    @property
    def dim(self):
        return self.coalgebra.dim

    @cached_property
    def psi(self) -> CoalgebraMap:
        return CoalgebraMap(self.hopf.coalgebra, self.coalgebra, self.pi)

    @cached_property
    def kernel(self) -> Subspace:
        return kernel_of(self.pi)

    @cached_property
    def certificate(self) -> CheckSuite:
        return check_quotient_module_coalgebra(self)

    def require_verified(self):
        if not self.certificate.passed:
            raise VerificationFailed('not a quotient left module coalgebra', self.certificate)
        return self


def verify_coideal_subalgebra(H: HopfAlgebraData, S: Subspace, side=RIGHT) -> CoidealSubalgebraData:
    """Certificates by exact membership tests on the echelon basis of ``S``."""
    field = H.field
    names = subspace_labels(S, H.labels, field)
    suite = CheckSuite('coideal_subalgebra')
    suite.add('contains_unit', S.contains(H.one),
              None if S.contains(H.one) else {'inclusion': '1 in A'})

    failure = None
    for i, u in enumerate(S.basis):
        for j, v in enumerate(S.basis):
            if not S.contains(H.product(u, v)):
                failure = {'basis': [names[i], names[j]], 'inclusion': 'm(A (x) A) in A'}
                break
        if failure:
            break
    suite.add('closed_under_product', failure is None, failure)

    if side == RIGHT:
        coordinates = S.tensor_coordinate_map(H.dim)
        back = tensor_of_maps(S.inclusion(), identity(H.dim, field))
        inclusion = 'Delta(A) in A (x) H'
    else:
        coordinates = S.left_tensor_coordinate_map(H.dim)
        back = tensor_of_maps(identity(H.dim, field), S.inclusion())
        inclusion = 'Delta(A) in H (x) A'
    failure = None
    for i, u in enumerate(S.basis):
        image = H.coproduct(u)
        if back.apply(coordinates.apply(image)) != image:
            failure = {'basis': names[i], 'inclusion': inclusion,
                       'coproduct': {tensor_label(k, [H.labels, H.labels]): field.format(x)
                                     for k, x in enumerate(image) if not field.is_zero(x)}}
            break
    suite.add('coideal', failure is None, failure)
    return CoidealSubalgebraData(H, S, suite, side)


def augmentation_ideal(A: CoidealSubalgebraData) -> Subspace:
    """``A+ = A cap ker eps``."""
    return A.subspace.intersect(kernel_of(A.hopf.counit))


def left_ideal_generated(H: HopfAlgebraData, S: Subspace) -> Subspace:
    """``H S`` as the image of ``m`` on ``H (x) S``."""
    return image_of(H.mult @ tensor_of_maps(identity(H.dim, H.field), S.inclusion()))


def check_quotient_module_coalgebra(Q: QuotientModuleCoalgebraData) -> CheckSuite:
    H, B, pi, sigma = Q.hopf, Q.coalgebra, Q.pi, Q.sigma
    field = H.field
    h_labels, b_labels = list(H.labels), list(B.labels)
    suite = CheckSuite('quotient_module_coalgebra')
    rank = pi.rank()
    suite.add('surjective', rank == B.dim, {'rank': rank, 'dim': B.dim} if rank != B.dim else None)

    I = Q.kernel
    inclusion = I.inclusion()
    coideal_defect = tensor_of_maps(pi, pi) @ H.comult @ inclusion
    counit_defect = H.counit @ inclusion
    bad = coideal_defect.first_difference(LinMap.zero(*coideal_defect.shape, field)) \
        or counit_defect.first_difference(LinMap.zero(*counit_defect.shape, field))
    suite.add('kernel_coideal', bad is None,
              {'kernel_basis': subspace_labels(I, H.labels, field)[bad[1]]} if bad else None)
    ideal_defect = pi @ H.mult @ tensor_of_maps(identity(H.dim, field), inclusion)
    bad = ideal_defect.first_difference(LinMap.zero(*ideal_defect.shape, field))
    suite.add('kernel_left_ideal', bad is None,
              {'pair': tensor_label(bad[1], [h_labels, subspace_labels(I, H.labels, field)])} if bad else None)

    suite.extend(check_coalgebra_axioms(B).checks, 'quotient_')
    suite.extend(check_coalgebra_map(Q.psi).checks, 'pi_')
    suite.extend(check_representation(ModuleData(B.dim, sigma, H.algebra, LEFT, tuple(b_labels))).checks,
                 'sigma_')
    compare_maps(suite, 'pi_H_linear', pi @ H.mult, sigma @ tensor_of_maps(identity(H.dim, field), pi),
                 [h_labels, h_labels], [b_labels])
    shuffle = tensor_maps(identity(H.dim, field), flip_map(H.dim, B.dim, field), identity(B.dim, field))
    compare_maps(suite, 'sigma_coalgebra_map', B.comult @ sigma,
                 tensor_of_maps(sigma, sigma) @ shuffle @ tensor_of_maps(H.comult, B.comult),
                 [h_labels, b_labels], [b_labels, b_labels])
    return suite


def quotient_from_ideal(H: HopfAlgebraData, ideal: Subspace) -> QuotientModuleCoalgebraData:
    """``H / I`` with the structure induced through the complement section."""
    field = H.field
    pi, section = ideal.quotient_map(), ideal.quotient_section()
    labels = tuple(f'[{H.labels[j]}]' for j in ideal.complement_indices)
    comult = tensor_of_maps(pi, pi) @ H.comult @ section
    counit = H.counit @ section
    B = CoalgebraData(pi.rows, comult, counit, labels)
    sigma = pi @ H.mult @ tensor_of_maps(identity(H.dim, field), section)
    return QuotientModuleCoalgebraData(H, B, pi, sigma)


def quotient_module_coalgebra(A: CoidealSubalgebraData) -> QuotientModuleCoalgebraData:
    """``H_A = H / H A+``, verified before it is returned."""
    A.require_verified()
    H = A.hopf
    ideal = left_ideal_generated(H, augmentation_ideal(A))
    Q = quotient_from_ideal(H, ideal)
    if not Q.certificate.passed:
        raise VerificationFailed('induced quotient is not a module coalgebra', Q.certificate)
    logger.debug('H_A has dim %s (H A+ has dim %s)', Q.dim, ideal.dim)
    return Q


def coinvariants(Q: QuotientModuleCoalgebraData) -> CoidealSubalgebraData:
    """``{h : pi(h_1) (x) h_2 = pi(1) (x) h}``."""
    H, field = Q.hopf, Q.hopf.field
    one_image = LinMap.from_columns([Q.pi.apply(H.one)], Q.dim, field)
    difference = tensor_of_maps(Q.pi, identity(H.dim, field)) @ H.comult \
        - tensor_of_maps(one_image, identity(H.dim, field))
    A = verify_coideal_subalgebra(H, kernel_of(difference))
    if not A.verified:
        raise VerificationFailed('coinvariants are not a coideal subalgebra', A.certificate)
    return A


# flatness


def hopf_as_module(A: CoidealSubalgebraData, side=RIGHT) -> ModuleData:
    """``H`` as a module over ``A`` by multiplication on the given side."""
    H = A.hopf
    own = identity(H.dim, H.field)
    inclusion = A.subspace.inclusion()
    lift = tensor_of_maps(own, inclusion) if side == RIGHT else tensor_of_maps(inclusion, own)
    return ModuleData(H.dim, H.mult @ lift, A.algebra, side, tuple(H.labels))


def module_generators(M: ModuleData):
    """Greedy basis-vector generating set."""
    operators = M.basis_operators()
    generated = Subspace.zero(M.dim, M.field)
    chosen = []
    for i in range(M.dim):
        vector = M.field.unit_vector(M.dim, i)
        if not generated.contains(vector):
            chosen.append(i)
            generated = invariant_closure(operators, list(generated.basis) + [vector], M.dim, M.field)
    return chosen


class BalancedTensor:
    """``M (x)_A -`` (or ``- (x)_A M`` for left ``M``) on modules of the opposite side."""

    def __init__(self, M: ModuleData):
        self.M = M

    def _ordered(self, X: ModuleData):
        return (self.M, X) if self.M.side == RIGHT else (X, self.M)

    def relations(self, X: ModuleData) -> Subspace:
        R, L = self._ordered(X)
        field = R.field
        rel = tensor_of_maps(R.action, identity(L.dim, field)) - tensor_of_maps(identity(R.dim, field), L.action)
        return image_of(rel)

    def dim(self, X: ModuleData):
        return self.M.dim * X.dim - self.relations(X).dim

    def arrow(self, f: LinMap, X: ModuleData, Y: ModuleData) -> LinMap:
        own = identity(self.M.dim, self.M.field)
        lifted = tensor_of_maps(own, f) if self.M.side == RIGHT else tensor_of_maps(f, own)
        return self.relations(Y).quotient_map() @ lifted @ self.relations(X).quotient_section()


@dataclass
class FlatnessVerdict:
    side: str
    projective: bool
    generators: list
    section: LinMap | None
    tensor_dims: list = dataclass_field(default_factory=list)

    @property
    def passed(self):
        return self.projective and all(d > 0 for d in self.tensor_dims)

    def __bool__(self):
        return self.passed

    def evidence(self):
        data = {
            'side': self.side,
            'projective': self.projective,
            'generators': self.generators,
            'tensor_with_simples': self.tensor_dims,
        }
        if self.section is not None:
            data['section_rank'] = self.section.rank()
        return data

    def as_check(self, name):
        return Check(name, self.passed, self.evidence())


def free_cover(M: ModuleData):
    """``A^n -> M`` on a greedy generating set; returns ``(generators, p, free operators)``."""
    A, field = M.over, M.field
    generators = module_generators(M)
    operators = M.basis_operators()
    regular = regular_module(A, M.side).basis_operators()
    free_ops = [tensor_of_maps(identity(len(generators), field), op) for op in regular]
    entries = {}
    for k, g in enumerate(generators):
        for j, op in enumerate(operators):
            for row, value in op.column_dict(g).items():
                entries[(row, k * A.dim + j)] = value
    p = LinMap(M.dim, len(generators) * A.dim, field, entries)
    return generators, p, operators, free_ops


def module_flatness(M: ModuleData, seed=0) -> FlatnessVerdict:
    """Projectivity via an ``A``-linear splitting of the free cover, then ``M (x)_A S`` on simples."""
    if M.dim == 0:
        return FlatnessVerdict(M.side, True, [], None, [0])
    generators, p, operators, free_ops = free_cover(M)
    constraints = [commuting_constraint(X, Y, p.cols, p.rows) for X, Y in zip(operators, free_ops)]
    section = find_section(p, constraints)
    other = LEFT if M.side == RIGHT else RIGHT
    simples = radical_and_simples(M.over, other, seed).simples
    functor = BalancedTensor(M)
    dims = [functor.dim(S) for S in simples]
    return FlatnessVerdict(M.side, section is not None, generators, section, dims)


def is_faithfully_flat(A: CoidealSubalgebraData, side=RIGHT, seed=0) -> FlatnessVerdict:
    A.require_verified()
    return module_flatness(hopf_as_module(A, side), seed)


def hopf_as_quotient_comodule(Q: QuotientModuleCoalgebraData, side=RIGHT) -> ComoduleData:
    """``H`` as a ``B``-comodule through ``pi`` on the given side."""
    return corestrict(Q.psi, regular_comodule(Q.hopf.coalgebra, side))


def is_faithfully_coflat(Q: QuotientModuleCoalgebraData, side=RIGHT, seed=0) -> FlatnessVerdict:
    """Decided on the dual: ``H*`` faithfully flat over ``B*``."""
    Q.require_verified()
    return module_flatness(dual_module(hopf_as_quotient_comodule(Q, side)), seed)


def direct_sum(S: ModuleData, T: ModuleData) -> ModuleData:
    n, a = S.dim + T.dim, S.over.dim
    entries = {}
    for offset, part in ((0, S), (S.dim, T)):
        for (row, column), value in part.action.entries.items():
            if S.side == RIGHT:
                m, b = divmod(column, a)
                entries[(row + offset, (m + offset) * a + b)] = value
            else:
                b, m = divmod(column, part.dim)
                entries[(row + offset, b * n + m + offset)] = value
    return ModuleData(n, LinMap(n, n * a, S.field, entries), S.over, S.side)


def composition_chain(X: ModuleData, seed=0) -> list[Subspace]:
    """A composition series ``X > W_1 > ... > W_r > 0`` of submodules, as subspaces of ``X``."""
    W = find_proper_submodule(X.basis_operators(), X.dim, X.field, seed)
    if W is None:
        return []
    section = W.quotient_section()
    upper = [W.join(image_of(section @ U.inclusion())) for U in composition_chain(quotient_module(X, W), seed)]
    inclusion = W.inclusion()
    lower = [image_of(inclusion @ V.inclusion()) for V in composition_chain(submodule(X, W), seed)]
    return upper + [W] + lower


def sequence_splits(X: ModuleData, W: Subspace, seed=0) -> bool:
    """``0 -> W -> X -> X/W -> 0`` splits exactly when ``X`` is isomorphic to ``W + X/W``."""
    total = direct_sum(submodule(X, W), quotient_module(X, W))
    return find_isomorphism(hom_modules(X, total), total.dim, X.dim, seed) is not None


def _short_exact_family(A: AlgebraData, side, seed, max_dim=6):
    """Sequences ``0 -> W -> X -> X/W -> 0`` with ``dim X <= max_dim`` and the complexes beside them.

    ``X`` runs over the regular module, its quotients along a composition
    chain and sums of two simples. Each step ``W' < W`` of a chain of ``X``
    also gives the complex ``0 -> W' -> X -> X/W -> 0``, which fails to be
    exact at ``X`` with homology ``W/W'``.
    """
    data = radical_and_simples(A, side, seed)
    sequences, complexes, carriers = [], [], []
    if A.dim <= max_dim:
        regular = regular_module(A, side)
        carriers.append(('regular', regular))
        if 0 < data.radical.dim < A.dim:
            sequences.append(('regular/radical', data.radical, regular))
        for k, W in enumerate(composition_chain(regular, seed)):
            carriers.append((f'regular/W{k}', quotient_module(regular, W)))
    for name, X in carriers:
        chain = composition_chain(X, seed)
        below = chain[1:] + [Subspace.zero(X.dim, X.field)]
        for k, (W, smaller) in enumerate(zip(chain, below)):
            label = f'{name}>{k}:{"split" if sequence_splits(X, W, seed) else "non-split"}'
            sequences.append((label, W, X))
            complexes.append((label, smaller, W, X))
    for i, S in enumerate(data.simples):
        for j, T in enumerate(data.simples[i:], start=i):
            if S.dim + T.dim <= max_dim:
                X = direct_sum(S, T)
                first = canonicalize_subspace([A.field.unit_vector(X.dim, k) for k in range(S.dim)],
                                              X.dim, A.field)
                sequences.append((f'simple{i}+simple{j}', first, X))
    return data.simples, sequences, complexes


def flatness_exactness_oracle(M: ModuleData, verdict: FlatnessVerdict | None = None, seed=0) -> CheckSuite:
    """Definitional preserve-and-reflect check on a finite family of sequences."""
    if verdict is None:
        verdict = module_flatness(M, seed)
    functor = BalancedTensor(M)
    side = LEFT if M.side == RIGHT else RIGHT
    simples, sequences, complexes = _short_exact_family(M.over, side, seed)
    suite = CheckSuite('flatness_oracle')
    preserved = True
    for name, W, X in sequences:
        sub, quotient = submodule(X, W), quotient_module(X, W)
        Fi = functor.arrow(W.inclusion(), sub, X)
        Fq = functor.arrow(W.quotient_map(), X, quotient)
        injective = Fi.rank() == Fi.cols
        surjective = Fq.rank() == Fq.rows
        middle = (Fq @ Fi).is_zero() and Fq.cols - Fq.rank() == Fi.rank()
        exact = injective and surjective and middle
        preserved = preserved and exact
        suite.add(f'preserves[{name}]', exact or not verdict.passed,
                  {'injective': injective, 'middle': middle, 'surjective': surjective})
    reflected = True
    for i, S in enumerate(simples):
        # 0 -> 0 -> S -> 0 -> 0 is not exact; its image must not be either
        stays_non_exact = functor.dim(S) > 0
        reflected = reflected and stays_non_exact
        suite.add(f'reflects[simple{i}]', stays_non_exact or not verdict.passed,
                  {'tensor_dim': functor.dim(S)})
    for name, smaller, W, X in complexes:
        Fq = functor.arrow(W.quotient_map(), X, quotient_module(X, W))
        image = 0
        if smaller.dim:
            image = functor.arrow(smaller.inclusion(), submodule(X, smaller), X).rank()
        homology = Fq.cols - Fq.rank() - image
        reflected = reflected and homology > 0
        suite.add(f'reflects[{name}]', homology > 0 or not verdict.passed,
                  {'homology_dim': homology, 'quotient_dim': W.dim - smaller.dim})
    definitional = preserved and reflected
    suite.add('oracle_agrees', definitional == verdict.passed,
              {'definitional': definitional, 'verdict': verdict.passed})
    return suite


# the correspondence


def quotient_isomorphism(Q: QuotientModuleCoalgebraData, R: QuotientModuleCoalgebraData):
    """The map ``B_R -> B_Q`` commuting with the projections, with its certificate."""
    suite = CheckSuite('quotient_isomorphism')
    same_kernel = Q.kernel == R.kernel
    suite.add('same_kernel', same_kernel, {'kernel_dims': [Q.kernel.dim, R.kernel.dim]})
    if not same_kernel:
        return None, suite
    phi = Q.pi @ R.kernel.quotient_section()
    suite.add('bijective', phi.is_invertible(), {'rank': phi.rank()})
    compare_maps(suite, 'commutes_with_projections', phi @ R.pi, Q.pi,
                 [list(Q.hopf.labels)], [list(Q.coalgebra.labels)])
    suite.extend(check_coalgebra_map(CoalgebraMap(R.coalgebra, Q.coalgebra, phi)).checks, 'coalgebra_')
    return phi, suite


def roundtrip_correspondence(H: HopfAlgebraData, subalgebras=(), quotients=(), seed=0) -> CheckSuite:
    suite = CheckSuite('roundtrip')
    for index, A in enumerate(subalgebras):
        name = f'A[{index}]'
        Q = quotient_module_coalgebra(A)
        back = coinvariants(Q)
        suite.add(f'{name}_roundtrip', back.subspace == A.subspace,
                  {'dim_A': A.dim, 'dim_H_A': Q.dim, 'dim_coinvariants': back.dim})
        flat = is_faithfully_flat(A, LEFT, seed)
        coflat = is_faithfully_coflat(Q, RIGHT, seed)
        suite.add(f'{name}_flat_iff_coflat', flat.passed == coflat.passed,
                  {'flat': flat.passed, 'coflat': coflat.passed})
    for index, Q in enumerate(quotients):
        name = f'Q[{index}]'
        A = coinvariants(Q)
        R = quotient_module_coalgebra(A)
        phi, certificate = quotient_isomorphism(Q, R)
        suite.add(f'{name}_roundtrip', certificate.passed,
                  None if certificate.passed else {'failures': [c.as_dict() for c in certificate.failures]})
        flat = is_faithfully_flat(A, LEFT, seed)
        coflat = is_faithfully_coflat(Q, RIGHT, seed)
        suite.add(f'{name}_flat_iff_coflat', flat.passed == coflat.passed,
                  {'flat': flat.passed, 'coflat': coflat.passed})
    return suite


@dataclass
class Classification:
    label: str
    certificate: CheckSuite


def classify_quantum(x, seed=0) -> Classification:
    """Quantum homogeneous space, quantum subgroup or neither; flatness is required on both sides."""
    suite = CheckSuite('classification')
    if isinstance(x, CoidealSubalgebraData):
        suite.extend(x.certificate.checks, 'structure_')
        if not x.verified:
            return Classification(choices.NEITHER, suite)
        for side in (LEFT, RIGHT):
            suite.checks.append(is_faithfully_flat(x, side, seed).as_check(f'faithfully_flat_{side}'))
        label = choices.QUANTUM_HOMOGENEOUS_SPACE
    elif isinstance(x, QuotientModuleCoalgebraData):
        suite.extend(x.certificate.checks, 'structure_')
        if not x.certificate.passed:
            return Classification(choices.NEITHER, suite)
        for side in (LEFT, RIGHT):
            suite.checks.append(is_faithfully_coflat(x, side, seed).as_check(f'faithfully_coflat_{side}'))
        label = choices.QUANTUM_SUBGROUP
    else:
        raise TypeError(f'cannot classify {type(x).__name__}')
    return Classification(label if suite.passed else choices.NEITHER, suite)


# the equivalence between relative Hopf modules and B-comodules


def hopf_relative_module(A: CoidealSubalgebraData) -> RelHopfModuleData:
    """``H`` with ``Delta`` and right multiplication by ``A``."""
    H = A.hopf
    return RelHopfModuleData(regular_comodule(H.coalgebra, RIGHT), hopf_as_module(A, RIGHT), A.comodule_algebra)


def algebra_relative_module(A: CoidealSubalgebraData) -> RelHopfModuleData:
    base = A.comodule_algebra
    return RelHopfModuleData(base.as_comodule(), regular_module(base.algebra, RIGHT), base)


def augmentation_in_coordinates(A: CoidealSubalgebraData) -> Subspace:
    plus = augmentation_ideal(A)
    return canonicalize_subspace([A.subspace.coordinates(v) for v in plus.basis], A.dim, A.hopf.field)


@dataclass
class MWFunctors:
    """``Phi(M) = M / M A+`` and ``Psi(N) = N []_B H`` with their canonical maps."""

    A: CoidealSubalgebraData
    Q: QuotientModuleCoalgebraData

    @cached_property
    def plus(self):
        return augmentation_in_coordinates(self.A)

    def phi_kernel(self, M: RelHopfModuleData) -> Subspace:
        field = M.field
        return image_of(M.module.action @ tensor_of_maps(identity(M.dim, field), self.plus.inclusion()))

    def phi(self, M: RelHopfModuleData) -> ComoduleData:
        W = self.phi_kernel(M)
        q, section = W.quotient_map(), W.quotient_section()
        coaction = tensor_of_maps(q, self.Q.pi) @ M.comodule.coaction @ section
        return ComoduleData(q.rows, coaction, self.Q.coalgebra, RIGHT)

    def psi(self, N: ComoduleData):
        """Returns ``(subspace of N (x) H, relative Hopf module)``."""
        H, field = self.Q.hopf, N.field
        S, comodule = coinduce(self.Q.psi, N)
        base = self.A.comodule_algebra
        leg = H.mult @ tensor_of_maps(identity(H.dim, field), base.inclusion)
        ambient = tensor_of_maps(identity(N.dim, field), leg)
        image = ambient @ tensor_of_maps(S.inclusion(), identity(base.dim, field))
        for column in range(image.cols):
            if not S.contains(image.column(column)):
                raise VerificationFailed('A does not act on N [] H')
        module = ModuleData(S.dim, S.coordinate_map() @ image, base.algebra, RIGHT)
        return S, RelHopfModuleData(comodule, module, base)

    def unit(self, M: RelHopfModuleData):
        """``m -> (m_0 mod M A+) (x) m_1`` into ``Psi(Phi(M))``."""
        phi_M = self.phi(M)
        S, target = self.psi(phi_M)
        q = self.phi_kernel(M).quotient_map()
        ambient = tensor_of_maps(q, identity(self.Q.hopf.dim, M.field)) @ M.comodule.coaction
        return ambient.restrict(Subspace.full(M.dim, M.field), S), target

    def counit(self, N: ComoduleData):
        """``n (x) h -> n eps(h)`` out of ``Phi(Psi(N))``."""
        S, module = self.psi(N)
        W = self.phi_kernel(module)
        evaluation = tensor_of_maps(identity(N.dim, N.field), self.Q.hopf.counit) @ S.inclusion()
        well_defined = (evaluation @ W.inclusion()).is_zero()
        return evaluation @ W.quotient_section(), self.phi(module), well_defined


def mw_equivalence_check(A: CoidealSubalgebraData, test_objects=(), comodules=(), seed=0) -> CheckSuite:
    """Bijectivity of ``u_M`` on relative Hopf modules and ``c_N`` on ``B``-comodules."""
    flat = is_faithfully_flat(A, LEFT, seed)
    suite = CheckSuite('mw_equivalence')
    suite.checks.append(flat.as_check('faithfully_flat'))
    Q = quotient_module_coalgebra(A)
    functors = MWFunctors(A, Q)
    for name, M in test_objects:
        phi_M = functors.phi(M)
        suite.extend(check_representation(phi_M).checks, f'{name}_phi_')
        u, target = functors.unit(M)
        rank = u.rank()
        suite.add(f'{name}_unit_bijective', rank == M.dim == target.dim,
                  {'dim': M.dim, 'dim_phi': phi_M.dim, 'dim_psi_phi': target.dim, 'rank': rank})
        suite.add(f'{name}_dim_phi_bounded', phi_M.dim <= M.dim, {'dim': M.dim, 'dim_phi': phi_M.dim})
        suite.add(f'{name}_unit_morphism',
                  is_colinear(u, M.comodule, target.comodule) and is_module_map(u, M.module, target.module))
    for name, N in comodules:
        c, source, well_defined = functors.counit(N)
        suite.add(f'{name}_counit_well_defined', well_defined)
        rank = c.rank()
        suite.add(f'{name}_counit_bijective', rank == N.dim == source.dim,
                  {'dim': N.dim, 'dim_phi_psi': source.dim, 'rank': rank})
        suite.add(f'{name}_counit_colinear', is_colinear(c, source, N))
    return suite


def simple_comodules(C: CoalgebraData, seed=0) -> list[ComoduleData]:
    """Simple right ``C``-comodules from the simple left ``C*``-modules."""
    data = radical_and_simples(dual_algebra(C), LEFT, seed)
    return [comodule_from_dual_module(S, C) for S in data.simples]


# coideals from pairings


def _coideal_certificate(U: HopfAlgebraData, Z: Subspace) -> CheckSuite:
    suite = CheckSuite('right_coideal')
    coordinates = Z.tensor_coordinate_map(U.dim)
    back = tensor_of_maps(Z.inclusion(), identity(U.dim, U.field))
    names = subspace_labels(Z, U.labels, U.field)
    failure = None
    for i, z in enumerate(Z.basis):
        image = U.coproduct(z)
        if back.apply(coordinates.apply(image)) != image:
            failure = {'basis': names[i], 'inclusion': 'Delta(Z) in Z (x) U'}
            break
    suite.add('coideal', failure is None, failure)
    return suite


def coideal_annihilator(P: PairingData, Z: Subspace) -> CoidealSubalgebraData:
    """``{h : h . z = eps(z) h for z in Z}`` under whichever hit convention yields a coideal subalgebra."""
    U, H = P.left, P.right
    field = H.field
    Z = Z.join(canonicalize_subspace([U.one], U.dim, field))
    certificate = _coideal_certificate(U, Z)
    if not certificate.passed:
        raise VerificationFailed('Z is not a right coideal', certificate)
    failures = CheckSuite('coideal_annihilator')
    for convention in (RIGHT, LEFT):
        module = hit_action(P, convention)
        own = identity(H.dim, field)
        blocks = [module.operator(z) - own.scale(U.counit.apply(z)[0]) for z in Z.basis]
        A = verify_coideal_subalgebra(H, kernel_of(LinMap.stack(blocks, cols=H.dim, field=field)))
        if A.verified:
            logger.debug('coideal annihilator of dim %s under the %s convention', A.dim, convention)
            return CoidealSubalgebraData(H, A.subspace, A.certificate, RIGHT, convention)
        failures.extend(A.certificate.checks, f'{convention}_')
    raise VerificationFailed('neither hit convention yields a coideal subalgebra', failures)


def c_semisimple_implication(P: PairingData, K: Subspace, modules=(), seed=0) -> CheckSuite:
    """Hypothesis: every module is semisimple over ``K``; conclusions: ``H_A`` cosemisimple, ``H`` flat over ``A``."""
    A = coideal_annihilator(P, K)
    Q = quotient_module_coalgebra(A)
    suite = CheckSuite('c_semisimple')
    hypothesis = True
    for index, V in enumerate(modules):
        verdict = is_K_semisimple(V, K)
        hypothesis = hypothesis and verdict.passed
        suite.checks.append(Check(f'hypothesis[{index}]', True, {'K_semisimple': verdict.passed, **verdict.witness}))
    cosemisimple = is_cosemisimple(Q.coalgebra)
    flat_left = is_faithfully_flat(A, LEFT, seed)
    flat_right = is_faithfully_flat(A, RIGHT, seed)
    conclusions = cosemisimple.passed and flat_left.passed and flat_right.passed
    suite.add('implication_consistent', conclusions or not hypothesis, {
        'hypothesis': hypothesis,
        'cosemisimple': cosemisimple.passed,
        'flat_left': flat_left.passed,
        'flat_right': flat_right.passed,
        'dim_A': A.dim,
        'dim_quotient': Q.dim,
        'hit_convention': A.hit_convention,
    })
    return suite


def c_semisimple_summary(suite: CheckSuite):
    """The hypothesis and conclusion flags recorded by ``c_semisimple_implication``."""
    witness = suite['implication_consistent'].witness
    return {key: witness[key] for key in ('hypothesis', 'cosemisimple', 'flat_left', 'flat_right')}

