"""Algebras, coalgebras and Hopf algebras given by structure constants.

All tensor products are the strict ones of vector spaces; structure maps are
``LinMap`` values on flattened tensor bases.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Sequence

from .checks import Check, CheckSuite
from .exceptions import DimensionMismatch, VerificationFailed
from .linalg import (
    Field,
    LinMap,
    Subspace,
    flip_map,
    identity,
    tensor_maps,
    tensor_of_maps,
    tensor_vectors,
)

logger = logging.getLogger(__name__)

TENSOR = '(x)'


def tensor_label(index, factors: Sequence[Sequence[str]]):
    """Label of a flattened tensor index, e.g. ``'g(x)x'``."""
    parts = []
    for labels in reversed(factors):
        index, position = divmod(index, len(labels))
        parts.append(labels[position])
    return TENSOR.join(reversed(parts)) if parts else '1'


def describe_vector(vector, factors, field):
    return {tensor_label(i, factors): field.format(v)
            for i, v in enumerate(vector) if not field.is_zero(v)}


def compare_maps(suite: CheckSuite, name, lhs: LinMap, rhs: LinMap, domain_factors, codomain_factors):
    """Record ``lhs == rhs`` with the first differing basis input as witness."""
    difference = lhs.first_difference(rhs)
    if difference is None:
        return suite.add(name, True)
    _, column = difference
    field = lhs.field
    return suite.add(name, False, {
        'basis': tensor_label(column, domain_factors),
        'lhs': describe_vector(lhs.column(column), codomain_factors, field),
        'rhs': describe_vector(rhs.column(column), codomain_factors, field),
    })


def _dual_labels(labels):
    return [label[:-1] if label.endswith('*') else label + '*' for label in labels]


@dataclass(frozen=True)
class AlgebraData:
    dim: int
    mult: LinMap
    unit: LinMap
    labels: tuple[str, ...]

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def one(self):
        return self.unit.column(0)

    def product(self, u, v):
        return self.mult.apply(tensor_vectors(u, v))

    def left_multiplication(self, x):
        """Matrix of ``y -> x y``."""
        return self.mult.compose(tensor_of_maps(LinMap.from_columns([x], self.dim, self.field),
                                                identity(self.dim, self.field)))

    def right_multiplication(self, x):
        """Matrix of ``y -> y x``."""
        return self.mult.compose(tensor_of_maps(identity(self.dim, self.field),
                                                LinMap.from_columns([x], self.dim, self.field)))

    def basis_vector(self, index):
        return self.field.unit_vector(self.dim, index)


@dataclass(frozen=True)
class CoalgebraData:
    dim: int
    comult: LinMap
    counit: LinMap
    labels: tuple[str, ...]

    @property
    def field(self) -> Field:
        return self.comult.field

    def coproduct(self, v):
        return self.comult.apply(v)

    def basis_vector(self, index):
        return self.field.unit_vector(self.dim, index)


@dataclass(frozen=True)
class HopfAlgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: LinMap

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit

    @property
    def one(self):
        return self.algebra.one

    def product(self, u, v):
        return self.algebra.product(u, v)

    def coproduct(self, v):
        return self.coalgebra.coproduct(v)

    def basis_vector(self, index):
        return self.field.unit_vector(self.dim, index)

    def element(self, coefficients: dict):
        """Vector from a ``{label: value}`` mapping."""
        vector = list(self.field.zero_vector(self.dim))
        for label, value in coefficients.items():
            vector[self.labels.index(label)] += self.field.element(value)
        return tuple(vector)

    def relabel(self, labels):
        labels = tuple(labels)
        return HopfAlgebraData(replace(self.algebra, labels=labels),
                               replace(self.coalgebra, labels=labels), self.antipode)

    def with_antipode(self, antipode: LinMap):
        return HopfAlgebraData(self.algebra, self.coalgebra, antipode)


@dataclass(frozen=True)
class CoalgebraMap:
    source: CoalgebraData
    target: CoalgebraData
    matrix: LinMap


@dataclass(frozen=True)
class PairingData:
    """``form`` evaluates ``<u_a, h_i>`` at column ``a * dim_H + i``."""

    left: HopfAlgebraData
    right: HopfAlgebraData
    form: LinMap

    def value(self, a, i):
        return self.form[(0, a * self.right.dim + i)]


def _shape_error(name, got, expected):
    raise DimensionMismatch('%(name)s has shape %(got)s, expected %(expected)s',
                            name=name, got=got, expected=expected)


def check_algebra_axioms(A: AlgebraData) -> CheckSuite:
    n, field = A.dim, A.field
    if A.mult.shape != (n, n * n):
        _shape_error('mult', A.mult.shape, (n, n * n))
    if A.unit.shape != (n, 1):
        _shape_error('unit', A.unit.shape, (n, 1))
    labels = list(A.labels)
    one = identity(n, field)
    suite = CheckSuite('algebra')
    compare_maps(suite, 'associativity',
                 A.mult @ tensor_of_maps(A.mult, one), A.mult @ tensor_of_maps(one, A.mult),
                 [labels] * 3, [labels])
    left_unit = A.mult @ tensor_of_maps(A.unit, one)
    right_unit = A.mult @ tensor_of_maps(one, A.unit)
    compare_maps(suite, 'unit', left_unit, one, [labels], [labels])
    if suite['unit'].passed:
        suite.checks.pop()
        compare_maps(suite, 'unit', right_unit, one, [labels], [labels])
    return suite


def check_coalgebra_axioms(C: CoalgebraData) -> CheckSuite:
    n, field = C.dim, C.field
    if C.comult.shape != (n * n, n):
        _shape_error('comult', C.comult.shape, (n * n, n))
    if C.counit.shape != (1, n):
        _shape_error('counit', C.counit.shape, (1, n))
    labels = list(C.labels)
    one = identity(n, field)
    suite = CheckSuite('coalgebra')
    compare_maps(suite, 'coassociativity',
                 tensor_of_maps(C.comult, one) @ C.comult, tensor_of_maps(one, C.comult) @ C.comult,
                 [labels], [labels] * 3)
    compare_maps(suite, 'counit', tensor_of_maps(C.counit, one) @ C.comult, one, [labels], [labels])
    if suite['counit'].passed:
        suite.checks.pop()
        compare_maps(suite, 'counit', tensor_of_maps(one, C.counit) @ C.comult, one, [labels], [labels])
    return suite


def check_hopf_axioms(H: HopfAlgebraData) -> CheckSuite:
    """One verdict per axiom, with the first violating basis input on failure."""
    if H.algebra.dim != H.coalgebra.dim:
        raise DimensionMismatch('algebra layer has dim %(algebra)s, coalgebra layer %(coalgebra)s',
                                algebra=H.algebra.dim, coalgebra=H.coalgebra.dim)
    n, field = H.dim, H.field
    if H.antipode.shape != (n, n):
        _shape_error('antipode', H.antipode.shape, (n, n))
    labels = list(H.labels)
    one = identity(n, field)
    suite = CheckSuite('hopf')
    suite.extend(check_algebra_axioms(H.algebra).checks)
    suite.extend(check_coalgebra_axioms(H.coalgebra).checks)

    twist = tensor_maps(one, flip_map(n, n, field), one)
    compare_maps(suite, 'comult_multiplicative',
                 H.comult @ H.mult,
                 tensor_of_maps(H.mult, H.mult) @ twist @ tensor_of_maps(H.comult, H.comult),
                 [labels] * 2, [labels] * 2)
    if suite['comult_multiplicative'].passed:
        suite.checks.pop()
        compare_maps(suite, 'comult_multiplicative', H.comult @ H.unit,
                     tensor_of_maps(H.unit, H.unit), [['1']], [labels] * 2)
    compare_maps(suite, 'counit_multiplicative',
                 H.counit @ H.mult, tensor_of_maps(H.counit, H.counit), [labels] * 2, [['1']])
    if suite['counit_multiplicative'].passed:
        suite.checks.pop()
        compare_maps(suite, 'counit_multiplicative', H.counit @ H.unit,
                     identity(1, field), [['1']], [['1']])

    unit_counit = H.unit @ H.counit
    compare_maps(suite, 'antipode_left',
                 H.mult @ tensor_of_maps(H.antipode, one) @ H.comult, unit_counit, [labels], [labels])
    compare_maps(suite, 'antipode_right',
                 H.mult @ tensor_of_maps(one, H.antipode) @ H.comult, unit_counit, [labels], [labels])
    logger.debug('hopf axioms on %s-dim algebra: %s', n, 'pass' if suite.passed else 'fail')
    return suite


def check_coalgebra_map(psi: CoalgebraMap) -> CheckSuite:
    source, target, f = psi.source, psi.target, psi.matrix
    if f.shape != (target.dim, source.dim):
        _shape_error('coalgebra map', f.shape, (target.dim, source.dim))
    suite = CheckSuite('coalgebra_map')
    compare_maps(suite, 'comult_compatible', target.comult @ f, tensor_of_maps(f, f) @ source.comult,
                 [list(source.labels)], [list(target.labels)] * 2)
    compare_maps(suite, 'counit_compatible', target.counit @ f, source.counit,
                 [list(source.labels)], [['1']])
    return suite


def check_hopf_morphism(f: LinMap, source: HopfAlgebraData, target: HopfAlgebraData) -> CheckSuite:
    """``f`` preserves every structure map; invertibility is recorded separately."""
    if f.shape != (target.dim, source.dim):
        _shape_error('hopf morphism', f.shape, (target.dim, source.dim))
    s_labels, t_labels = list(source.labels), list(target.labels)
    suite = CheckSuite('hopf_morphism')
    compare_maps(suite, 'mult', f @ source.mult, target.mult @ tensor_of_maps(f, f),
                 [s_labels] * 2, [t_labels])
    compare_maps(suite, 'unit', f @ source.unit, target.unit, [['1']], [t_labels])
    compare_maps(suite, 'comult', target.comult @ f, tensor_of_maps(f, f) @ source.comult,
                 [s_labels], [t_labels] * 2)
    compare_maps(suite, 'counit', target.counit @ f, source.counit, [s_labels], [['1']])
    compare_maps(suite, 'antipode', target.antipode @ f, f @ source.antipode, [s_labels], [t_labels])
    suite.add('bijective', f.is_invertible(), {'rank': f.rank()})
    return suite


def antipode_bijective(H: HopfAlgebraData) -> Check:
    rank = H.antipode.rank()
    return Check('antipode_bijective', rank == H.dim, {'rank': rank, 'dim': H.dim})


def antipode_order(H: HopfAlgebraData, limit=256):
    """Smallest ``k`` with ``S^k = id``, or None below ``limit``."""
    one = identity(H.dim, H.field)
    power = H.antipode
    for k in range(1, limit + 1):
        if power == one:
            return k
        power = H.antipode @ power
    return None


def basis_grouplikes(H: HopfAlgebraData):
    """Labels of basis elements ``g`` with ``Delta g = g (x) g`` and ``eps(g) = 1``."""
    found = []
    for i in range(H.dim):
        e = H.basis_vector(i)
        if H.coproduct(e) == tensor_vectors(e, e) and H.counit.apply(e)[0] == H.field.one:
            found.append(H.labels[i])
    return found


def dual_algebra(C: CoalgebraData) -> AlgebraData:
    """``C*`` with the convolution product, in the dual basis."""
    return AlgebraData(C.dim, C.comult.transpose(), C.counit.transpose(), tuple(_dual_labels(C.labels)))


def dual_coalgebra(A: AlgebraData) -> CoalgebraData:
    return CoalgebraData(A.dim, A.mult.transpose(), A.unit.transpose(), tuple(_dual_labels(A.labels)))


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    return HopfAlgebraData(dual_algebra(H.coalgebra), dual_coalgebra(H.algebra), H.antipode.transpose())


def double_dual_identification(H: HopfAlgebraData) -> CheckSuite:
    """The canonical map ``H -> H**`` is the identity matrix; check it is a Hopf map."""
    twice = dual_hopf(dual_hopf(H))
    suite = CheckSuite('double_dual')
    labels = [list(H.labels)]
    compare_maps(suite, 'mult', twice.mult, H.mult, labels * 2, labels)
    compare_maps(suite, 'unit', twice.unit, H.unit, [['1']], labels)
    compare_maps(suite, 'comult', twice.comult, H.comult, labels, labels * 2)
    compare_maps(suite, 'counit', twice.counit, H.counit, labels, [['1']])
    compare_maps(suite, 'antipode', twice.antipode, H.antipode, labels, labels)
    return suite


def canonical_pairing(H: HopfAlgebraData) -> PairingData:
    """Evaluation pairing between ``H*`` (left) and ``H`` (right)."""
    n, field = H.dim, H.field
    form = LinMap(1, n * n, field, {(0, i * n + i): field.one for i in range(n)})
    return PairingData(dual_hopf(H), H, form)


def trivial_pairing(U: HopfAlgebraData, H: HopfAlgebraData) -> PairingData:
    form = tensor_of_maps(U.counit, H.counit)
    return PairingData(U, H, form)


def check_pairing(P: PairingData) -> CheckSuite:
    U, H = P.left, P.right
    m, n, field = U.dim, H.dim, U.field
    if P.form.shape != (1, m * n):
        _shape_error('pairing form', P.form.shape, (1, m * n))
    u_labels, h_labels = list(U.labels), list(H.labels)
    id_u, id_h = identity(m, field), identity(n, field)
    middle = tensor_maps(id_u, flip_map(m, n, field), id_h)
    double = tensor_of_maps(P.form, P.form)
    suite = CheckSuite('pairing')
    compare_maps(suite, 'product_vs_coproduct',
                 P.form @ tensor_of_maps(U.mult, id_h),
                 double @ middle @ tensor_maps(id_u, id_u, H.comult),
                 [u_labels, u_labels, h_labels], [['1']])
    compare_maps(suite, 'coproduct_vs_product',
                 P.form @ tensor_of_maps(id_u, H.mult),
                 double @ middle @ tensor_maps(U.comult, id_h, id_h),
                 [u_labels, h_labels, h_labels], [['1']])
    compare_maps(suite, 'unit_vs_counit', P.form @ tensor_of_maps(U.unit, id_h), H.counit,
                 [h_labels], [['1']])
    compare_maps(suite, 'counit_vs_unit', P.form @ tensor_of_maps(id_u, H.unit), U.counit,
                 [u_labels], [['1']])
    return suite


def hit_action(P: PairingData, side='right'):
    """``H`` as a module over ``U`` through the pairing.

    right: ``h <- z = <z, h_1> h_2`` on ``H (x) U``;
    left:  ``z -> h = h_1 <z, h_2>`` on ``U (x) H``.
    """
    from .reps import ModuleData, check_representation

    certificate = check_pairing(P)
    if not certificate.passed:
        raise VerificationFailed('pairing is not a bialgebra pairing', certificate)
    U, H = P.left, P.right
    m, n, field = U.dim, H.dim, H.field
    action_entries = {}
    for i in range(n):
        for row, coefficient in H.comult.column_dict(i).items():
            j, k = divmod(row, n)
            for a in range(m):
                if side == 'right':
                    weight = P.value(a, j)
                    target, column = k, i * m + a
                else:
                    weight = P.value(a, k)
                    target, column = j, a * n + i
                if field.is_zero(weight):
                    continue
                key = (target, column)
                action_entries[key] = action_entries.get(key, field.zero) + coefficient * weight
    action_entries = {k: v for k, v in action_entries.items() if not field.is_zero(v)}
    action = LinMap(n, n * m, field, action_entries)
    module = ModuleData(n, action, U.algebra, side)
    certificate = check_representation(module)
    if not certificate.passed:
        raise VerificationFailed(f'{side} hit action is not a module structure', certificate)
    return module


def restrict_algebra(A: AlgebraData, subspace: Subspace, labels=None) -> AlgebraData:
    """The subalgebra structure on ``subspace`` in its own coordinates."""
    inclusion = subspace.inclusion()
    products = A.mult @ tensor_of_maps(inclusion, inclusion)
    if not subspace.contains(A.one) or not _columns_inside(products, subspace):
        raise VerificationFailed('subspace is not a unital subalgebra')
    mult = subspace.coordinate_map() @ products
    unit = LinMap.from_columns([subspace.coordinates(A.one)], subspace.dim, A.field)
    if labels is None:
        labels = tuple(f'a{i}' for i in range(subspace.dim))
    return AlgebraData(subspace.dim, mult, unit, tuple(labels))


def _columns_inside(f: LinMap, subspace: Subspace):
    return all(subspace.contains(f.column(c)) for c in range(f.cols))


def subspace_labels(subspace: Subspace, labels, field):
    """Readable names for the echelon basis vectors of a subspace."""
    names = []
    for row in subspace.basis:
        terms = []
        for value, label in zip(row, labels):
            if field.is_zero(value):
                continue
            text = field.format(value)
            if text == '1':
                terms.append(label)
            elif text == '-1':
                terms.append('-' + label)
            else:
                terms.append(f'{text}*{label}')
        name = '+'.join(terms).replace('+-', '-')
        names.append(name)
    return tuple(names)
