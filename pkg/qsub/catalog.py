"""Concrete Hopf algebras, coalgebras and subgroup data.

Every constructor certifies its output with the full axiom suite before
returning it. Group elements are ordered by table index and every derived
basis inherits that order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from math import factorial

from django.conf import settings
from sympy.combinatorics import Permutation, SymmetricGroup

from .checks import CheckSuite
from .correspondence import (
    QuotientModuleCoalgebraData,
    verify_coideal_subalgebra,
)
from .exceptions import (
    DimensionCapExceeded,
    DimensionMismatch,
    NotAGroup,
    NotASubgroup,
    NotPrimitiveRoot,
    UnknownName,
    VerificationFailed,
)
from .hopf import (
    AlgebraData,
    CoalgebraData,
    HopfAlgebraData,
    check_coalgebra_axioms,
    check_hopf_axioms,
    check_hopf_morphism,
    dual_hopf,
)
from .linalg import (
    RATIONALS,
    Field,
    LinMap,
    Subspace,
    canonicalize_subspace,
    identity,
    tensor_vectors,
)

logger = logging.getLogger(__name__)


def dimension_cap():
    return getattr(settings, 'QSUB_DIMENSION_CAP', 64)


def require_within_cap(dim):
    cap = dimension_cap()
    if dim > cap:
        raise DimensionCapExceeded(dim, cap)


def _certified(H: HopfAlgebraData, name):
    suite = check_hopf_axioms(H)
    if not suite.passed:
        raise VerificationFailed(f'{name} fails the Hopf axioms', suite)
    return H


# groups


@dataclass(frozen=True)
class FiniteGroupTable:
    """Elements ``0 .. order-1`` with the identity at index 0."""

    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        n = self.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise NotAGroup('shape', [len(self.table), n])
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise NotAGroup('identity', [self.labels[0], self.labels[a]])
            b = self.inverse[a]
            if self.table[a][b] != 0 or self.table[b][a] != 0:
                raise NotAGroup('inverse', [self.labels[a], self.labels[b]])
        for a, b, c in cartesian(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise NotAGroup('associativity', [self.labels[a], self.labels[b], self.labels[c]])

    def mul(self, a, b):
        return self.table[a][b]

    def index(self, label):
        return self.labels.index(label)


def cyclic_group(n) -> FiniteGroupTable:
    _require_order(n)
    require_within_cap(n)
    labels = ['e', 'c'] + [f'c^{k}' for k in range(2, n)]
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroupTable(n, table, tuple((-a) % n for a in range(n)), tuple(labels[:n]))


def _require_order(n):
    if n < 1:
        raise DimensionMismatch('a group needs order >= 1, got %(n)s', n=n)


def _permutation_label(p: Permutation):
    return 'e' if p.is_Identity else 'p' + ''.join(str(i) for i in p.array_form)


def symmetric_group(n) -> FiniteGroupTable:
    """``S_n`` with elements sorted by array form; products follow sympy's composition order."""
    _require_order(n)
    require_within_cap(factorial(n))
    elements = sorted(SymmetricGroup(n).generate(), key=lambda p: p.array_form)
    position = {tuple(p.array_form): i for i, p in enumerate(elements)}
    table = tuple(tuple(position[tuple((p * q).array_form)] for q in elements) for p in elements)
    inverse = tuple(position[tuple((~p).array_form)] for p in elements)
    return FiniteGroupTable(len(elements), table, inverse, tuple(_permutation_label(p) for p in elements))


def generated_subgroup(G: FiniteGroupTable, generators) -> tuple[int, ...]:
    found = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for a in frontier:
            for g in generators:
                b = G.mul(a, g)
                if b not in found:
                    found.add(b)
                    fresh.append(b)
        frontier = fresh
    return tuple(sorted(found))


def s3_subgroups(G: FiniteGroupTable | None = None):
    """The four subgroups up to conjugacy used throughout the corpus."""
    G = G or symmetric_group(3)
    return {
        'trivial': (0,),
        'C2': generated_subgroup(G, [G.index('p102')]),
        'C3': generated_subgroup(G, [G.index('p120')]),
        'S3': tuple(range(G.order)),
    }


def group_algebra(G: FiniteGroupTable, field: Field = RATIONALS) -> HopfAlgebraData:
    n = G.order
    require_within_cap(n)
    one = field.one
    mult = LinMap(n, n * n, field, {(G.mul(a, b), a * n + b): one for a in range(n) for b in range(n)})
    unit = LinMap(n, 1, field, {(0, 0): one})
    comult = LinMap(n * n, n, field, {(g * n + g, g): one for g in range(n)})
    counit = LinMap(1, n, field, {(0, g): one for g in range(n)})
    antipode = LinMap(n, n, field, {(G.inverse[g], g): one for g in range(n)})
    H = HopfAlgebraData(AlgebraData(n, mult, unit, G.labels), CoalgebraData(n, comult, counit, G.labels), antipode)
    return _certified(H, f'k[{n}-element group]')


def function_algebra(G: FiniteGroupTable, field: Field = RATIONALS) -> HopfAlgebraData:
    """``k^G`` in the basis of delta functions ``d_g``."""
    H = dual_hopf(group_algebra(G, field))
    return _certified(H.relabel(f'd_{label}' for label in G.labels), 'function algebra')


def evaluation_isomorphism(G: FiniteGroupTable, field: Field = RATIONALS):
    """The canonical map ``(k^G)* -> kG``; identity in the dual of the delta basis."""
    source = dual_hopf(function_algebra(G, field))
    target = group_algebra(G, field)
    f = identity(G.order, field)
    return f, check_hopf_morphism(f, source, target)


def _check_subgroup(G: FiniteGroupTable, M):
    members = set(M)
    if 0 not in members:
        raise NotASubgroup(G.labels[0], G.labels[0])
    for a in M:
        for b in M:
            if G.mul(a, b) not in members:
                raise NotASubgroup(G.labels[a], G.labels[b])


def right_cosets(G: FiniteGroupTable, M):
    seen, cosets = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        coset = tuple(sorted({G.mul(m, x) for m in M}))
        seen.update(coset)
        cosets.append(coset)
    return cosets


def subgroup_data(G: FiniteGroupTable, M, field: Field = RATIONALS):
    """Coset functions in ``k^G`` and the restriction ``k^G -> k^M``, both verified."""
    M = tuple(sorted(set(M)))
    _check_subgroup(G, M)
    H = function_algebra(G, field)
    n, m = G.order, len(M)

    vectors = []
    for coset in right_cosets(G, M):
        vectors.append(tuple(field.one if g in coset else field.zero for g in range(n)))
    A = verify_coideal_subalgebra(H, canonicalize_subspace(vectors, n, field))
    A.require_verified()

    position = {g: j for j, g in enumerate(M)}
    one = field.one
    pi = LinMap(m, n, field, {(j, g): one for g, j in position.items()})
    comult = LinMap(m * m, m, field, {
        (position[a] * m + position[b], position[G.mul(a, b)]): one for a in M for b in M
    })
    counit = LinMap(1, m, field, {(0, position[0]): one})
    labels = tuple(f'd_{G.labels[g]}' for g in M)
    B = CoalgebraData(m, comult, counit, labels)
    sigma = LinMap(m, n * m, field, {(j, g * m + j): one for g, j in position.items()})
    Q = QuotientModuleCoalgebraData(H, B, pi, sigma).require_verified()
    logger.debug('subgroup of order %s: dim A = %s, dim B = %s', m, A.dim, Q.dim)
    return A, Q


# pointed Hopf algebras


def trivial_hopf(field: Field = RATIONALS) -> HopfAlgebraData:
    one = {(0, 0): field.one}
    algebra = AlgebraData(1, LinMap(1, 1, field, one), LinMap(1, 1, field, one), ('1',))
    coalgebra = CoalgebraData(1, LinMap(1, 1, field, one), LinMap(1, 1, field, one), ('1',))
    return _certified(HopfAlgebraData(algebra, coalgebra, LinMap(1, 1, field, one)), 'k')


def _power_label(symbol, k):
    if k == 0:
        return ''
    return symbol if k == 1 else f'{symbol}^{k}'


def _taft_labels(n):
    labels = []
    for b in range(n):
        for a in range(n):
            labels.append((_power_label('g', a) + _power_label('x', b)) or '1')
    return tuple(labels)


def _require_primitive(q, n, field: Field):
    p = field.characteristic
    if p and n % p == 0:
        raise NotPrimitiveRoot(field.format(q), n, p)
    power = field.one
    for k in range(1, n + 1):
        power = power * q
        if (power == field.one) != (k == n):
            raise NotPrimitiveRoot(field.format(q), n, p)


def taft(n, p=0, q=None, labels=None) -> HopfAlgebraData:
    """The ``n^2``-dim Taft algebra: ``g^n = 1``, ``x^n = 0``, ``xg = q gx``, ``Delta x = x (x) 1 + g (x) x``.

    Basis element ``g^a x^b`` sits at index ``b * n + a``.
    """
    if n < 1:
        raise DimensionMismatch('the Taft algebra needs n >= 1, got %(n)s', n=n)
    require_within_cap(n * n)
    field = Field(p)
    q = field.element(-1 if q is None and n == 2 else (1 if q is None else q))
    _require_primitive(q, n, field)
    dim = n * n
    q_powers = [field.one]
    for _ in range(1, n * n):
        q_powers.append(q_powers[-1] * q)

    entries = {}
    for b, a, d, c in cartesian(range(n), repeat=4):
        if b + d >= n:
            continue
        entries[((b + d) * n + (a + c) % n, (b * n + a) * dim + d * n + c)] = q_powers[(b * c) % n]
    mult = LinMap.from_entries(dim, dim * dim, field, entries)
    unit = LinMap(dim, 1, field, {(0, 0): field.one})
    algebra = AlgebraData(dim, mult, unit, labels or _taft_labels(n))

    def times(u, v):
        return mult.apply(tensor_vectors(u, v))

    def times2(u, v):
        """Product in ``H (x) H``."""
        out = list(field.zero_vector(dim * dim))
        for i, s in enumerate(u):
            if field.is_zero(s):
                continue
            h1, h2 = divmod(i, dim)
            for j, t in enumerate(v):
                if field.is_zero(t):
                    continue
                k1, k2 = divmod(j, dim)
                for r1, c1 in mult.column_dict(h1 * dim + k1).items():
                    for r2, c2 in mult.column_dict(h2 * dim + k2).items():
                        out[r1 * dim + r2] += s * t * c1 * c2
        return tuple(out)

    g, x = field.unit_vector(dim, 1 % dim), field.unit_vector(dim, n if n > 1 else 0)
    one = field.unit_vector(dim, 0)
    delta_g = tensor_vectors(g, g)
    delta_x = tuple(s + t for s, t in zip(tensor_vectors(x, one), tensor_vectors(g, x)))
    g_inverse = one
    for _ in range(n - 1):
        g_inverse = times(g_inverse, g)
    s_x = tuple(-v for v in times(g_inverse, x))

    comult_columns, antipode_columns = [], []
    for b in range(n):
        for a in range(n):
            coproduct = tensor_vectors(one, one)
            for _ in range(a):
                coproduct = times2(coproduct, delta_g)
            for _ in range(b):
                coproduct = times2(coproduct, delta_x)
            comult_columns.append(coproduct)
            image = one
            for _ in range(b):
                image = times(image, s_x)
            for _ in range(a):
                image = times(image, g_inverse)
            antipode_columns.append(image)
    comult = LinMap.from_columns(comult_columns, dim * dim, field)
    counit = LinMap(1, dim, field, {(0, a): field.one for a in range(n)})
    coalgebra = CoalgebraData(dim, comult, counit, algebra.labels)
    antipode = LinMap.from_columns(antipode_columns, dim, field)
    return _certified(HopfAlgebraData(algebra, coalgebra, antipode), f'taft({n})')


def sweedler4(field: Field = RATIONALS) -> HopfAlgebraData:
    """Sweedler's ``H4`` with basis ``1, g, x, gx``."""
    return taft(2, field.characteristic, -1, labels=('1', 'g', 'x', 'gx'))


def span_of_labels(H: HopfAlgebraData, labels) -> Subspace:
    return canonicalize_subspace([H.basis_vector(H.labels.index(label)) for label in labels],
                                 H.dim, H.field)


def sweedler_dual_radical_subalgebra(H: HopfAlgebraData | None = None):
    """``(H4*, K)`` with ``K = span{eps, x* + gx*}``, a right coideal subalgebra isomorphic to ``k[t]/(t^2)``."""
    H = H or sweedler4()
    U = dual_hopf(H)
    field = H.field
    K = canonicalize_subspace([field.vector([1, 1, 0, 0]), field.vector([0, 0, 1, 1])], 4, field)
    return U, K


# coalgebras without a Hopf structure


def matrix_coalgebra(n, field: Field = RATIONALS) -> CoalgebraData:
    """The comatrix coalgebra: ``Delta e_ij = sum_k e_ik (x) e_kj``, ``eps e_ij = [i == j]``."""
    dim = n * n
    one = field.one
    comult = LinMap(dim * dim, dim, field, {
        ((i * n + k) * dim + k * n + j, i * n + j): one for i in range(n) for j in range(n) for k in range(n)
    })
    counit = LinMap(1, dim, field, {(0, i * n + i): one for i in range(n)})
    C = CoalgebraData(dim, comult, counit, tuple(f'e{i}{j}' for i in range(n) for j in range(n)))
    suite = check_coalgebra_axioms(C)
    if not suite.passed:
        raise VerificationFailed('matrix coalgebra fails the coalgebra axioms', suite)
    return C


CATALOG = {
    'trivial': lambda **_: trivial_hopf(),
    'group-algebra': lambda group='S3', p=0, **_: group_algebra(named_group(group), Field(_integer('p', p))),
    'function-algebra': lambda group='S3', p=0, **_: function_algebra(named_group(group), Field(_integer('p', p))),
    'sweedler4': lambda **_: sweedler4(),
    'taft': lambda n=3, p=7, q=2, **_: taft(_integer('n', n), _integer('p', p), _integer('q', q)),
}


def _integer(key, value) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise UnknownName('catalog parameter', f'{key}={value}') from None


def named_group(name) -> FiniteGroupTable:
    """``C<n>`` or ``S<n>``."""
    kind, digits = name[:1].upper(), name[1:]
    if not digits.isdigit():
        raise UnknownName('group', name)
    order = int(digits)
    if kind == 'C':
        return cyclic_group(order)
    if kind == 'S':
        return symmetric_group(order)
    raise UnknownName('group', name)


def build(name, **params) -> HopfAlgebraData:
    try:
        constructor = CATALOG[name]
    except KeyError:
        raise UnknownName('catalog object', name) from None
    return constructor(**params)


def catalog_certificates() -> dict[str, CheckSuite]:
    """Axiom suites for the acceptance objects."""
    S3 = symmetric_group(3)
    objects = {
        'k': trivial_hopf(),
        'kC2': group_algebra(cyclic_group(2)),
        'kS3': group_algebra(S3),
        'k^S3': function_algebra(S3),
        'sweedler4': sweedler4(),
        'taft(3,GF(7))': taft(3, 7, 2),
    }
    return {name: check_hopf_axioms(H) for name, H in objects.items()}
