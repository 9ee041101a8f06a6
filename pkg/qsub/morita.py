"""Quasi-finiteness, Cohom, Coend and pre-equivalence data between comodule categories.

Everything is finite-dimensional: ``h_D(X, Y)`` is the dual of the colinear
Hom space ``Hom^D(Y, X)``, not a filtered colimit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .catalog import matrix_coalgebra
from .checks import Check, CheckSuite
from .exceptions import DimensionMismatch, VerificationFailed
from .hopf import CoalgebraData, CoalgebraMap, check_coalgebra_axioms, check_coalgebra_map, compare_maps
from .linalg import (
    RATIONALS,
    Field,
    LinMap,
    Subspace,
    flatten_map,
    identity,
    tensor_of_maps,
    unflatten_map,
)
from .reps import (
    LEFT,
    RIGHT,
    BicomoduleData,
    ComoduleData,
    check_representation,
    coaction_on_subspace,
    cotensor,
    cotensor_comodule,
    hom_colinear,
    is_colinear,
    regular_bicomodule,
)

logger = logging.getLogger(__name__)


def ground_coalgebra(field: Field = RATIONALS) -> CoalgebraData:
    """``k`` with ``Delta 1 = 1 (x) 1``."""
    one = field.one
    return CoalgebraData(1, LinMap(1, 1, field, {(0, 0): one}), LinMap(1, 1, field, {(0, 0): one}), ('1',))


def is_quasi_finite(X: ComoduleData, samples=()) -> Check:
    """Always true at finite dimension; the witness lists ``dim Hom(N, X)`` per sample."""
    dims = {name: hom_colinear(N, X).dim for name, N in samples}
    return Check('quasi_finite', True, {'hom_dims': dims, 'dim': X.dim})


@dataclass(frozen=True)
class CohomData:
    comodule: ComoduleData
    hom: Subspace
    left_coaction: LinMap


def _left_coaction_on_hom(X: BicomoduleData, Y: ComoduleData, hom: Subspace) -> LinMap:
    """``f -> sum_c e_c (x) f_c`` where ``lambda_X f = sum_c e_c (x) f_c``."""
    field = X.left.field
    gamma = X.left.over.dim
    columns = []
    for vector in hom.basis:
        f = unflatten_map(vector, X.dim, Y.dim, field)
        lifted = X.left.coaction @ f
        column = []
        for c in range(gamma):
            block = LinMap(X.dim, Y.dim, field, {
                (row - c * X.dim, col): value for (row, col), value in lifted.entries.items()
                if c * X.dim <= row < (c + 1) * X.dim
            })
            column.extend(hom.coordinates(flatten_map(block)))
        columns.append(column)
    return LinMap.from_columns(columns, gamma * hom.dim, field)


def cohom(X: BicomoduleData, Y: ComoduleData) -> CohomData:
    """``h_D(X, Y) = Hom^D(Y, X)*`` as a right ``Gamma``-comodule."""
    if not (X.right.over is Y.over or X.right.over == Y.over):
        raise DimensionMismatch('bicomodule and comodule over different coalgebras (dims %(left)s and %(right)s)',
                                left=X.right.over.dim, right=Y.over.dim)
    hom = hom_colinear(Y, X.right)
    Gamma = X.left.over
    field = Gamma.field
    lam = _left_coaction_on_hom(X, Y, hom)
    e, g = hom.dim, Gamma.dim
    coaction = LinMap(e * g, e, field, {
        (i * g + c, j): value
        for (row, i), value in lam.entries.items()
        for c, j in [divmod(row, e)]
    })
    return CohomData(ComoduleData(e, coaction, Gamma, RIGHT), hom, lam)


def cohom_adjunction_check(X: BicomoduleData, Y: ComoduleData, samples=()) -> CheckSuite:
    """``Hom^Gamma(h_D(X, Y), W) ~ Hom^D(Y, W []_Gamma X)`` via ``theta -> (y -> sum_i theta(phi_i) (x) f_i(y))``."""
    data = cohom(X, Y)
    field = Y.field
    suite = CheckSuite('cohom_adjunction')
    suite.extend(check_representation(data.comodule).checks, 'cohom_')
    maps = [unflatten_map(vector, X.dim, Y.dim, field) for vector in data.hom.basis]
    for name, W in samples:
        left = hom_colinear(data.comodule, W)
        S, WX = cotensor_comodule(W, X)
        right = hom_colinear(Y, WX)
        suite.add(f'{name}_dims', left.dim == right.dim, {'left': left.dim, 'right': right.dim})
        columns = []
        for vector in left.basis:
            theta = unflatten_map(vector, W.dim, data.hom.dim, field)
            image = LinMap.zero(W.dim * X.dim, Y.dim, field)
            for i, f in enumerate(maps):
                column = LinMap.from_columns([theta.column(i)], W.dim, field)
                image = image + tensor_of_maps(column, f)
            if not all(S.contains(image.column(y)) for y in range(Y.dim)):
                suite.add(f'{name}_lands_in_cotensor', False, {'sample': name})
                break
            flat = flatten_map(S.coordinate_map() @ image)
            if not right.contains(flat):
                suite.add(f'{name}_colinear', False, {'sample': name})
                break
            columns.append(right.coordinates(flat))
        else:
            bijection = LinMap.from_columns(columns, right.dim, field)
            suite.add(f'{name}_bijective', bijection.is_invertible(), {'rank': bijection.rank()})
    return suite


@dataclass(frozen=True)
class CoendData:
    coalgebra: CoalgebraData
    endomorphisms: Subspace
    bicomodule: BicomoduleData
    certificate: CheckSuite


def coend(M: ComoduleData, labels=None) -> CoendData:
    """``Coend_D(M)``: the dual of ``End^D(M)`` with ``Delta(phi)(f (x) g) = phi(g f)``.

    ``M`` is a ``(Coend, D)``-bicomodule through ``m -> sum_i phi_i (x) f_i(m)``.
    """
    field = M.field
    end = hom_colinear(M, M)
    e = end.dim
    maps = [unflatten_map(vector, M.dim, M.dim, field) for vector in end.basis]
    entries = {}
    for a, f in enumerate(maps):
        for b, g in enumerate(maps):
            for k, value in enumerate(end.coordinates(flatten_map(g @ f))):
                if not field.is_zero(value):
                    entries[(k, a, b)] = value
    # Delta(phi_k) = sum over (a, b) of <phi_k, f_b f_a> phi_a (x) phi_b
    comult = LinMap(e * e, e, field, {(a * e + b, k): value for (k, a, b), value in entries.items()})
    own = end.coordinates(flatten_map(identity(M.dim, field)))
    counit = LinMap(1, e, field, {(0, k): value for k, value in enumerate(own) if not field.is_zero(value)})
    C = CoalgebraData(e, comult, counit, tuple(labels or (f'phi{k}' for k in range(e))))
    suite = CheckSuite('coend')
    suite.extend(check_coalgebra_axioms(C).checks, 'coalgebra_')

    left = LinMap(e * M.dim, M.dim, field, {
        (i * M.dim + row, col): value for i, f in enumerate(maps) for (row, col), value in f.entries.items()
    })
    bicomodule = BicomoduleData(M.dim, ComoduleData(M.dim, left, C, LEFT), M)
    suite.extend(check_representation(bicomodule).checks, 'bicomodule_')
    return CoendData(C, end, bicomodule, suite)


def coend_regular_witness(D: CoalgebraData) -> tuple[LinMap, CheckSuite]:
    """``Coend_D(D) -> D``, the transpose of ``xi -> (d -> xi(d_1) d_2)``."""
    field = D.field
    data = coend(ComoduleData(D.dim, D.comult, D, RIGHT, tuple(D.labels)))
    columns = []
    for j in range(D.dim):
        functional = LinMap(1, D.dim, field, {(0, j): field.one})
        f = tensor_of_maps(functional, identity(D.dim, field)) @ D.comult
        columns.append(data.endomorphisms.coordinates(flatten_map(f)))
    witness = LinMap.from_columns(columns, data.endomorphisms.dim, field).transpose()
    suite = CheckSuite('coend_regular_witness')
    suite.add('bijective', witness.is_invertible(), {'rank': witness.rank(), 'dim': D.dim})
    suite.extend(check_coalgebra_map(CoalgebraMap(data.coalgebra, D, witness)).checks, 'coalgebra_map_')
    return witness, suite


def coend_matrix_witness(M: ComoduleData) -> tuple[LinMap, CheckSuite]:
    """``phi_rc -> e_cr`` from ``Coend_D(M)`` onto the comatrix coalgebra when ``End^D(M)`` is all of ``M_n(k)``."""
    data = coend(M)
    n = M.dim
    suite = CheckSuite('coend_matrix_witness')
    suite.add('endomorphisms_full', data.endomorphisms.is_full, {'dim': data.endomorphisms.dim, 'n': n})
    if not data.endomorphisms.is_full:
        raise VerificationFailed('colinear endomorphisms are not a full matrix algebra', suite)
    field = M.field
    target = matrix_coalgebra(n, field)
    witness = LinMap(n * n, n * n, field, {(c * n + r, r * n + c): field.one for r in range(n) for c in range(n)})
    suite.extend(check_coalgebra_map(CoalgebraMap(data.coalgebra, target, witness)).checks, 'coalgebra_map_')
    return witness, suite


# pre-equivalence data


@dataclass(frozen=True)
class PreEquivalenceData:
    """``P`` is a ``(Gamma, D)``-bicomodule, ``Q`` a ``(D, Gamma)``-bicomodule; ``f`` and ``g`` are ambient maps."""

    Gamma: CoalgebraData
    D: CoalgebraData
    P: BicomoduleData
    Q: BicomoduleData
    f: LinMap
    g: LinMap


def _cotensor_bicomodule(X: BicomoduleData, Y: BicomoduleData):
    """``X []_D Y`` with the outer coactions; returns ``(subspace, bicomodule)``."""
    S = cotensor(X.right, Y.left)
    field = X.left.field
    left_ambient = tensor_of_maps(X.left.coaction, identity(Y.dim, field))
    right_ambient = tensor_of_maps(identity(X.dim, field), Y.right.coaction)
    left = coaction_on_subspace(left_ambient, S, X.left.over.dim, LEFT)
    right = coaction_on_subspace(right_ambient, S, Y.right.over.dim, RIGHT)
    return S, BicomoduleData(S.dim, ComoduleData(S.dim, left, X.left.over, LEFT),
                             ComoduleData(S.dim, right, Y.right.over, RIGHT))


def _bicolinear(f: LinMap, source: BicomoduleData, target: BicomoduleData):
    return is_colinear(f, source.left, target.left) and is_colinear(f, source.right, target.right)


def _structure_checks(E: PreEquivalenceData, suite: CheckSuite):
    field = E.Gamma.field
    suite.extend(check_representation(E.P).checks, 'P_')
    suite.extend(check_representation(E.Q).checks, 'Q_')
    maps = {}
    for name, h, outer, inner, coalgebra in (('f', E.f, E.P, E.Q, E.Gamma), ('g', E.g, E.Q, E.P, E.D)):
        S, bicomodule = _cotensor_bicomodule(outer, inner)
        inside = all(S.contains(h.column(c)) for c in range(h.cols))
        suite.add(f'{name}_lands_in_cotensor', inside)
        if not inside:
            continue
        restricted = S.coordinate_map() @ h
        suite.add(f'{name}_bicolinear', _bicolinear(restricted, regular_bicomodule(coalgebra), bicomodule))
        maps[name] = restricted
    P, Q = E.P, E.Q
    compare_maps(suite, 'P_square', tensor_of_maps(E.f, identity(P.dim, field)) @ P.left.coaction,
                 tensor_of_maps(identity(P.dim, field), E.g) @ P.right.coaction,
                 [P.left.basis_labels()], [[f'w{i}' for i in range(P.dim * Q.dim * P.dim)]])
    compare_maps(suite, 'Q_square', tensor_of_maps(E.g, identity(Q.dim, field)) @ Q.left.coaction,
                 tensor_of_maps(identity(Q.dim, field), E.f) @ Q.right.coaction,
                 [Q.left.basis_labels()], [[f'w{i}' for i in range(Q.dim * P.dim * Q.dim)]])
    return maps


def _round_trip(V: ComoduleData, first: BicomoduleData, second: BicomoduleData, h: LinMap, suite, name):
    """``V -> (V [] first) [] second``, ``v -> v_0 (x) h(v_1)``, checked bijective and colinear."""
    field = V.field
    S1, W = cotensor_comodule(V, first)
    S2, U = cotensor_comodule(W, second)
    ambient = tensor_of_maps(identity(V.dim, field), h) @ V.coaction
    into = tensor_of_maps(S1.coordinate_map(), identity(second.dim, field)) @ ambient
    inside = all(S2.contains(into.column(c)) for c in range(into.cols))
    suite.add(f'{name}_lands_in_composite', inside)
    if not inside:
        return
    iso = S2.coordinate_map() @ into
    suite.add(f'{name}_bijective', iso.is_invertible(), {'rank': iso.rank(), 'dims': [V.dim, S2.dim]})
    suite.add(f'{name}_colinear', is_colinear(iso, V, U))


def verify_pre_equivalence(E: PreEquivalenceData, gamma_objects=(), d_objects=()) -> CheckSuite:
    """Structure, bijectivity of ``f`` and ``g``, then ``V ~ (V [] P) [] Q`` and ``N ~ (N [] Q) [] P`` on samples."""
    suite = CheckSuite('pre_equivalence')
    maps = _structure_checks(E, suite)
    for name, dim in (('f', E.Gamma.dim), ('g', E.D.dim)):
        restricted = maps.get(name)
        bijective = restricted is not None and restricted.is_invertible()
        suite.add(f'{name}_bijective', bijective,
                  None if bijective else {'map': name, 'rank': restricted.rank() if restricted is not None else None,
                                          'dim': dim})
    if not suite.passed:
        return suite
    for name, V in gamma_objects:
        _round_trip(V, E.P, E.Q, E.f, suite, name)
    for name, N in d_objects:
        _round_trip(N, E.Q, E.P, E.g, suite, name)
    logger.debug('pre-equivalence data: %s checks, passed=%s', len(suite.checks), suite.passed)
    return suite


def identity_pre_equivalence(D: CoalgebraData) -> PreEquivalenceData:
    """``Gamma = D``, ``P = Q = D`` and ``f = g = Delta``."""
    regular = regular_bicomodule(D)
    return PreEquivalenceData(D, D, regular, regular, D.comult, D.comult)


def matrix_morita_data(n, field: Field = RATIONALS) -> PreEquivalenceData:
    """``(k, M^c(n), k^n, k^n, 1 -> sum_i v_i (x) w_i, e_ij -> w_i (x) v_j)``."""
    k = ground_coalgebra(field)
    D = matrix_coalgebra(n, field)
    one = field.one
    d = n * n
    trivial_left = ComoduleData(n, identity(n, field), k, LEFT)
    trivial_right = ComoduleData(n, identity(n, field), k, RIGHT)
    # P: v_j -> sum_i v_i (x) e_ij ; Q: w_i -> sum_j e_ij (x) w_j
    P_right = ComoduleData(n, LinMap(n * d, n, field, {(i * d + i * n + j, j): one
                                                       for i in range(n) for j in range(n)}), D, RIGHT)
    Q_left = ComoduleData(n, LinMap(d * n, n, field, {((i * n + j) * n + j, i): one
                                                      for i in range(n) for j in range(n)}), D, LEFT)
    P = BicomoduleData(n, trivial_left, P_right)
    Q = BicomoduleData(n, Q_left, trivial_right)
    f = LinMap(n * n, 1, field, {(i * n + i, 0): one for i in range(n)})
    g = LinMap(n * n, d, field, {(i * n + j, i * n + j): one for i in range(n) for j in range(n)})
    return PreEquivalenceData(k, D, P, Q, f, g)
