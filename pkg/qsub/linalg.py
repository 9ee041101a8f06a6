"""Exact linear algebra over QQ and GF(p).

Vectors are tuples of sympy domain elements; linear maps are ``LinMap``
values holding a sparse ``{(row, col): value}`` mapping without zeros.
Row reduction, rank, inverses and characteristic polynomials are delegated to
``sympy.polys.matrices.DomainMatrix``: the sparse ``SDM`` format by default and
the dense format when more than half of the entries are nonzero. Both formats
produce the same reduced echelon form, so every canonical output is identical.

Tensor indices are flattened as ``(i, j) -> i * dim2 + j`` everywhere, and a
map ``f : k^c -> k^r`` flattens row-major to index ``i * c + j``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, Mapping, Sequence

from sympy import Basic, isprime, symbols
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import DimensionMismatch, NotSurjective, UnsupportedField

logger = logging.getLogger(__name__)

Vector = tuple


@lru_cache(maxsize=None)
def _domain(characteristic):
    if characteristic == 0:
        return QQ
    return GF(characteristic)


@dataclass(frozen=True)
class Field:
    """The ground field: QQ when ``characteristic == 0``, else GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise UnsupportedField(self.characteristic)

    @property
    def domain(self):
        return _domain(self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def name(self):
        return 'QQ' if self.characteristic == 0 else f'GF({self.characteristic})'

    def __str__(self):
        return self.name

    def element(self, value):
        K = self.domain
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return K.convert(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.divide(K.convert(value.numerator), K.convert(value.denominator))
        if isinstance(value, Basic):
            return K.from_sympy(value)
        return K.convert(value)

    def divide(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError('division by zero in ' + self.name)
        return a / b

    def parse(self, text):
        """Parse ``"n"`` or ``"num/den"``; raises ValueError on junk."""
        text = text.strip()
        num, _, den = text.partition('/')
        numerator = int(num)
        denominator = int(den) if den else 1
        if denominator == 0 or (self.characteristic and denominator % self.characteristic == 0):
            raise ValueError(f'zero denominator in {text!r}')
        K = self.domain
        return K.convert(numerator) / K.convert(denominator)

    def format(self, value):
        as_sympy = self.domain.to_sympy(value)
        if self.characteristic:
            return str(int(as_sympy) % self.characteristic)
        return str(as_sympy)

    def is_zero(self, value):
        return value == self.domain.zero

    def vector(self, values):
        return tuple(self.element(v) for v in values)

    def zero_vector(self, n):
        return (self.zero,) * n

    def unit_vector(self, n, index):
        return tuple(self.one if i == index else self.zero for i in range(n))


RATIONALS = Field(0)


def _dense_preferred(nnz, rows, cols):
    return rows * cols > 0 and 2 * nnz > rows * cols


@dataclass(frozen=True, eq=False)
class LinMap:
    """A ``rows x cols`` matrix over ``field``; treat as immutable."""

    rows: int
    cols: int
    field: Field
    entries: Mapping[tuple[int, int], Any]

    # construction

    @classmethod
    def from_entries(cls, rows, cols, field, entries):
        clean = {}
        for (r, c), value in dict(entries).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatch(
                    'entry (%(row)s, %(col)s) outside a %(rows)s x %(cols)s map',
                    row=r, col=c, rows=rows, cols=cols,
                )
            value = field.element(value)
            if not field.is_zero(value):
                clean[(r, c)] = value
        return cls(rows, cols, field, clean)

    @classmethod
    def zero(cls, rows, cols, field):
        return cls(rows, cols, field, {})

    @classmethod
    def identity(cls, n, field):
        return cls(n, n, field, {(i, i): field.one for i in range(n)})

    @classmethod
    def from_rows(cls, matrix, field, cols=None):
        matrix = list(matrix)
        if cols is None:
            cols = len(matrix[0]) if matrix else 0
        entries = {}
        for r, row in enumerate(matrix):
            if len(row) != cols:
                raise DimensionMismatch(
                    'row %(index)s has length %(got)s, expected %(expected)s',
                    index=r, got=len(row), expected=cols,
                )
            for c, value in enumerate(row):
                entries[(r, c)] = value
        return cls.from_entries(len(matrix), cols, field, entries)

    @classmethod
    def from_columns(cls, columns, rows, field):
        entries = {}
        columns = list(columns)
        for c, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatch(
                    'column %(index)s has length %(got)s, expected %(expected)s',
                    index=c, got=len(column), expected=rows,
                )
            for r, value in enumerate(column):
                if not field.is_zero(value):
                    entries[(r, c)] = value
        return cls(rows, len(columns), field, entries)

    @classmethod
    def from_function(cls, rows, cols, field, image: Callable[[int], Mapping[int, Any]]):
        """Build a map from the sparse image ``{row: value}`` of each basis vector."""
        entries = {}
        for c in range(cols):
            for r, value in image(c).items():
                if not field.is_zero(value):
                    entries[(r, c)] = entries.get((r, c), field.zero) + value
        entries = {key: value for key, value in entries.items() if not field.is_zero(value)}
        return cls(rows, cols, field, entries)

    @classmethod
    def stack(cls, maps: Sequence['LinMap'], cols=None, field=None):
        """Vertical concatenation."""
        maps = list(maps)
        if cols is None:
            cols = maps[0].cols
        field = field or maps[0].field
        entries = {}
        offset = 0
        for f in maps:
            if f.cols != cols:
                raise DimensionMismatch('stacked map has %(got)s columns, expected %(expected)s',
                                        got=f.cols, expected=cols)
            for (r, c), value in f.entries.items():
                entries[(r + offset, c)] = value
            offset += f.rows
        return cls(offset, cols, field, entries)

    @classmethod
    def hstack(cls, maps: Sequence['LinMap']):
        maps = list(maps)
        rows = maps[0].rows
        entries = {}
        offset = 0
        for f in maps:
            if f.rows != rows:
                raise DimensionMismatch('joined map has %(got)s rows, expected %(expected)s',
                                        got=f.rows, expected=rows)
            for (r, c), value in f.entries.items():
                entries[(r, c + offset)] = value
            offset += f.cols
        return cls(rows, offset, maps[0].field, entries)

    # sympy bridge

    def to_domain_matrix(self, fmt=None):
        dod = {}
        for (r, c), value in self.entries.items():
            dod.setdefault(r, {})[c] = value
        dm = DomainMatrix(dod, (self.rows, self.cols), self.field.domain)
        if fmt == 'dense' or (fmt is None and _dense_preferred(len(self.entries), self.rows, self.cols)):
            dm = dm.to_dense()
        return dm

    @classmethod
    def from_domain_matrix(cls, dm, field):
        rows, cols = dm.shape
        entries = {}
        for r, row in dm.to_sparse().rep.items():
            for c, value in row.items():
                if not field.is_zero(value):
                    entries[(r, c)] = value
        return cls(rows, cols, field, entries)

    # inspection

    @cached_property
    def _by_column(self):
        columns = {}
        for (r, c), value in self.entries.items():
            columns.setdefault(c, {})[r] = value
        return columns

    @cached_property
    def _by_row(self):
        rows = {}
        for (r, c), value in self.entries.items():
            rows.setdefault(r, {})[c] = value
        return rows

    def __getitem__(self, key):
        return self.entries.get(key, self.field.zero)

    def column_dict(self, c):
        return dict(self._by_column.get(c, {}))

    def row_dict(self, r):
        return dict(self._by_row.get(r, {}))

    def column(self, c):
        values = [self.field.zero] * self.rows
        for r, value in self._by_column.get(c, {}).items():
            values[r] = value
        return tuple(values)

    def to_rows(self):
        matrix = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            matrix[r][c] = value
        return matrix

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.rows, self.cols, self.field) == (other.rows, other.cols, other.field) \
            and dict(self.entries) == dict(other.entries)

    __hash__ = None

    def __repr__(self):
        return f'LinMap({self.rows}x{self.cols}, nnz={len(self.entries)}, {self.field})'

    def first_difference(self, other):
        """First column (then row) where two same-shape maps differ, or None."""
        self._require_shape(other)
        for c in range(self.cols):
            mine, theirs = self._by_column.get(c, {}), other._by_column.get(c, {})
            if mine != theirs:
                for r in sorted(set(mine) | set(theirs)):
                    if mine.get(r, self.field.zero) != theirs.get(r, self.field.zero):
                        return r, c
        return None

    def _require_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(
                'shapes %(left)s and %(right)s differ', left=self.shape, right=other.shape,
            )

    # arithmetic

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionMismatch('vector of length %(got)s applied to %(cols)s columns',
                                    got=len(vector), cols=self.cols)
        out = [self.field.zero] * self.rows
        for (r, c), value in self.entries.items():
            x = vector[c]
            if not self.field.is_zero(x):
                out[r] += value * x
        return tuple(out)

    def compose(self, other):
        """``self o other``."""
        if self.cols != other.rows:
            raise DimensionMismatch(
                'cannot compose %(left)s after %(right)s', left=self.shape, right=other.shape,
            )
        if not self.entries or not other.entries:
            return LinMap.zero(self.rows, other.cols, self.field)
        product = self.to_domain_matrix('sparse').matmul(other.to_domain_matrix('sparse'))
        return LinMap.from_domain_matrix(product, self.field)

    __matmul__ = compose

    def __add__(self, other):
        self._require_shape(other)
        entries = dict(self.entries)
        for key, value in other.entries.items():
            total = entries.get(key, self.field.zero) + value
            if self.field.is_zero(total):
                entries.pop(key, None)
            else:
                entries[key] = total
        return LinMap(self.rows, self.cols, self.field, entries)

    def __neg__(self):
        return LinMap(self.rows, self.cols, self.field, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = self.field.element(scalar)
        if self.field.is_zero(scalar):
            return LinMap.zero(self.rows, self.cols, self.field)
        return LinMap(self.rows, self.cols, self.field,
                      {k: v * scalar for k, v in self.entries.items()})

    def transpose(self):
        return LinMap(self.cols, self.rows, self.field,
                      {(c, r): v for (r, c), v in self.entries.items()})

    @property
    def T(self):
        return self.transpose()

    def power(self, exponent):
        result = LinMap.identity(self.rows, self.field)
        for _ in range(exponent):
            result = self.compose(result)
        return result

    def rank(self):
        if not self.entries:
            return 0
        return self.to_domain_matrix().rank()

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self):
        if not self.is_invertible():
            raise DimensionMismatch('map of shape %(shape)s and rank %(rank)s is not invertible',
                                    shape=self.shape, rank=self.rank())
        if self.rows == 0:
            return self
        return LinMap.from_domain_matrix(self.to_domain_matrix('dense').inv(), self.field)

    def charpoly(self):
        """Coefficients of the characteristic polynomial, leading coefficient first."""
        if self.rows == 0:
            return [self.field.one]
        return list(self.to_domain_matrix('dense').charpoly())

    def restrict(self, source: 'Subspace', target: 'Subspace | None' = None):
        """The map ``source -> target`` in subspace coordinates.

        Raises DimensionMismatch naming the first basis vector of ``source``
        whose image leaves ``target``.
        """
        image = self.compose(source.inclusion())
        if target is None:
            return image
        for j in range(image.cols):
            if not target.contains(image.column(j)):
                raise DimensionMismatch(
                    'image of source basis vector %(index)s leaves the target subspace', index=j,
                )
        return target.coordinate_map().compose(image)


def tensor_of_maps(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product: row ``i * g.rows + i2``, column ``j * g.cols + j2``."""
    entries = {}
    for (i, j), a in f.entries.items():
        for (i2, j2), b in g.entries.items():
            entries[(i * g.rows + i2, j * g.cols + j2)] = a * b
    return LinMap(f.rows * g.rows, f.cols * g.cols, f.field, entries)


def tensor_maps(*maps: LinMap) -> LinMap:
    result = maps[0]
    for f in maps[1:]:
        result = tensor_of_maps(result, f)
    return result


def tensor_vectors(u, v):
    return tuple(a * b for a in u for b in v)


def identity(n, field):
    return LinMap.identity(n, field)


def flip_map(m, n, field):
    """``k^m (x) k^n -> k^n (x) k^m``."""
    return LinMap(m * n, m * n, field, {(j * m + i, i * n + j): field.one
                                        for i in range(m) for j in range(n)})


def flatten_map(f: LinMap):
    values = [f.field.zero] * (f.rows * f.cols)
    for (r, c), value in f.entries.items():
        values[r * f.cols + c] = value
    return tuple(values)


def unflatten_map(vector, rows, cols, field):
    if len(vector) != rows * cols:
        raise DimensionMismatch('flattened map of length %(got)s for shape %(rows)s x %(cols)s',
                                got=len(vector), rows=rows, cols=cols)
    entries = {}
    for index, value in enumerate(vector):
        if not field.is_zero(value):
            entries[divmod(index, cols)] = value
    return LinMap(rows, cols, field, entries)


def elementary_map(rows, cols, field, index):
    return LinMap(rows, cols, field, {divmod(index, cols): field.one})


def left_composition_operator(Y: LinMap, cols):
    """Matrix of ``s -> Y o s`` on flattened ``s`` with ``cols`` columns."""
    return tensor_of_maps(Y, LinMap.identity(cols, Y.field))


def right_composition_operator(X: LinMap, rows):
    """Matrix of ``s -> s o X`` on flattened ``s`` with ``rows`` rows."""
    return tensor_of_maps(LinMap.identity(rows, X.field), X.transpose())


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``k^ambient_dim`` stored by its reduced echelon basis."""

    ambient_dim: int
    field: Field
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    @classmethod
    def zero(cls, n, field):
        return cls(n, field, (), ())

    @classmethod
    def full(cls, n, field):
        return cls(n, field, tuple(field.unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @property
    def is_full(self):
        return self.dim == self.ambient_dim

    @cached_property
    def complement_indices(self):
        pivots = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pivots)

    def reduce(self, vector):
        """Remainder of ``vector`` after clearing the pivot columns."""
        out = list(vector)
        for row, pivot in zip(self.basis, self.pivots):
            coefficient = out[pivot]
            if not self.field.is_zero(coefficient):
                for i, value in enumerate(row):
                    if not self.field.is_zero(value):
                        out[i] -= coefficient * value
        return tuple(out)

    def contains(self, vector):
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch('vector of length %(got)s tested against ambient %(ambient)s',
                                    got=len(vector), ambient=self.ambient_dim)
        return all(self.field.is_zero(x) for x in self.reduce(vector))

    def contains_subspace(self, other: 'Subspace'):
        return all(self.contains(row) for row in other.basis)

    def coordinates(self, vector):
        if not self.contains(vector):
            raise DimensionMismatch('vector is not in the subspace')
        return tuple(vector[p] for p in self.pivots)

    def inclusion(self):
        """``k^dim -> k^ambient`` sending coordinates to vectors."""
        return LinMap.from_columns(self.basis, self.ambient_dim, self.field)

    def coordinate_map(self):
        """``k^ambient -> k^dim``; valid on the subspace only."""
        return LinMap(self.dim, self.ambient_dim, self.field,
                      {(i, p): self.field.one for i, p in enumerate(self.pivots)})

    def quotient_map(self):
        """Canonical projection onto ``k^ambient / self`` in complement coordinates."""
        position = {j: i for i, j in enumerate(self.complement_indices)}
        entries = {}
        for j in self.complement_indices:
            entries[(position[j], j)] = self.field.one
        for row, pivot in zip(self.basis, self.pivots):
            for j in self.complement_indices:
                value = row[j]
                if not self.field.is_zero(value):
                    entries[(position[j], pivot)] = -value
        return LinMap(len(self.complement_indices), self.ambient_dim, self.field, entries)

    def quotient_section(self):
        """Splitting of ``quotient_map``: complement coordinates back to standard vectors."""
        return LinMap(self.ambient_dim, len(self.complement_indices), self.field,
                      {(j, i): self.field.one for i, j in enumerate(self.complement_indices)})

    def join(self, other: 'Subspace'):
        return canonicalize_subspace(self.basis + other.basis, self.ambient_dim, self.field)

    def intersect(self, other: 'Subspace'):
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        # kernel of [B1^T | -B2^T] gives the common combinations
        joined = LinMap.hstack([self.inclusion(), -other.inclusion()])
        kernel = kernel_of(joined)
        vectors = [self.inclusion().apply(v[:self.dim]) for v in kernel.basis]
        return canonicalize_subspace(vectors, self.ambient_dim, self.field)

    def tensor_full(self, right_dim):
        """``self (x) k^right_dim`` inside ``k^ambient (x) k^right_dim``."""
        vectors = []
        for row in self.basis:
            for j in range(right_dim):
                vectors.append(tensor_vectors(row, self.field.unit_vector(right_dim, j)))
        return canonicalize_subspace(vectors, self.ambient_dim * right_dim, self.field)

    def tensor_coordinate_map(self, right_dim):
        """Coordinates on ``self (x) k^right_dim`` in the basis ``s_i (x) e_c`` (index ``i * right_dim + c``)."""
        return LinMap(self.dim * right_dim, self.ambient_dim * right_dim, self.field,
                      {(i * right_dim + c, p * right_dim + c): self.field.one
                       for i, p in enumerate(self.pivots) for c in range(right_dim)})

    def left_tensor_coordinate_map(self, left_dim):
        """Coordinates on ``k^left_dim (x) self`` in the basis ``e_c (x) s_i`` (index ``c * dim + i``)."""
        return LinMap(left_dim * self.dim, left_dim * self.ambient_dim, self.field,
                      {(c * self.dim + i, c * self.ambient_dim + p): self.field.one
                       for i, p in enumerate(self.pivots) for c in range(left_dim)})

    def random_element(self, rng: random.Random, spread=5):
        vector = [self.field.zero] * self.ambient_dim
        for row in self.basis:
            c = self.field.element(rng.randint(-spread, spread))
            vector = [x + c * y for x, y in zip(vector, row)]
        return tuple(vector)

    def describe(self):
        return [[self.field.format(x) for x in row] for row in self.basis]


def canonicalize_subspace(vectors: Iterable[Sequence], ambient_dim, field: Field = RATIONALS) -> Subspace:
    """Unique reduced-echelon basis of the span of ``vectors``."""
    rows = []
    for index, vector in enumerate(vectors):
        if len(vector) != ambient_dim:
            raise DimensionMismatch(
                'vector %(index)s has length %(got)s, expected %(expected)s',
                index=index, got=len(vector), expected=ambient_dim,
            )
        rows.append(tuple(field.element(x) for x in vector))
    rows = [row for row in rows if any(not field.is_zero(x) for x in row)]
    if not rows:
        return Subspace.zero(ambient_dim, field)
    matrix = LinMap.from_rows(rows, field, cols=ambient_dim)
    reduced, pivots = matrix.to_domain_matrix().rref()
    reduced = LinMap.from_domain_matrix(reduced, field)
    basis = tuple(reduced.to_rows()[i] for i in range(len(pivots)))
    return Subspace(ambient_dim, field, tuple(tuple(row) for row in basis), tuple(pivots))


def kernel_of(f: LinMap) -> Subspace:
    """Exact null space of ``f``."""
    if not f.entries:
        return Subspace.full(f.cols, f.field)
    reduced, pivots = f.to_domain_matrix().rref()
    reduced = LinMap.from_domain_matrix(reduced, f.field)
    pivot_set = set(pivots)
    vectors = []
    for free in range(f.cols):
        if free in pivot_set:
            continue
        vector = [f.field.zero] * f.cols
        vector[free] = f.field.one
        for i, pivot in enumerate(pivots):
            vector[pivot] = -reduced[(i, free)]
        vectors.append(vector)
    return canonicalize_subspace(vectors, f.cols, f.field)


def image_of(f: LinMap) -> Subspace:
    return canonicalize_subspace([f.column(c) for c in range(f.cols)], f.rows, f.field)


def solve(f: LinMap, rhs) -> tuple | None:
    """First solution of ``f x = rhs`` with free variables set to zero, or None."""
    field = f.field
    rhs = tuple(field.element(x) for x in rhs)
    if len(rhs) != f.rows:
        raise DimensionMismatch('right-hand side of length %(got)s for %(rows)s equations',
                                got=len(rhs), rows=f.rows)
    if all(field.is_zero(x) for x in rhs):
        return field.zero_vector(f.cols)
    augmented = LinMap.hstack([f, LinMap.from_columns([rhs], f.rows, field)])
    reduced, pivots = augmented.to_domain_matrix().rref()
    if f.cols in pivots:
        return None
    reduced = LinMap.from_domain_matrix(reduced, field)
    solution = [field.zero] * f.cols
    for i, pivot in enumerate(pivots):
        solution[pivot] = reduced[(i, f.cols)]
    return tuple(solution)


@dataclass(frozen=True)
class SectionConstraint:
    """``operator . vec(s) = rhs`` on the flattened unknown map (rhs None means zero)."""

    operator: LinMap
    rhs: tuple | None = None


def commuting_constraint(X: LinMap, Y: LinMap, rows, cols):
    """Constraint ``s o X = Y o s`` for an unknown ``rows x cols`` map ``s``."""
    return SectionConstraint(
        right_composition_operator(X, rows) - left_composition_operator(Y, cols),
    )


def find_section(p: LinMap, constraints: Sequence[SectionConstraint] = ()) -> LinMap | None:
    """A right inverse ``s`` of the surjection ``p`` subject to ``constraints``."""
    field = p.field
    rank = p.rank()
    if rank < p.rows:
        raise NotSurjective(rank, p.rows)
    rows, cols = p.cols, p.rows
    blocks = [left_composition_operator(p, cols)]
    rhs = list(flatten_map(LinMap.identity(p.rows, field)))
    for constraint in constraints:
        if constraint.operator.cols != rows * cols:
            raise DimensionMismatch('constraint acts on %(got)s unknowns, expected %(expected)s',
                                    got=constraint.operator.cols, expected=rows * cols)
        blocks.append(constraint.operator)
        rhs.extend(constraint.rhs if constraint.rhs is not None
                   else field.zero_vector(constraint.operator.rows))
    system = LinMap.stack(blocks, cols=rows * cols, field=field)
    solution = solve(system, rhs)
    if solution is None:
        logger.debug('find_section: system of %s equations is infeasible', system.rows)
        return None
    return unflatten_map(solution, rows, cols, field)


def map_space(rows, cols, field, condition: Callable[[LinMap], LinMap | Sequence[LinMap]]) -> Subspace:
    """Flattened ``rows x cols`` maps ``f`` with ``condition(f) == 0`` (condition linear in f)."""
    columns = []
    for index in range(rows * cols):
        value = condition(elementary_map(rows, cols, field, index))
        if isinstance(value, LinMap):
            value = [value]
        vector = []
        for part in value:
            vector.extend(flatten_map(part))
        columns.append(tuple(vector))
    if not columns:
        return Subspace.zero(0, field)
    height = len(columns[0])
    if height == 0:
        return Subspace.full(rows * cols, field)
    return kernel_of(LinMap.from_columns(columns, height, field))


def find_invertible(space: Subspace, rows, cols, seed=0, attempts=8) -> LinMap | None:
    """An invertible map in a space of flattened square maps, or None.

    Seeded random combinations first, then each basis element. When both miss,
    ``_invertible_by_determinant`` decides the question exactly.
    """
    if rows != cols:
        return None
    field = space.field
    if rows == 0:
        return LinMap.identity(0, field)
    if space.dim == 0:
        return None
    rng = random.Random(seed)
    for _ in range(attempts):
        candidate = unflatten_map(space.random_element(rng), rows, cols, field)
        if candidate.is_invertible():
            return candidate
    for row in space.basis:
        candidate = unflatten_map(row, rows, cols, field)
        if candidate.is_invertible():
            return candidate
    return _invertible_by_determinant(space, rows)


def _invertible_by_determinant(space: Subspace, n) -> LinMap | None:
    """Fix the coefficients of ``sum t_i B_i`` one at a time so ``det`` stays a nonzero polynomial.

    ``det`` has degree at most ``n`` in each ``t_i``, so ``n + 1`` trial values
    per coefficient suffice over QQ and over GF(p) with ``p > n``; smaller
    primes try every residue and backtrack.
    """
    field = space.field
    ring = field.domain.poly_ring(*symbols(f't:{space.dim}'))
    entries = [[ring.zero] * n for _ in range(n)]
    for row, gen in zip(space.basis, ring.gens):
        for index, value in enumerate(row):
            if not field.is_zero(value):
                r, c = divmod(index, n)
                entries[r][c] += gen * value
    det = DomainMatrix(entries, (n, n), ring).det()
    p = field.characteristic
    trials = [field.element(v) for v in range(n + 1 if p == 0 or p > n else p)]

    def assign(polynomial, fixed):
        if not polynomial:
            return None
        if len(fixed) == space.dim:
            return fixed
        gen = ring.gens[len(fixed)]
        for value in trials:
            found = assign(polynomial.subs(gen, value), fixed + [value])
            if found is not None:
                return found
        return None

    coefficients = assign(det, [])
    if coefficients is None:
        logger.debug('find_invertible: %s-dim space of %sx%s maps has no invertible element', space.dim, n, n)
        return None
    vector = [field.zero] * space.ambient_dim
    for c, row in zip(coefficients, space.basis):
        vector = [x + c * y for x, y in zip(vector, row)]
    return unflatten_map(tuple(vector), n, n, field)


def random_vector(n, field, rng: random.Random, spread=5):
    return tuple(field.element(rng.randint(-spread, spread)) for _ in range(n))
