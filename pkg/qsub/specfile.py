"""Plain-text spec files for Hopf algebras, coalgebras and the data living over them.

A file is a list of directives, one per line; ``#`` starts a comment::

    field QQ
    kind hopf
    basis 1 g x gx
    map mult
      g(x)g  1  1
      g(x)x  gx 1
      ...

Every entry of a ``map`` section reads ``<input> <output> <value>``. Inputs and
outputs are basis labels, tensor labels joined with ``(x)``, or ``k`` for the
ground field. Values are integers or ``num/den`` strings.
"""

from __future__ import annotations

import hashlib
import logging
import re
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path

from .catalog import (
    cyclic_group,
    function_algebra,
    group_algebra,
    matrix_coalgebra,
    require_within_cap,
    s3_subgroups,
    span_of_labels,
    subgroup_data,
    sweedler4,
    symmetric_group,
    taft,
    trivial_hopf,
)
from .correspondence import (
    QuotientModuleCoalgebraData,
    quotient_from_ideal,
    quotient_module_coalgebra,
    verify_coideal_subalgebra,
)
from .exceptions import DimensionMismatch, NotSurjective, SpecFileError, UnsupportedField
from .hopf import TENSOR, AlgebraData, CoalgebraData, HopfAlgebraData, PairingData
from .linalg import Field, LinMap, Subspace, canonicalize_subspace, kernel_of
from .reps import LEFT, RIGHT, ComoduleData

logger = logging.getLogger(__name__)

SCALAR = 'k'
DIRECTIVES = ('field', 'kind', 'basis', 'ambient', 'side', 'map')
RESERVED = set(DIRECTIVES) | {SCALAR}

HOPF = 'hopf'
COALGEBRA = 'coalgebra'
COMODULE = 'comodule'
SUBSPACE = 'subspace'
PAIRING = 'pairing'
QUOTIENT = 'quotient'

# per kind: map name -> (input factors, output factors); 'B' is the basis, 'A' the ambient
MAP_SHAPES = {
    HOPF: {
        'mult': ('BB', 'B'),
        'unit': ('', 'B'),
        'comult': ('B', 'BB'),
        'counit': ('B', ''),
        'antipode': ('B', 'B'),
    },
    COALGEBRA: {
        'comult': ('B', 'BB'),
        'counit': ('B', ''),
    },
    COMODULE: {
        'coaction': ('B', 'BA'),
    },
    SUBSPACE: {
        'inclusion': ('B', 'A'),
    },
    PAIRING: {
        'form': ('BA', ''),
    },
    QUOTIENT: {
        'projection': ('A', 'B'),
    },
}
NEEDS_AMBIENT = (COMODULE, SUBSPACE, PAIRING, QUOTIENT)

_FIELD_PATTERN = re.compile(r'^(?:QQ|0|GF\((\d+)\)|(\d+))$')


@dataclass(frozen=True)
class Entry:
    source: tuple[str, ...]
    target: tuple[str, ...]
    value: str
    line: int = 0
    column: int = 0


@dataclass
class SpecDocument:
    field: Field
    kind: str
    labels: tuple[str, ...]
    ambient: tuple[str, ...] = ()
    side: str = RIGHT
    maps: dict[str, list[Entry]] = dataclass_field(default_factory=dict)
    source: str = '<string>'

    @property
    def dim(self):
        return len(self.labels)

    def factor_labels(self, letter):
        return self.labels if letter == 'B' else self.ambient

    def shape(self, name):
        source, target = MAP_SHAPES[self.kind][name]
        if self.kind == COMODULE and self.side == LEFT:
            target = target[::-1]
        return source, target

    def matrix(self, name) -> LinMap:
        """The named map with rows and columns in declared label order."""
        source, target = self.shape(name)
        source_factors = [self.factor_labels(letter) for letter in source]
        target_factors = [self.factor_labels(letter) for letter in target]
        entries = {}
        for entry in self.maps.get(name, ()):
            row = _flat_index(entry.target, target_factors)
            col = _flat_index(entry.source, source_factors)
            entries[(row, col)] = _parse_value(self.field, entry.value, entry.line, entry.column)
        return LinMap.from_entries(_size(target_factors), _size(source_factors), self.field, entries)


def _size(factors):
    size = 1
    for labels in factors:
        size *= len(labels)
    return size


def _flat_index(parts, factors):
    index = 0
    for part, labels in zip(parts, factors):
        index = index * len(labels) + labels.index(part)
    return index


def _parse_value(field: Field, text, line, column):
    try:
        return field.parse(text)
    except ValueError:
        raise SpecFileError(f'bad value {text!r} for field {field.name}', line, column) from None


def _tokens(line):
    return [(match.group(), match.start() + 1) for match in re.finditer(r'\S+', line.split('#', 1)[0])]


def _parse_field(token, line, column):
    match = _FIELD_PATTERN.match(token)
    if match is None:
        raise SpecFileError(f'bad field {token!r}; expected QQ or GF(p)', line, column)
    characteristic = int(match.group(1) or match.group(2) or 0)
    try:
        return Field(characteristic)
    except UnsupportedField:
        raise SpecFileError(f'{characteristic} is not a prime', line, column) from None


def _split_tensor(token):
    return () if token == SCALAR else tuple(token.split(TENSOR))


def parse(text, source='<string>') -> SpecDocument:
    """Parse spec text; errors carry 1-based line and column."""
    header = {}
    positions = {}
    labels, ambient = [], []
    maps: dict[str, list[Entry]] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw)
        if not tokens:
            continue
        word, column = tokens[0]
        if word in DIRECTIVES:
            arguments = tokens[1:]
            positions.setdefault(word, (number, column))
            if word in ('field', 'kind', 'side', 'map') and len(arguments) != 1:
                raise SpecFileError(f'{word} takes exactly one argument', number, column)
            if word == 'field':
                header['field'] = _parse_field(arguments[0][0], number, arguments[0][1])
            elif word in ('kind', 'side'):
                header[word] = arguments[0][0]
                positions[word] = (number, arguments[0][1])
            elif word == 'basis':
                labels.extend(_declare(arguments, labels, number))
            elif word == 'ambient':
                ambient.extend(_declare(arguments, ambient, number))
            else:
                current = arguments[0][0]
                positions[f'map {current}'] = (number, arguments[0][1])
                maps.setdefault(current, [])
            continue
        if current is None:
            raise SpecFileError(f'unknown directive {word!r}', number, column)
        if len(tokens) != 3:
            raise SpecFileError('a map entry reads <input> <output> <value>', number, column)
        (inp, _), (out, out_column), (value, value_column) = tokens
        maps[current].append(Entry(_split_tensor(inp), _split_tensor(out), value, number, value_column))
        positions[(current, len(maps[current]) - 1)] = ((number, column), (number, out_column))

    document = _assemble(header, positions, labels, ambient, maps, source)
    _validate(document, positions)
    logger.debug('parsed %s spec %s of dim %s', document.kind, source, document.dim)
    return document


def _declare(arguments, existing, number):
    fresh = []
    for label, column in arguments:
        if label in RESERVED or TENSOR in label:
            raise SpecFileError(f'{label!r} cannot be used as a basis label', number, column)
        if label in existing or label in fresh:
            raise SpecFileError(f'label {label!r} declared twice', number, column)
        fresh.append(label)
    return fresh


def _assemble(header, positions, labels, ambient, maps, source):
    for required in ('field', 'kind'):
        if required not in header:
            raise SpecFileError(f'missing {required} directive', 1, 1)
    kind = header['kind']
    if kind not in MAP_SHAPES:
        raise SpecFileError(f'unknown kind {kind!r}', *positions['kind'])
    side = header.get('side', RIGHT)
    if side not in (LEFT, RIGHT):
        raise SpecFileError(f'side must be left or right, not {side!r}', *positions['side'])
    if kind in NEEDS_AMBIENT and 'ambient' not in positions:
        raise SpecFileError(f'a {kind} spec needs an ambient directive', *positions['kind'])
    return SpecDocument(header['field'], kind, tuple(labels), tuple(ambient), side, maps, source)


def _validate(document: SpecDocument, positions):
    require_within_cap(max(document.dim, len(document.ambient)))
    expected = MAP_SHAPES[document.kind]
    for name in document.maps:
        if name not in expected:
            raise SpecFileError(f'{document.kind} spec has no map {name!r}', *positions[f'map {name}'])
    for name in expected:
        if name not in document.maps:
            raise SpecFileError(f'{document.kind} spec is missing map {name!r}', *positions['kind'])
        source, target = document.shape(name)
        seen = set()
        for index, entry in enumerate(document.maps[name]):
            input_position, output_position = positions[(name, index)]
            _check_tensor(document, entry.source, source, input_position)
            _check_tensor(document, entry.target, target, output_position)
            key = (entry.source, entry.target)
            if key in seen:
                raise SpecFileError('duplicate entry', *input_position)
            seen.add(key)
            _parse_value(document.field, entry.value, entry.line, entry.column)


def _check_tensor(document, parts, letters, position):
    if len(parts) != len(letters):
        raise DimensionMismatch(
            'line %(line)s: tensor of %(got)s factors where the map needs %(expected)s',
            line=position[0], got=len(parts), expected=len(letters),
        )
    for part, letter in zip(parts, letters):
        if part not in document.factor_labels(letter):
            where = 'basis' if letter == 'B' else 'ambient'
            raise SpecFileError(f'label {part!r} is not declared in {where}', *position)


def load(path) -> SpecDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as error:
        raise SpecFileError(f'cannot read {path}: {error.strerror}', 0, 0) from None
    return parse(text, str(path))


# serialization


def _format_tensor(parts):
    return TENSOR.join(parts) if parts else SCALAR


def _render(document: SpecDocument, entries_for):
    lines = [f'field {document.field.name}', f'kind {document.kind}', 'basis ' + ' '.join(document.labels)]
    if document.kind in NEEDS_AMBIENT:
        lines.append('ambient ' + ' '.join(document.ambient))
    if document.kind == COMODULE:
        lines.append(f'side {document.side}')
    for name in MAP_SHAPES[document.kind]:
        lines.append(f'map {name}')
        for source, target, value in entries_for(name):
            lines.append(f'  {_format_tensor(source)} {_format_tensor(target)} {value}')
    return '\n'.join(lines) + '\n'


def _sorted_entries(document: SpecDocument, name, order_labels, order_ambient):
    source_letters, target_letters = document.shape(name)
    field = document.field

    def key(entry):
        positions = []
        for parts, letters in ((entry.source, source_letters), (entry.target, target_letters)):
            for part, letter in zip(parts, letters):
                positions.append((order_labels if letter == 'B' else order_ambient).index(part))
        return positions

    out = []
    for entry in sorted(document.maps[name], key=key):
        value = field.format(_parse_value(field, entry.value, entry.line, entry.column))
        if value != '0':
            out.append((entry.source, entry.target, value))
    return out


def serialize(document: SpecDocument) -> str:
    """Declared label order kept; entries in basis order with normalized values."""
    return _render(document, lambda name: _sorted_entries(document, name, document.labels, document.ambient))


def canonical_text(document: SpecDocument) -> str:
    """Labels sorted so that reordering a declaration leaves the text unchanged."""
    labels, ambient = tuple(sorted(document.labels)), tuple(sorted(document.ambient))
    sorted_document = SpecDocument(document.field, document.kind, labels, ambient,
                                   document.side, document.maps, document.source)
    return _render(sorted_document, lambda name: _sorted_entries(document, name, labels, ambient))


def content_hash(document: SpecDocument) -> str:
    return hashlib.sha256(canonical_text(document).encode('utf-8')).hexdigest()


def document_from_map_columns(field, kind, labels, matrices: dict[str, LinMap], ambient=(), side=RIGHT):
    """Build a document from in-memory maps; zero entries are dropped."""
    document = SpecDocument(field, kind, tuple(labels), tuple(ambient), side, {})
    for name in MAP_SHAPES[kind]:
        source, target = document.shape(name)
        source_factors = [document.factor_labels(letter) for letter in source]
        target_factors = [document.factor_labels(letter) for letter in target]
        f = matrices[name]
        entries = []
        for (row, col), value in sorted(f.entries.items(), key=lambda item: (item[0][1], item[0][0])):
            entries.append(Entry(_unflatten(col, source_factors), _unflatten(row, target_factors), field.format(value)))
        document.maps[name] = entries
    return document


def _unflatten(index, factors):
    parts = []
    for labels in reversed(factors):
        index, position = divmod(index, len(labels))
        parts.append(labels[position])
    return tuple(reversed(parts))


def from_hopf(H: HopfAlgebraData) -> SpecDocument:
    return document_from_map_columns(H.field, HOPF, H.labels, {
        'mult': H.mult, 'unit': H.unit, 'comult': H.comult, 'counit': H.counit, 'antipode': H.antipode,
    })


def from_coalgebra(C: CoalgebraData) -> SpecDocument:
    return document_from_map_columns(C.field, COALGEBRA, C.labels, {'comult': C.comult, 'counit': C.counit})


def from_subspace(S: Subspace, ambient_labels, prefix='v') -> SpecDocument:
    labels = [f'{prefix}{i}' for i in range(S.dim)]
    return document_from_map_columns(S.field, SUBSPACE, labels, {'inclusion': S.inclusion()}, ambient_labels)


def from_quotient(Q: QuotientModuleCoalgebraData) -> SpecDocument:
    return document_from_map_columns(Q.hopf.field, QUOTIENT, Q.coalgebra.labels, {'projection': Q.pi},
                                     Q.hopf.labels)


def from_comodule(V: ComoduleData, labels=None) -> SpecDocument:
    labels = labels or [f'n{i}' for i in range(V.dim)]
    return document_from_map_columns(V.field, COMODULE, labels, {'coaction': V.coaction},
                                     V.over.labels, V.side)


# conversion to library objects


def _require_kind(document: SpecDocument, *kinds):
    if document.kind not in kinds:
        raise SpecFileError(f'{document.source} holds a {document.kind}, expected {" or ".join(kinds)}', 1, 1)


def _same_field(document: SpecDocument, field: Field):
    if document.field != field:
        raise DimensionMismatch('spec over %(got)s used with an object over %(expected)s',
                                got=document.field.name, expected=field.name)


def _aligned_ambient(document: SpecDocument, labels):
    """Reorder so the ambient factor follows ``labels``; rejects a different label set."""
    if len(document.ambient) != len(labels):
        raise DimensionMismatch('ambient declares %(declared)s labels, the object has dim %(dim)s',
                                declared=len(document.ambient), dim=len(labels))
    if set(document.ambient) != set(labels):
        missing = sorted(set(document.ambient) - set(labels))
        raise SpecFileError(f'ambient labels {missing} are not basis labels of the ambient object', 1, 1)
    return SpecDocument(document.field, document.kind, document.labels, tuple(labels),
                        document.side, document.maps, document.source)


def to_hopf(document: SpecDocument) -> HopfAlgebraData:
    _require_kind(document, HOPF)
    n, labels = document.dim, document.labels
    algebra = AlgebraData(n, document.matrix('mult'), document.matrix('unit'), labels)
    coalgebra = CoalgebraData(n, document.matrix('comult'), document.matrix('counit'), labels)
    return HopfAlgebraData(algebra, coalgebra, document.matrix('antipode'))


def to_coalgebra(document: SpecDocument) -> CoalgebraData:
    _require_kind(document, HOPF, COALGEBRA)
    return CoalgebraData(document.dim, document.matrix('comult'), document.matrix('counit'), document.labels)


def to_comodule(document: SpecDocument, C: CoalgebraData) -> ComoduleData:
    _require_kind(document, COMODULE)
    _same_field(document, C.field)
    document = _aligned_ambient(document, C.labels)
    return ComoduleData(document.dim, document.matrix('coaction'), C, document.side)


def to_subspace(document: SpecDocument, H: HopfAlgebraData) -> Subspace:
    _require_kind(document, SUBSPACE)
    _same_field(document, H.field)
    document = _aligned_ambient(document, H.labels)
    inclusion = document.matrix('inclusion')
    return canonicalize_subspace([inclusion.column(c) for c in range(inclusion.cols)], H.dim, H.field)


def to_quotient(document: SpecDocument, H: HopfAlgebraData) -> QuotientModuleCoalgebraData:
    """``H / ker(pi)`` for the declared surjection ``pi``."""
    _require_kind(document, QUOTIENT)
    _same_field(document, H.field)
    document = _aligned_ambient(document, H.labels)
    pi = document.matrix('projection')
    rank = pi.rank()
    if rank != pi.rows:
        raise NotSurjective(rank, pi.rows)
    return quotient_from_ideal(H, kernel_of(pi))


def to_pairing(document: SpecDocument, U: HopfAlgebraData, H: HopfAlgebraData) -> PairingData:
    _require_kind(document, PAIRING)
    _same_field(document, H.field)
    if document.dim != U.dim:
        raise DimensionMismatch('pairing declares %(declared)s left labels, the left object has dim %(dim)s',
                                declared=document.dim, dim=U.dim)
    document = _aligned_ambient(document, H.labels)
    form = document.matrix('form')
    order = [document.labels.index(label) for label in U.labels] if set(document.labels) == set(U.labels) \
        else list(range(U.dim))
    entries = {(0, a * H.dim + i): form[(0, order[a] * H.dim + i)] for a in range(U.dim) for i in range(H.dim)}
    return PairingData(U, H, LinMap.from_entries(1, U.dim * H.dim, H.field, entries))


def spec_library() -> dict[str, SpecDocument]:
    """The catalog objects and their subalgebra and quotient data, keyed by file name."""
    S3 = symmetric_group(3)
    H4 = sweedler4()
    A4 = verify_coideal_subalgebra(H4, span_of_labels(H4, ['1', 'g']))
    A6, Q6 = subgroup_data(S3, s3_subgroups(S3)['C2'])
    function_s3 = function_algebra(S3)
    return {
        'trivial.spec': from_hopf(trivial_hopf()),
        'group-algebra-C2.spec': from_hopf(group_algebra(cyclic_group(2))),
        'group-algebra-S3.spec': from_hopf(group_algebra(S3)),
        'function-algebra-S3.spec': from_hopf(function_s3),
        'sweedler4.spec': from_hopf(H4),
        'taft-3-GF7.spec': from_hopf(taft(3, 7, 2)),
        'matrix-coalgebra-2.spec': from_coalgebra(matrix_coalgebra(2)),
        'sweedler4-subalgebra-1-g.spec': from_subspace(A4.subspace, H4.labels),
        'sweedler4-quotient-1-g.spec': from_quotient(quotient_module_coalgebra(A4)),
        'function-algebra-S3-subalgebra-C2.spec': from_subspace(A6.subspace, function_s3.labels),
        'function-algebra-S3-quotient-C2.spec': from_quotient(Q6),
    }
