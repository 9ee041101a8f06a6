"""Error types.

Bad input is reported with Django ``ValidationError`` subclasses so every
message carries a ``code`` and ``params``; the command layer turns them into
exit code 2. Failures discovered while computing are plain exceptions.
"""

from django.core.exceptions import ValidationError


class DimensionMismatch(ValidationError):
    def __init__(self, message, **params):
        super().__init__(message, code='dimension_mismatch', params=params)


class SpecFileError(ValidationError):
    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        super().__init__(
            '%(line)s:%(column)s: %(detail)s',
            code='spec_file',
            params={'line': line, 'column': column, 'detail': message},
        )


class NotSurjective(ValidationError):
    def __init__(self, rank, codomain):
        super().__init__(
            'map has rank %(rank)s but codomain dimension %(codomain)s',
            code='not_surjective',
            params={'rank': rank, 'codomain': codomain},
        )


class NotASubgroup(ValidationError):
    def __init__(self, left, right):
        super().__init__(
            'product %(left)s * %(right)s leaves the subset',
            code='not_a_subgroup',
            params={'left': left, 'right': right},
        )


class NotPrimitiveRoot(ValidationError):
    def __init__(self, q, n, p):
        super().__init__(
            '%(q)s is not a primitive %(n)s-th root of unity modulo %(p)s',
            code='not_primitive_root',
            params={'q': q, 'n': n, 'p': p},
        )


class DimensionCapExceeded(ValidationError):
    def __init__(self, dim, cap):
        super().__init__(
            'dimension %(dim)s exceeds QSUB_DIMENSION_CAP=%(cap)s',
            code='dimension_cap',
            params={'dim': dim, 'cap': cap},
        )


def message_of(error):
    """Flatten a ValidationError into one line."""
    if isinstance(error, ValidationError):
        return '; '.join(error.messages)
    return str(error)


class RadicalUnavailable(Exception):
    """Trace-form radical needs characteristic 0 or p > dim A."""


class VerificationFailed(Exception):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotInducedByCoalgebraMap(VerificationFailed):
    pass


class PipelineHalted(VerificationFailed):
    def __init__(self, stage, certificate=None):
        super().__init__(f'pipeline halted at stage {stage!r}', certificate)
        self.stage = stage


class UnsupportedField(ValidationError):
    def __init__(self, characteristic):
        super().__init__(
            'field characteristic %(p)s is neither 0 nor a prime',
            code='unsupported_field',
            params={'p': characteristic},
        )


class NotAGroup(ValidationError):
    def __init__(self, axiom, witness):
        super().__init__(
            'group table fails %(axiom)s at %(witness)s',
            code='not_a_group',
            params={'axiom': axiom, 'witness': witness},
        )


class UnknownName(ValidationError):
    def __init__(self, kind, name):
        super().__init__(
            'unknown %(kind)s %(name)s',
            code='unknown_name',
            params={'kind': kind, 'name': name},
        )
