"""Verdict objects shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None

    def __post_init__(self):
        if not self.passed and not self.witness:
            object.__setattr__(self, 'witness', {'detail': 'no witness recorded'})

    def __bool__(self):
        return self.passed

    def as_dict(self):
        data = {'name': self.name, 'passed': self.passed}
        if self.witness is not None:
            data['witness'] = self.witness
        return data


@dataclass
class CheckSuite:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, witness=None):
        check = Check(name, bool(passed), witness)
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check], prefix=''):
        for check in checks:
            self.checks.append(Check(prefix + check.name, check.passed, check.witness))

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def __bool__(self):
        return self.passed

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def as_dict(self):
        return {
            'title': self.title,
            'passed': self.passed,
            'checks': [check.as_dict() for check in self.checks],
        }
