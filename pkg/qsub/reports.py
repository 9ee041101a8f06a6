"""Machine-readable run reports.

A report is deterministic for fixed inputs and seed: keys are sorted, inputs are
identified by content hashes and the runtime is only written when asked for.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from django.core.exceptions import ValidationError

from . import choices
from .checks import CheckSuite
from .exceptions import message_of


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=str) + '\n'


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def error_record(error: ValidationError):
    record = {'code': error.code, 'message': message_of(error)}
    if error.params:
        record['params'] = {key: value if isinstance(value, (int, str, list)) else str(value)
                            for key, value in error.params.items()}
    return record


@dataclass
class Report:
    command: str
    seed: int | None = None
    inputs: dict[str, str] = field(default_factory=dict)
    suites: list[CheckSuite] = field(default_factory=list)
    facts: dict[str, Any] = field(default_factory=dict)
    assumed: list[str] = field(default_factory=list)
    error: dict[str, Any] | None = None
    runtime: float | None = None

    def add_input(self, role, content_hash):
        self.inputs[role] = content_hash

    def add_suite(self, suite: CheckSuite):
        self.suites.append(suite)
        return suite

    def assume(self, *hypotheses):
        for hypothesis in hypotheses:
            if hypothesis not in self.assumed:
                self.assumed.append(hypothesis)

    def fail_input(self, error: ValidationError):
        self.error = error_record(error)

    @property
    def verdict(self):
        if self.error is not None:
            return choices.INPUT_ERROR
        if all(suite.passed for suite in self.suites):
            return choices.PASSED
        return choices.CHECK_FAILED

    @property
    def exit_code(self):
        return choices.EXIT_CODES[self.verdict]

    @property
    def check_count(self):
        return sum(len(suite.checks) for suite in self.suites)

    @property
    def failure_count(self):
        return sum(len(suite.failures) for suite in self.suites)

    @property
    def input_hash(self):
        return sha256_hex(canonical_json(self.inputs))

    def as_dict(self):
        data = {
            'command': self.command,
            'inputs': self.inputs,
            'verdict': self.verdict,
            'exit_code': self.exit_code,
            'suites': [suite.as_dict() for suite in self.suites],
            'facts': self.facts,
            'assumed_hypotheses': sorted(self.assumed),
            'seed': self.seed,
        }
        if self.error is not None:
            data['error'] = self.error
        if self.runtime is not None:
            data['runtime_seconds'] = round(self.runtime, 3)
        return data

    def to_json(self):
        return canonical_json(self.as_dict())

    def summary_lines(self):
        lines = [f'{self.command}: {self.verdict}']
        if self.error is not None:
            lines.append(f'  input error [{self.error["code"]}]: {self.error["message"]}')
        for suite in self.suites:
            status = 'ok' if suite.passed else 'FAILED'
            lines.append(f'  {suite.title}: {len(suite.checks) - len(suite.failures)}/{len(suite.checks)} {status}')
            for check in suite.failures:
                lines.append(f'    - {check.name}: {json.dumps(check.witness, sort_keys=True, default=str)}')
        for key in sorted(self.facts):
            lines.append(f'  {key} = {json.dumps(self.facts[key], sort_keys=True, default=str)}')
        for hypothesis in sorted(self.assumed):
            lines.append(f'  assumed: {hypothesis}')
        return lines
