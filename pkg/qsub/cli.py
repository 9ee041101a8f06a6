"""Command dispatch shared by ``manage.py qsub`` and the acceptance suite.

``run(argv)`` parses a command line, executes it and returns a ``Report``;
the report's exit code is 0 when every check passed, 1 when a check failed and
2 on bad input.
"""

from __future__ import annotations

import argparse
import logging
import time
from math import isqrt
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError

from . import specfile
from .catalog import CATALOG, build, matrix_coalgebra
from .checks import CheckSuite
from .correspondence import (
    algebra_relative_module,
    classify_quantum,
    coinvariants,
    hopf_relative_module,
    mw_equivalence_check,
    quotient_module_coalgebra,
    roundtrip_correspondence,
    simple_comodules,
    verify_coideal_subalgebra,
)
from .exceptions import DimensionMismatch, PipelineHalted, RadicalUnavailable, UnknownName, VerificationFailed
from .hopf import (
    antipode_bijective,
    antipode_order,
    basis_grouplikes,
    check_coalgebra_axioms,
    check_hopf_axioms,
    check_pairing,
)
from .linalg import identity
from .monadics import gamma_isomorphism, run_quotient_pipeline
from .morita import (
    coend_matrix_witness,
    coend_regular_witness,
    identity_pre_equivalence,
    matrix_morita_data,
    verify_pre_equivalence,
)
from .reports import Report
from .reps import RIGHT, ComoduleData, check_representation, regular_comodule, trivial_comodule
from .suite import run_suite

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('check', 'catalog', 'correspond', 'mw', 'theorem2', 'gamma', 'morita', 'suite')
ALIASES = {'pipeline': 'theorem2'}


def default_seed():
    return getattr(settings, 'QSUB_DEFAULT_SEED', 0)


def add_subcommands(parser: argparse.ArgumentParser):
    """Install the subcommands on ``parser`` (a plain or a Django command parser)."""
    subparsers = parser.add_subparsers(dest='subcommand', required=True)

    check = subparsers.add_parser('check', help='Run the axiom suite for a spec file')
    check.add_argument('spec')
    check.add_argument('--over', action='append', default=[],
                       help='Ambient spec(s): the coalgebra of a comodule, the Hopf algebra of a '
                            'subspace or quotient, the left then right Hopf algebra of a pairing')

    catalog = subparsers.add_parser('catalog', help='Build a catalog object')
    catalog.add_argument('name', choices=sorted(CATALOG))
    catalog.add_argument('params', nargs='*', help='key=value constructor parameters')
    catalog.add_argument('--emit', help='Write the object as a spec file')

    correspond = subparsers.add_parser('correspond', help='Coideal subalgebra / quotient correspondence')
    correspond.add_argument('spec')
    target = correspond.add_mutually_exclusive_group(required=True)
    target.add_argument('--subalgebra')
    target.add_argument('--quotient')

    mw = subparsers.add_parser('mw', help='Relative Hopf modules versus comodules over the quotient')
    mw.add_argument('spec')
    mw.add_argument('--subalgebra', required=True)
    mw.add_argument('--objects', action='append', default=[], help='Comodule specs over the quotient')

    theorem2 = subparsers.add_parser('theorem2', aliases=['pipeline'],
                                     help='From a coflat quotient to its coideal subalgebra')
    theorem2.add_argument('spec')
    theorem2.add_argument('--quotient', required=True)
    theorem2.add_argument('--coaction', help='Comodule spec: H as a right comodule over the quotient, '
                                             'the functor data the coalgebra map is recovered from')

    gamma = subparsers.add_parser('gamma', help='The isomorphism X (x) (M [] H) -> (X (x) M) [] H')
    gamma.add_argument('spec')
    gamma.add_argument('--quotient', required=True)
    gamma.add_argument('--samples', type=int, default=100)

    morita = subparsers.add_parser('morita', help='Pre-equivalence data and Coend witnesses')
    morita.add_argument('spec', nargs='?')
    morita.add_argument('--data', choices=('identity', 'matrix'), default='identity')
    morita.add_argument('--n', type=int, default=2)

    suite = subparsers.add_parser('suite', help='The acceptance suite')
    suite.add_argument('which', choices=('all',))

    for sub in subcommand_parsers(subparsers):
        sub.add_argument('--seed', type=int, default=None)
        sub.add_argument('--report', help='Write the JSON report to this file')
        sub.add_argument('--timing', action='store_true', help='Record the runtime in the report')
    return subparsers


def subcommand_parsers(subparsers):
    """Each subcommand parser once; an alias shares its parser."""
    return list({id(sub): sub for sub in subparsers.choices.values()}.values())


def build_parser():
    parser = argparse.ArgumentParser(prog='qsub')
    add_subcommands(parser)
    return parser


def run(argv) -> Report:
    options = vars(build_parser().parse_args(list(argv)))
    return execute(options)


def execute(options: dict) -> Report:
    """Run a parsed command; input errors and failed verifications end up in the report."""
    command = ALIASES.get(options['subcommand'], options['subcommand'])
    seed = options.get('seed')
    seed = default_seed() if seed is None else seed
    report = Report(command, seed)
    handler = HANDLERS[command]
    started = time.perf_counter()
    try:
        handler(options, report, seed)
    except ValidationError as error:
        logger.info('%s: input error %s', command, error.messages)
        report.fail_input(error)
    except PipelineHalted as error:
        report.facts['halted_stage'] = error.stage
        _record_failure(report, error, f'halted at {error.stage}')
    except VerificationFailed as error:
        _record_failure(report, error, str(error))
    except RadicalUnavailable as error:
        report.add_suite(CheckSuite('radical')).add('radical_available', False, {'detail': str(error)})
    if options.get('timing'):
        report.runtime = time.perf_counter() - started
    if options.get('report'):
        Path(options['report']).write_text(report.to_json(), encoding='utf-8')
    logger.info('%s finished: %s (%s checks, %s failed)', command, report.verdict,
                report.check_count, report.failure_count)
    return report


def _record_failure(report: Report, error: VerificationFailed, detail):
    """Attach the failed certificate once; a bare failure gets a one-check suite."""
    certificate = error.certificate
    if certificate is None or certificate.passed:
        certificate = certificate or CheckSuite('verification')
        certificate.add('verification_failed', False, {'detail': detail})
    if not any(suite is certificate for suite in report.suites):
        report.add_suite(certificate)


# loading


def _load(path, report: Report, role):
    document = specfile.load(path)
    report.add_input(role, specfile.content_hash(document))
    return document


def _load_hopf(path, report: Report, role='spec'):
    H = specfile.to_hopf(_load(path, report, role))
    suite = report.add_suite(check_hopf_axioms(H))
    if not suite.passed:
        raise VerificationFailed(f'{role} fails the Hopf axioms', suite)
    return H


def _load_quotient(path, H, report: Report):
    Q = specfile.to_quotient(_load(path, report, 'quotient'), H)
    report.add_suite(Q.require_verified().certificate)
    report.facts['dim_B'] = Q.dim
    return Q


# handlers


def handle_check(options, report: Report, seed):
    document = _load(options['spec'], report, 'spec')
    over = options.get('over') or []
    kind = document.kind
    required = {specfile.COMODULE: 1, specfile.SUBSPACE: 1, specfile.QUOTIENT: 1, specfile.PAIRING: 2}.get(kind, 0)
    if len(over) != required:
        raise DimensionMismatch('a %(kind)s spec needs %(required)s --over file(s), got %(got)s',
                                kind=kind, required=required, got=len(over))
    report.facts['kind'] = kind
    report.facts['dim'] = document.dim
    if kind == specfile.HOPF:
        H = specfile.to_hopf(document)
        suite = report.add_suite(check_hopf_axioms(H))
        suite.checks.append(antipode_bijective(H))
    elif kind == specfile.COALGEBRA:
        report.add_suite(check_coalgebra_axioms(specfile.to_coalgebra(document)))
    elif kind == specfile.COMODULE:
        C = specfile.to_coalgebra(_load(over[0], report, 'over'))
        report.add_suite(check_representation(specfile.to_comodule(document, C)))
    elif kind == specfile.SUBSPACE:
        H = _load_hopf(over[0], report, 'over')
        report.add_suite(verify_coideal_subalgebra(H, specfile.to_subspace(document, H)).certificate)
    elif kind == specfile.QUOTIENT:
        H = _load_hopf(over[0], report, 'over')
        report.add_suite(specfile.to_quotient(document, H).certificate)
    else:
        U = _load_hopf(over[0], report, 'left')
        H = _load_hopf(over[1], report, 'right')
        report.add_suite(check_pairing(specfile.to_pairing(document, U, H)))


def _catalog_params(tokens):
    params = {}
    for token in tokens:
        key, sep, value = token.partition('=')
        if not sep or not key:
            raise UnknownName('catalog parameter', token)
        params[key] = value
    return params


def handle_catalog(options, report: Report, seed):
    H = build(options['name'], **_catalog_params(options.get('params') or []))
    document = specfile.from_hopf(H)
    report.add_input('object', specfile.content_hash(document))
    suite = report.add_suite(check_hopf_axioms(H))
    suite.checks.append(antipode_bijective(H))
    report.facts.update({
        'name': options['name'],
        'dim': H.dim,
        'field': H.field.name,
        'antipode_order': antipode_order(H),
        'grouplikes': basis_grouplikes(H),
    })
    if options.get('emit'):
        Path(options['emit']).write_text(specfile.serialize(document), encoding='utf-8')
        report.facts['emitted'] = Path(options['emit']).name


def _classification(x, seed):
    result = classify_quantum(x, seed)
    return {'label': result.label, 'certificate': result.certificate.as_dict()}


def handle_correspond(options, report: Report, seed):
    H = _load_hopf(options['spec'], report)
    report.facts['dim_H'] = H.dim
    if options.get('subalgebra'):
        S = specfile.to_subspace(_load(options['subalgebra'], report, 'subalgebra'), H)
        A = verify_coideal_subalgebra(H, S)
        report.add_suite(A.certificate)
        Q = quotient_module_coalgebra(A.require_verified())
        report.add_suite(Q.certificate)
        roundtrip = report.add_suite(roundtrip_correspondence(H, subalgebras=[A], seed=seed))
        exact = roundtrip['A[0]_roundtrip'].passed
    else:
        Q = _load_quotient(options['quotient'], H, report)
        A = coinvariants(Q)
        report.add_suite(A.certificate)
        roundtrip = report.add_suite(roundtrip_correspondence(H, quotients=[Q], seed=seed))
        exact = roundtrip['Q[0]_roundtrip'].passed
    report.facts.update({
        'dim_A': A.dim,
        'dim_H_A': Q.dim,
        'A_basis': list(A.labels),
        'H_A_basis': list(Q.coalgebra.labels),
        'roundtrip': 'exact' if exact else 'failed',
        'classification_A': _classification(A, seed),
        'classification_H_A': _classification(Q, seed),
    })


def handle_mw(options, report: Report, seed):
    H = _load_hopf(options['spec'], report)
    S = specfile.to_subspace(_load(options['subalgebra'], report, 'subalgebra'), H)
    A = verify_coideal_subalgebra(H, S)
    report.add_suite(A.certificate)
    A.require_verified()
    Q = quotient_module_coalgebra(A)
    test_objects = [('H', hopf_relative_module(A)), ('A', algebra_relative_module(A))]
    comodules = [('H_A', regular_comodule(Q.coalgebra))]
    comodules += [(f'simple{i}', V) for i, V in enumerate(simple_comodules(Q.coalgebra, seed))]
    for index, path in enumerate(options.get('objects') or []):
        comodules.append((f'object{index}', specfile.to_comodule(_load(path, report, f'object{index}'), Q.coalgebra)))
    report.add_suite(mw_equivalence_check(A, test_objects, comodules, seed))
    report.facts.update({'dim_A': A.dim, 'dim_H_A': Q.dim, 'comodules': [name for name, _ in comodules]})


def handle_theorem2(options, report: Report, seed):
    H = _load_hopf(options['spec'], report)
    Q = _load_quotient(options['quotient'], H, report)
    coaction = None
    if options.get('coaction'):
        coaction = specfile.to_comodule(_load(options['coaction'], report, 'coaction'), Q.coalgebra).coaction
    result = run_quotient_pipeline(Q, seed, coaction)
    report.add_suite(result.certificate)
    report.assume(*result.assumed)
    report.facts.update({
        'dim_A': result.subalgebra.dim,
        'A_basis': list(result.subalgebra.labels),
        'faithfully_flat': result.flat.passed,
        'functor': result.functor,
        'hypotheses': result.hypotheses,
    })


def handle_gamma(options, report: Report, seed):
    H = _load_hopf(options['spec'], report)
    Q = _load_quotient(options['quotient'], H, report)
    samples = options.get('samples', 100)
    M = regular_comodule(Q.coalgebra)
    combined = CheckSuite('gamma')
    dims = {}
    for name, X in (('k', trivial_comodule(H)), ('H', regular_comodule(H.coalgebra))):
        data = gamma_isomorphism(X, M, Q, seed, samples)
        combined.extend(data.certificate.checks, f'{name}_')
        dims[name] = data.domain_dim
    report.add_suite(combined)
    report.facts.update({'domain_dims': dims, 'samples': samples})


def handle_morita(options, report: Report, seed):
    if options['data'] == 'identity':
        if not options.get('spec'):
            raise UnknownName('spec file for identity data', '(none)')
        D = specfile.to_coalgebra(_load(options['spec'], report, 'spec'))
        report.add_suite(check_coalgebra_axioms(D))
        regular = regular_comodule(D)
        report.add_suite(verify_pre_equivalence(identity_pre_equivalence(D), [('D', regular)], [('D', regular)]))
        _, witness_suite = coend_regular_witness(D)
        report.add_suite(witness_suite)
        report.facts['dim_D'] = D.dim
        return
    n = options.get('n') or 2
    if options.get('spec'):
        D = specfile.to_coalgebra(_load(options['spec'], report, 'spec'))
        n = isqrt(D.dim)
        expected = matrix_coalgebra(n, D.field)
        if n * n != D.dim or D.comult != expected.comult or D.counit != expected.counit:
            raise DimensionMismatch('spec is not the comatrix coalgebra of size %(n)s', n=n)
    E = matrix_morita_data(n)
    simple = E.P.right
    report.add_suite(verify_pre_equivalence(E, [('k', regular_comodule(E.Gamma))],
                                            [('D', regular_comodule(E.D)), ('simple', simple)]))
    weights = ComoduleData(n, identity(n, E.Gamma.field), E.Gamma, RIGHT)
    _, witness_suite = coend_matrix_witness(weights)
    report.add_suite(witness_suite)
    report.facts.update({'n': n, 'dim_D': E.D.dim})


def handle_suite(options, report: Report, seed):
    run_suite(report, seed)


HANDLERS = {
    'check': handle_check,
    'catalog': handle_catalog,
    'correspond': handle_correspond,
    'mw': handle_mw,
    'theorem2': handle_theorem2,
    'gamma': handle_gamma,
    'morita': handle_morita,
    'suite': handle_suite,
}
