"""The acceptance run behind ``qsub suite all``.

Each instance is a named, self-contained computation over the catalog that
returns one ``CheckSuite``. Instances run on a thread pool; the report lists
them in order of their instance hash so it does not depend on scheduling.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from django.conf import settings
from django.core.exceptions import ValidationError

from .catalog import (
    catalog_certificates,
    cyclic_group,
    function_algebra,
    group_algebra,
    matrix_coalgebra,
    s3_subgroups,
    span_of_labels,
    subgroup_data,
    sweedler4,
    sweedler_dual_radical_subalgebra,
    symmetric_group,
    taft,
    trivial_hopf,
)
from .checks import Check, CheckSuite
from .correspondence import (
    algebra_relative_module,
    c_semisimple_implication,
    c_semisimple_summary,
    coinvariants,
    flatness_exactness_oracle,
    hopf_as_module,
    hopf_relative_module,
    is_faithfully_flat,
    mw_equivalence_check,
    quotient_module_coalgebra,
    roundtrip_correspondence,
    simple_comodules,
    verify_coideal_subalgebra,
)
from .exceptions import PipelineHalted, RadicalUnavailable, VerificationFailed, message_of
from .hopf import antipode_bijective, canonical_pairing
from .linalg import identity
from .monadics import (
    adjunction_unit_counit_check,
    compare_talgebras_to_modules,
    comparison_talgebra,
    gamma_isomorphism,
    monad_from_adjunction,
    res_ind_adjunction,
    run_quotient_pipeline,
    unit_object_algebra,
)
from .morita import (
    coend_matrix_witness,
    coend_regular_witness,
    identity_pre_equivalence,
    matrix_morita_data,
    verify_pre_equivalence,
)
from .reports import Report, canonical_json, sha256_hex
from .reps import LEFT, RIGHT, ComoduleData, regular_comodule, regular_module, trivial_comodule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Instance:
    name: str
    run: Callable[[int], CheckSuite]

    def content_hash(self, seed):
        return sha256_hex(canonical_json({'instance': self.name, 'seed': seed}))


def _sweedler_instance():
    H = sweedler4()
    A = verify_coideal_subalgebra(H, span_of_labels(H, ['1', 'g'])).require_verified()
    return H, A


def _s3_instance(subgroup='C2'):
    S3 = symmetric_group(3)
    return subgroup_data(S3, s3_subgroups(S3)[subgroup])


# instances


def axiom_suites(seed):
    suite = CheckSuite('axiom_suites')
    for name, certificate in catalog_certificates().items():
        suite.extend(certificate.checks, f'{name}_')
    for name, H in (('sweedler4', sweedler4()), ('taft(3,GF(7))', taft(3, 7, 2))):
        check = antipode_bijective(H)
        suite.checks.append(Check(f'{name}_{check.name}', check.passed, check.witness))
    return suite


def sweedler_quotient(seed):
    H, A = _sweedler_instance()
    Q = quotient_module_coalgebra(A)
    back = coinvariants(Q)
    suite = CheckSuite('sweedler_quotient')
    suite.add('dim_H_A_is_2', Q.dim == 2, {'dim_H_A': Q.dim})
    suite.add('coinvariants_recover_A', back.subspace == A.subspace,
              {'dim_A': A.dim, 'dim_coinvariants': back.dim})
    return suite


def roundtrips(seed):
    suite = CheckSuite('roundtrips')
    S3 = symmetric_group(3)
    H = function_algebra(S3)
    expected = {'trivial': (6, 1), 'C2': (3, 2), 'C3': (2, 3), 'S3': (1, 6)}
    for name, M in s3_subgroups(S3).items():
        A, Q = subgroup_data(S3, M)
        suite.add(f'S3/{name}_dims', (A.dim, Q.dim) == expected[name], {'dim_A': A.dim, 'dim_B': Q.dim})
        suite.extend(roundtrip_correspondence(H, [A], [Q], seed).checks, f'S3/{name}_')
    H4, A4 = _sweedler_instance()
    Q4 = quotient_module_coalgebra(A4)
    suite.extend(roundtrip_correspondence(H4, [A4], [Q4], seed).checks, 'sweedler4_')
    return suite


def _mw_objects(A, Q, seed):
    test_objects = [('H', hopf_relative_module(A)), ('A', algebra_relative_module(A))]
    comodules = [('H_A', regular_comodule(Q.coalgebra))]
    comodules += [(f'simple{i}', V) for i, V in enumerate(simple_comodules(Q.coalgebra, seed))]
    return test_objects, comodules


def mw_equivalence(seed):
    suite = CheckSuite('mw_equivalence')
    _, A4 = _sweedler_instance()
    A6, _ = _s3_instance()
    for name, A in (('sweedler4', A4), ('S3/C2', A6)):
        Q = quotient_module_coalgebra(A)
        test_objects, comodules = _mw_objects(A, Q, seed)
        suite.extend(mw_equivalence_check(A, test_objects, comodules, seed).checks, f'{name}_')
    return suite


def res_ind_monad(seed):
    H, A = _sweedler_instance()
    adjunction = res_ind_adjunction(A)
    unit_object = trivial_comodule(H)
    samples = [('I', unit_object), ('H', regular_comodule(H.coalgebra))]
    monad = monad_from_adjunction(adjunction, samples)
    unit = unit_object_algebra(monad, unit_object, A.labels)
    suite = CheckSuite('res_ind_monad')
    suite.extend(adjunction.verify_hypotheses(samples).checks, 'hypothesis_')
    suite.extend(monad.certificate.checks, 'monad_')
    suite.extend(unit.certificate.checks)
    suite.add('multiplication_is_restriction', unit.algebra.mult == A.algebra.mult,
              {'dim_T(I)': unit.algebra.dim, 'dim_A': A.dim})
    talgebras = [(name, comparison_talgebra(adjunction, M))
                 for name, M in (('H', hopf_relative_module(A)), ('A', algebra_relative_module(A)))]
    suite.extend(compare_talgebras_to_modules(monad, unit, talgebras).checks, 'talgebras_')
    return suite


def quotient_pipeline(seed):
    suite = CheckSuite('quotient_pipeline')
    _, A4 = _sweedler_instance()
    A6, Q6 = _s3_instance()
    for name, A, Q in (('sweedler4', A4, quotient_module_coalgebra(A4)), ('S3/C2', A6, Q6)):
        try:
            result = run_quotient_pipeline(Q, seed)
        except PipelineHalted as error:
            suite.add(f'{name}_pipeline', False, {'stage': error.stage})
            continue
        suite.extend(result.certificate.checks, f'{name}_')
        suite.add(f'{name}_expected_subalgebra', result.subalgebra.subspace == A.subspace,
                  {'dim': result.subalgebra.dim, 'expected': A.dim})
        suite.add(f'{name}_faithfully_flat', result.flat.passed, result.flat.evidence())
    return suite


def gamma_roundtrip(seed):
    H, A = _sweedler_instance()
    Q = quotient_module_coalgebra(A)
    M = regular_comodule(Q.coalgebra)
    suite = CheckSuite('gamma_roundtrip')
    for name, X in (('k', trivial_comodule(H)), ('H', regular_comodule(H.coalgebra))):
        suite.extend(gamma_isomorphism(X, M, Q, seed, samples=100).certificate.checks, f'{name}_')
    return suite


def hom_adjunction(seed):
    H, A = _sweedler_instance()
    suite = CheckSuite('hom_adjunction')
    modules = (('H', hopf_relative_module(A)), ('A', algebra_relative_module(A)))
    comodules = (('k', trivial_comodule(H)), ('H', regular_comodule(H.coalgebra)))
    for m_name, M in modules:
        for n_name, N in comodules:
            bijection = adjunction_unit_counit_check(M, N)
            suite.extend(bijection.certificate.checks, f'{m_name},{n_name}_')
    return suite


def c_semisimple(seed):
    suite = CheckSuite('c_semisimple')
    S3 = symmetric_group(3)
    P = canonical_pairing(function_algebra(S3))
    U = P.left
    K = span_of_labels(U, [f'd_{S3.labels[g]}*' for g in s3_subgroups(S3)['C2']])
    result = c_semisimple_implication(P, K, [regular_module(U.algebra, RIGHT)], seed)
    suite.extend(result.checks, 'kS3/kC2_')
    summary = c_semisimple_summary(result)
    suite.add('kS3/kC2_hypothesis_holds', summary['hypothesis'], summary)
    suite.add('kS3/kC2_conclusions_hold', summary['cosemisimple'] and summary['flat_left'] and summary['flat_right'],
              summary)

    H4 = sweedler4()
    U4, K4 = sweedler_dual_radical_subalgebra(H4)
    result = c_semisimple_implication(canonical_pairing(H4), K4, [regular_module(U4.algebra, RIGHT)], seed)
    suite.extend(result.checks, 'sweedler4*/radical_')
    return suite


def flatness_oracle(seed):
    suite = CheckSuite('flatness_oracle')
    _, A4 = _sweedler_instance()
    instances = [('sweedler4', A4)]
    S3 = symmetric_group(3)
    for name, M in s3_subgroups(S3).items():
        instances.append((f'S3/{name}', subgroup_data(S3, M)[0]))
    for name, A in instances:
        for side in (LEFT, RIGHT):
            verdict = is_faithfully_flat(A, side, seed)
            oracle = flatness_exactness_oracle(hopf_as_module(A, side), verdict, seed)
            suite.extend(oracle.checks, f'{name}_{side}_')
    return suite


def morita(seed):
    suite = CheckSuite('morita')
    S3 = symmetric_group(3)
    coalgebras = {
        'k': trivial_hopf().coalgebra,
        'kC2': group_algebra(cyclic_group(2)).coalgebra,
        'kS3': group_algebra(S3).coalgebra,
        'k^S3': function_algebra(S3).coalgebra,
        'sweedler4': sweedler4().coalgebra,
        'taft(3,GF(7))': taft(3, 7, 2).coalgebra,
        'M^c(2)': matrix_coalgebra(2),
    }
    for name, D in coalgebras.items():
        regular = regular_comodule(D)
        E = identity_pre_equivalence(D)
        suite.extend(verify_pre_equivalence(E, [('D', regular)], [('D', regular)]).checks, f'{name}_identity_')
        _, witness = coend_regular_witness(D)
        suite.extend(witness.checks, f'{name}_coend_')
    E = matrix_morita_data(2)
    suite.extend(verify_pre_equivalence(E, [('k', regular_comodule(E.Gamma))],
                                        [('D', regular_comodule(E.D)), ('simple', E.P.right)]).checks, 'matrix_')
    weights = ComoduleData(2, identity(2, E.Gamma.field), E.Gamma, RIGHT)
    _, witness = coend_matrix_witness(weights)
    suite.extend(witness.checks, 'matrix_coend_')
    return suite


def determinism(seed):
    """Two independent evaluations of one instance serialize to the same bytes."""
    first = canonical_json(sweedler_quotient(seed).as_dict())
    second = canonical_json(sweedler_quotient(seed).as_dict())
    suite = CheckSuite('determinism')
    suite.add('byte_identical', first == second, {'first': sha256_hex(first), 'second': sha256_hex(second)})
    return suite


INSTANCES = (
    Instance('axiom-suites', axiom_suites),
    Instance('sweedler-quotient', sweedler_quotient),
    Instance('roundtrips', roundtrips),
    Instance('mw-equivalence', mw_equivalence),
    Instance('res-ind-monad', res_ind_monad),
    Instance('quotient-pipeline', quotient_pipeline),
    Instance('gamma-roundtrip', gamma_roundtrip),
    Instance('hom-adjunction', hom_adjunction),
    Instance('c-semisimple', c_semisimple),
    Instance('flatness-oracle', flatness_oracle),
    Instance('morita', morita),
    Instance('determinism', determinism),
)


def run_instance(instance: Instance, seed) -> CheckSuite:
    logger.debug('suite instance %s started', instance.name)
    try:
        suite = instance.run(seed)
    except VerificationFailed as error:
        suite = CheckSuite(instance.name)
        witness = {'detail': str(error)}
        if error.certificate is not None:
            witness['failures'] = [check.as_dict() for check in error.certificate.failures]
        suite.add('completed', False, witness)
    except (RadicalUnavailable, ValidationError) as error:
        logger.info('suite instance %s stopped: %s', instance.name, message_of(error))
        suite = CheckSuite(instance.name)
        suite.add('completed', False, {'detail': message_of(error), 'error': type(error).__name__})
    suite.title = instance.name
    return suite


def run_suite(report: Report, seed, instances=INSTANCES):
    """Fill ``report`` with one suite per instance, ordered by instance hash."""
    workers = getattr(settings, 'QSUB_SUITE_WORKERS', 4)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {instance.name: pool.submit(run_instance, instance, seed) for instance in instances}
    ordered = sorted(instances, key=lambda instance: instance.content_hash(seed))
    listing = []
    for instance in ordered:
        suite = futures[instance.name].result()
        report.add_suite(suite)
        report.add_input(instance.name, instance.content_hash(seed))
        listing.append({'name': instance.name, 'passed': suite.passed, 'checks': len(suite.checks)})
    report.facts['instances'] = listing
    logger.info('suite: %s instances, %s passed', len(listing), sum(item['passed'] for item in listing))
    return report
