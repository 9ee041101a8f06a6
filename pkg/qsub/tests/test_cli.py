import argparse
import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from qsub import choices, specfile
from qsub.cli import SUBCOMMANDS, add_subcommands, run, subcommand_parsers
from qsub.monadics import ASSUMED_LOCAL_PRESENTABILITY
from qsub.catalog import build
from qsub.exceptions import RadicalUnavailable
from qsub.reports import Report
from qsub.suite import INSTANCES, Instance, run_instance, run_suite


class CommandLineTest(SimpleTestCase):
    """Exit codes and facts of the qsub subcommands"""

    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.root = Path(directory.name)
        self.library = specfile.spec_library()

    def spec(self, name):
        path = self.root / name
        path.write_text(specfile.serialize(self.library[name]), encoding='utf-8')
        return str(path)

    def test_emitted_catalog_object_checks(self):
        path = str(self.root / 'h4.spec')
        report = run(['catalog', 'sweedler4', '--emit', path])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.facts['antipode_order'], 4)
        self.assertEqual(report.facts['grouplikes'], ['1', 'g'])
        report = run(['check', path])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.facts['kind'], specfile.HOPF)

    def test_catalog_parameters(self):
        report = run(['catalog', 'taft', 'n=3', 'p=7', 'q=2'])
        self.assertEqual(report.facts['dim'], 9)
        self.assertEqual(report.facts['field'], 'GF(7)')
        self.assertEqual(run(['catalog', 'taft', 'q=1']).exit_code, 2)

    @override_settings(QSUB_DIMENSION_CAP=64)
    def test_malformed_catalog_parameters_exit_2(self):
        cases = [
            (['taft', 'n=abc'], 'unknown_name'),
            (['group-algebra', 'group=S'], 'unknown_name'),
            (['taft', 'n=0', 'p=0', 'q=1'], 'dimension_mismatch'),
            (['group-algebra', 'group=S7'], 'dimension_cap'),
        ]
        for argv, code in cases:
            with self.subTest(argv=argv):
                report = run(['catalog', *argv])
                self.assertEqual(report.exit_code, 2)
                self.assertEqual(report.error['code'], code)

    def test_broken_coproduct_fails_check(self):
        path = self.root / 'broken.spec'
        text = Path(self.spec('sweedler4.spec')).read_text(encoding='utf-8')
        path.write_text(text.replace('map comult\n', 'map comult\n  x x(x)x 1\n'), encoding='utf-8')
        report = run(['check', str(path)])
        self.assertEqual(report.exit_code, 1)
        self.assertEqual(report.verdict, choices.CHECK_FAILED)
        failed = [check.name for suite in report.suites for check in suite.failures]
        self.assertIn('coassociativity', failed)

    def test_bad_input_exits_2(self):
        path = self.root / 'bad.spec'
        path.write_text('field GF(6)\nkind coalgebra\n', encoding='utf-8')
        report = run(['check', str(path)])
        self.assertEqual(report.exit_code, 2)
        self.assertEqual(report.error['code'], 'spec_file')
        self.assertEqual(report.error['params']['line'], 1)

    def test_subspace_needs_ambient(self):
        report = run(['check', self.spec('sweedler4-subalgebra-1-g.spec')])
        self.assertEqual(report.exit_code, 2)
        self.assertEqual(report.error['code'], 'dimension_mismatch')

    def test_correspond_on_function_algebra(self):
        report = run(['correspond', self.spec('function-algebra-S3.spec'),
                      '--subalgebra', self.spec('function-algebra-S3-subalgebra-C2.spec')])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.facts['dim_A'] * report.facts['dim_H_A'], 6)
        self.assertEqual(report.facts['roundtrip'], 'exact')
        self.assertEqual(report.facts['classification_A']['label'], choices.QUANTUM_HOMOGENEOUS_SPACE)

    def test_correspond_from_quotient(self):
        report = run(['correspond', self.spec('sweedler4.spec'),
                      '--quotient', self.spec('sweedler4-quotient-1-g.spec')])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.facts['A_basis'], ['1', 'g'])
        self.assertEqual(report.facts['dim_B'], 2)

    def test_theorem2(self):
        report = run(['theorem2', self.spec('sweedler4.spec'),
                      '--quotient', self.spec('sweedler4-quotient-1-g.spec')])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.command, 'theorem2')
        self.assertEqual(report.facts['dim_A'], 2)
        self.assertTrue(report.facts['faithfully_flat'])
        self.assertEqual(report.assumed, [ASSUMED_LOCAL_PRESENTABILITY])
        self.assertEqual(report.facts['functor'], 'derived from pi')
        self.assertEqual(report.facts['hypotheses'], {'corestriction_module_functor': True})

    def test_pipeline_alias(self):
        report = run(['pipeline', self.spec('sweedler4.spec'),
                      '--quotient', self.spec('sweedler4-quotient-1-g.spec'), '--seed', '2'])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.command, 'theorem2')

    def test_every_subcommand_is_registered(self):
        subparsers = add_subcommands(argparse.ArgumentParser())
        self.assertLessEqual(set(SUBCOMMANDS), set(subparsers.choices))
        self.assertIs(subparsers.choices['pipeline'], subparsers.choices['theorem2'])
        self.assertEqual(len(subcommand_parsers(subparsers)), len(SUBCOMMANDS))

    def test_gamma(self):
        report = run(['gamma', self.spec('sweedler4.spec'),
                      '--quotient', self.spec('sweedler4-quotient-1-g.spec'), '--samples', '5', '--seed', '3'])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.seed, 3)
        self.assertEqual(report.facts['samples'], 5)

    def test_mw(self):
        report = run(['mw', self.spec('sweedler4.spec'),
                      '--subalgebra', self.spec('sweedler4-subalgebra-1-g.spec')])
        self.assertEqual(report.exit_code, 0)
        self.assertIn('H_A', report.facts['comodules'])

    def test_morita(self):
        self.assertEqual(run(['morita', '--data', 'matrix']).exit_code, 0)
        report = run(['morita', self.spec('matrix-coalgebra-2.spec')])
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.facts['dim_D'], 4)
        self.assertEqual(run(['morita']).exit_code, 2)


class ReportTest(SimpleTestCase):
    def test_report_file_is_deterministic(self):
        with tempfile.TemporaryDirectory() as directory:
            first, second = Path(directory, 'a.json'), Path(directory, 'b.json')
            run(['catalog', 'group-algebra', 'group=S3', '--seed', '1', '--report', str(first)])
            run(['catalog', 'group-algebra', 'group=S3', '--seed', '1', '--report', str(second)])
            self.assertEqual(first.read_bytes(), second.read_bytes())
            data = json.loads(first.read_text(encoding='utf-8'))
        self.assertEqual(data['verdict'], choices.PASSED)
        self.assertNotIn('runtime_seconds', data)

    def test_timing_is_opt_in(self):
        report = run(['catalog', 'trivial', '--timing'])
        self.assertIn('runtime_seconds', report.as_dict())

    def test_summary_lines(self):
        report = Report('check')
        report.add_input('spec', 'abc')
        self.assertEqual(report.summary_lines(), ['check: passed'])
        self.assertEqual(report.input_hash, Report('other', inputs={'spec': 'abc'}).input_hash)


class AcceptanceSuiteTest(SimpleTestCase):
    """Every acceptance instance passes on its own"""

    def test_instances(self):
        for instance in INSTANCES:
            with self.subTest(instance=instance.name):
                suite = run_instance(instance, 0)
                self.assertTrue(suite.passed, [check.as_dict() for check in suite.failures])

    def test_subset_ordered_by_hash(self):
        subset = INSTANCES[:2]
        report = run_suite(Report('suite', 0), 0, subset)
        names = [item['name'] for item in report.facts['instances']]
        expected = sorted(subset, key=lambda instance: instance.content_hash(0))
        self.assertEqual(names, [instance.name for instance in expected])
        self.assertEqual(set(report.inputs), {instance.name for instance in subset})

    def test_instance_errors_do_not_abort_the_run(self):
        def radical(seed):
            raise RadicalUnavailable('characteristic 2 divides dim 4')

        def bad_input(seed):
            build('taft', n='abc')

        instances = (Instance('radical', radical), Instance('bad-input', bad_input), INSTANCES[0])
        report = run_suite(Report('suite', 0), 0, instances)
        listing = {item['name']: item['passed'] for item in report.facts['instances']}
        self.assertEqual(listing, {'radical': False, 'bad-input': False, INSTANCES[0].name: True})
        self.assertEqual(report.exit_code, 1)
        failed = {suite.title: suite['completed'].witness['error'] for suite in report.suites if not suite.passed}
        self.assertEqual(failed, {'radical': 'RadicalUnavailable', 'bad-input': 'UnknownName'})

    def test_suite_all_is_byte_identical(self):
        with tempfile.TemporaryDirectory() as directory:
            first, second = Path(directory, 'a.json'), Path(directory, 'b.json')
            run(['suite', 'all', '--seed', '0', '--report', str(first)])
            run(['suite', 'all', '--seed', '0', '--report', str(second)])
            self.assertEqual(first.read_bytes(), second.read_bytes())
            data = json.loads(first.read_text(encoding='utf-8'))
        self.assertEqual(data['verdict'], choices.PASSED)
