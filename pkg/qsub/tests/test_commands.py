import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase, override_settings

from qsub import choices
from qsub.models import VerificationRun
from qsub.reports import Report
from qsub.specfile import spec_library


class QsubCommandTest(TestCase):
    """manage.py qsub"""

    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.root = Path(directory.name)

    def test_passing_run_is_recorded(self):
        """--record stores the report next to its verdict"""
        out = StringIO()
        call_command('qsub', 'catalog', 'sweedler4', '--seed', '5', '--record', stdout=out)
        self.assertIn('✅ catalog', out.getvalue())
        run = VerificationRun.objects.get()
        self.assertTrue(run.is_passed)
        self.assertEqual(run.seed, 5)
        self.assertEqual(run.verdict, choices.PASSED)
        self.assertEqual(run.report['facts']['dim'], 4)
        self.assertIn(['name', 'sweedler4'], run.arguments)

    def test_failed_check_raises_with_returncode(self):
        path = self.root / 'broken.spec'
        emitted = self.root / 'h4.spec'
        call_command('qsub', 'catalog', 'sweedler4', '--emit', str(emitted), stdout=StringIO())
        path.write_text(emitted.read_text(encoding='utf-8').replace('map comult\n', 'map comult\n  x x(x)x 1\n'),
                        encoding='utf-8')
        out = StringIO()
        with self.assertRaises(CommandError) as raised:
            call_command('qsub', 'check', str(path), '--record', stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn('❌ check', out.getvalue())
        self.assertFalse(VerificationRun.objects.get().is_passed)

    def test_input_error_returncode(self):
        with self.assertRaises(CommandError) as raised:
            call_command('qsub', 'check', str(self.root / 'missing.spec'), stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 2)

    def test_report_file(self):
        report = self.root / 'report.json'
        out = StringIO()
        call_command('qsub', 'morita', '--data', 'matrix', '--report', str(report), stdout=out)
        self.assertTrue(report.exists())
        self.assertIn('📄 Report written', out.getvalue())


class SetupQsubTest(TestCase):
    """manage.py setup_qsub"""

    def test_writes_library_once(self):
        with tempfile.TemporaryDirectory() as directory:
            call_command('setup_qsub', directory=directory, stdout=StringIO())
            self.assertEqual(sorted(p.name for p in Path(directory).iterdir()), sorted(spec_library()))

            out = StringIO()
            call_command('setup_qsub', directory=directory, stdout=out)
            self.assertIn('already exists, skipped', out.getvalue())
            self.assertIn('0 spec file(s) written', out.getvalue())

            out = StringIO()
            call_command('setup_qsub', directory=directory, force=True, stdout=out)
            self.assertIn(f'{len(spec_library())} spec file(s) written', out.getvalue())

    def test_default_directory_from_settings(self):
        with tempfile.TemporaryDirectory() as directory:
            target = Path(directory) / 'specs'
            with override_settings(QSUB_SPEC_DIR=target):
                call_command('setup_qsub', stdout=StringIO())
            self.assertTrue((target / 'sweedler4.spec').exists())


class CheckDbTest(TestCase):
    def test_reports_connection_and_runs(self):
        VerificationRun.record(Report('suite', 0))
        out = StringIO()
        call_command('check_db', stdout=out)
        output = out.getvalue()
        self.assertIn('Database connection: OK', output)
        self.assertIn(f'Table {VerificationRun._meta.db_table}: EXISTS', output)
        self.assertIn('Verification runs in database: 1 (0 not passed)', output)


class VerificationRunModelTest(TestCase):
    """VerificationRun model"""

    def test_str_representation(self):
        report = Report('check')
        report.add_input('spec', 'abc')
        run = VerificationRun.record(report, [['spec', 'h4.spec']])
        self.assertEqual(str(run), 'check - Passed (0/0 failed)')
        self.assertEqual(run.input_hash, report.input_hash)
        self.assertIsNone(run.runtime_seconds)

    def test_input_error_is_not_passed(self):
        report = Report('check')
        report.error = {'code': 'spec_file', 'message': '1:7: bad field'}
        run = VerificationRun.record(report)
        self.assertEqual(run.verdict, choices.INPUT_ERROR)
        self.assertEqual(run.exit_code, 2)
        self.assertFalse(run.is_passed)
