from django.core.management.base import BaseCommand, CommandError

from qsub import choices
from qsub.cli import add_subcommands, execute, subcommand_parsers
from qsub.models import VerificationRun

BASE_OPTIONS = {'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks'}


class Command(BaseCommand):
    help = 'Run a qsub verification command (check, catalog, correspond, mw, theorem2, gamma, morita, suite)'

    def add_arguments(self, parser):
        subparsers = add_subcommands(parser)
        for sub in subcommand_parsers(subparsers):
            sub.add_argument(
                '--record',
                action='store_true',
                help='Save the run and its report to the database',
            )

    def handle(self, *args, **options):
        report = execute(options)

        for line in report.summary_lines():
            self.stdout.write(line)

        if report.verdict == choices.PASSED:
            self.stdout.write(self.style.SUCCESS(f'✅ {report.command}: all {report.check_count} checks passed'))
        elif report.verdict == choices.CHECK_FAILED:
            self.stdout.write(self.style.ERROR(
                f'❌ {report.command}: {report.failure_count} of {report.check_count} checks failed'))
        else:
            self.stdout.write(self.style.WARNING(f'⚠️ {report.command}: input error'))

        if options.get('report'):
            self.stdout.write(f'📄 Report written to {options["report"]}')

        if options.get('record'):
            arguments = sorted(
                [key, value] for key, value in options.items()
                if key not in BASE_OPTIONS and key not in self.base_stealth_options
                and key not in ('record', 'subcommand') and value not in (None, [], False)
            )
            run = VerificationRun.record(report, arguments)
            self.stdout.write(self.style.SUCCESS(f'💾 Recorded run #{run.pk}'))

        if report.exit_code:
            raise CommandError(f'{report.command} finished with verdict {report.verdict}', returncode=report.exit_code)
