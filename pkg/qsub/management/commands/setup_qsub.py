from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand

from qsub.specfile import serialize, spec_library


class Command(BaseCommand):
    help = 'Write the catalog spec library into QSUB_SPEC_DIR'

    def add_arguments(self, parser):
        parser.add_argument(
            '--force',
            action='store_true',
            help='Overwrite spec files that already exist',
        )
        parser.add_argument(
            '--directory',
            default=None,
            help='Target directory (defaults to QSUB_SPEC_DIR)',
        )

    def handle(self, *args, **kwargs):
        force = kwargs['force']
        directory = settings.QSUB_SPEC_DIR if kwargs['directory'] is None else kwargs['directory']
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)

        written = 0
        for name, document in spec_library().items():
            path = directory / name
            if path.exists() and not force:
                self.stdout.write(self.style.WARNING(f'Spec "{name}" already exists, skipped.'))
                continue
            path.write_text(serialize(document), encoding='utf-8')
            written += 1
            self.stdout.write(self.style.SUCCESS(f'Spec "{name}" written ({document.kind}, dim {document.dim}).'))

        self.stdout.write(self.style.SUCCESS(f'{written} spec file(s) written to {directory}'))
