# Generated by Django 5.2.5 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(help_text='Subcommand that was run (check, correspond, suite, ...)', max_length=32, verbose_name='Command')),
                ('arguments', models.JSONField(default=list, help_text='Command line after the subcommand', verbose_name='Arguments')),
                ('input_hash', models.CharField(db_index=True, help_text='sha256 over the canonicalized input hashes', max_length=64, verbose_name='Input Hash')),
                ('seed', models.BigIntegerField(blank=True, null=True, verbose_name='Seed')),
                ('verdict', models.CharField(choices=[('passed', 'Passed'), ('check-failed', 'Check failed'), ('input-error', 'Input error')], max_length=20, verbose_name='Verdict')),
                ('exit_code', models.PositiveSmallIntegerField(default=0, verbose_name='Exit Code')),
                ('check_count', models.PositiveIntegerField(default=0, verbose_name='Checks')),
                ('failure_count', models.PositiveIntegerField(default=0, verbose_name='Failed Checks')),
                ('report', models.JSONField(help_text='The structured report as written by --report', verbose_name='Report')),
                ('runtime_seconds', models.FloatField(blank=True, help_text='Only recorded with --timing', null=True, verbose_name='Runtime (s)')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
            ],
            options={
                'verbose_name': 'Verification Run',
                'verbose_name_plural': 'Verification Runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
