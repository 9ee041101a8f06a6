from django.db import models

from .choices import VERDICT_CHOICES


class VerificationRun(models.Model):
    """One recorded ``qsub`` invocation and its report"""

    command = models.CharField(
        max_length=32,
        verbose_name="Command",
        help_text="Subcommand that was run (check, correspond, suite, ...)"
    )
    arguments = models.JSONField(
        default=list,
        verbose_name="Arguments",
        help_text="Command line after the subcommand"
    )
    input_hash = models.CharField(
        max_length=64,
        db_index=True,
        verbose_name="Input Hash",
        help_text="sha256 over the canonicalized input hashes"
    )
    seed = models.BigIntegerField(
        null=True,
        blank=True,
        verbose_name="Seed"
    )
    verdict = models.CharField(
        max_length=20,
        choices=VERDICT_CHOICES,
        verbose_name="Verdict"
    )
    exit_code = models.PositiveSmallIntegerField(
        default=0,
        verbose_name="Exit Code"
    )
    check_count = models.PositiveIntegerField(
        default=0,
        verbose_name="Checks"
    )
    failure_count = models.PositiveIntegerField(
        default=0,
        verbose_name="Failed Checks"
    )
    report = models.JSONField(
        verbose_name="Report",
        help_text="The structured report as written by --report"
    )
    runtime_seconds = models.FloatField(
        null=True,
        blank=True,
        verbose_name="Runtime (s)",
        help_text="Only recorded with --timing"
    )
    created_at = models.DateTimeField(
        auto_now_add=True,
        verbose_name="Created At"
    )

    @property
    def is_passed(self):
        return self.exit_code == 0

    @classmethod
    def record(cls, report, arguments=()):
        """Persist a finished ``Report``."""
        return cls.objects.create(
            command=report.command,
            arguments=list(arguments),
            input_hash=report.input_hash,
            seed=report.seed,
            verdict=report.verdict,
            exit_code=report.exit_code,
            check_count=report.check_count,
            failure_count=report.failure_count,
            report=report.as_dict(),
            runtime_seconds=report.runtime,
        )

    class Meta:
        verbose_name = "Verification Run"
        verbose_name_plural = "Verification Runs"
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.command} - {self.get_verdict_display()} ({self.failure_count}/{self.check_count} failed)"
