# verification/tasks.py
"""
Background jobs for verification runs
"""

import logging
from datetime import timedelta

from celery import shared_task
from django.utils import timezone

from .models import VerificationRun
from .suites import ERROR, SuiteOptions, run_suite

logger = logging.getLogger(__name__)

RUN_RETENTION_DAYS = 30


def execute_run(run: VerificationRun) -> VerificationRun:
    """Run the stored suite synchronously and record its report."""
    run.status = VerificationRun.Status.RUNNING
    run.started_at = timezone.now()
    run.save(update_fields=['status', 'started_at'])

    report = run_suite(run.suite, SuiteOptions(**run.options))
    run.report = report.as_dict()
    run.checks = len(report.results)
    run.failures = report.failures
    if report.passed:
        run.status = VerificationRun.Status.PASSED
    elif any(result.status == ERROR for result in report.results):
        run.status = VerificationRun.Status.ERROR
    else:
        run.status = VerificationRun.Status.FAILED
    run.finished_at = timezone.now()
    run.save()

    if report.passed:
        logger.info(f"Verification run {run.pk} ({run.suite}) passed {run.checks} checks")
    else:
        logger.error(f"Verification run {run.pk} ({run.suite}): {run.failures} of {run.checks} checks failed")
    return run


@shared_task(bind=True, max_retries=3)
def run_suite_task(self, run_id=None, suite=None, fast=False):
    """
    Execute a queued VerificationRun, or create one for `suite` when called
    from the beat schedule.
    """
    try:
        if run_id is None:
            run = VerificationRun.objects.create(suite=suite, options=SuiteOptions(fast=fast).as_dict())
        else:
            run = VerificationRun.objects.get(id=run_id)
        run = execute_run(run)
        return {'run': run.pk, 'status': run.status}

    except VerificationRun.DoesNotExist:
        logger.error(f"VerificationRun with id {run_id} does not exist.")
    except Exception as exc:
        logger.error(f"Verification run failed: {exc}")
        VerificationRun.objects.filter(id=run_id, status=VerificationRun.Status.RUNNING).update(
            status=VerificationRun.Status.ERROR, finished_at=timezone.now(),
        )
        raise self.retry(exc=exc, countdown=300)


@shared_task(bind=True, max_retries=3)
def purge_verification_runs(self, days=RUN_RETENTION_DAYS):
    """
    Delete finished runs older than `days`
    Runs weekly (configured in celery.py)
    """
    try:
        cutoff = timezone.now() - timedelta(days=days)
        finished = [VerificationRun.Status.PASSED, VerificationRun.Status.FAILED, VerificationRun.Status.ERROR]
        count, _ = VerificationRun.objects.filter(created_at__lt=cutoff, status__in=finished).delete()

        logger.info(f"Purged {count} verification runs older than {days} days")
        return f"Removed {count} verification runs"

    except Exception as exc:
        logger.error(f"Verification purge failed: {exc}")
        raise self.retry(exc=exc, countdown=300)
