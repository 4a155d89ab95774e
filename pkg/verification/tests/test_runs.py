# verification/tests/test_runs.py
from datetime import timedelta
from unittest import mock

from django.test import TestCase
from django.urls import reverse
from django.utils import timezone
from rest_framework import status
from rest_framework.test import APITestCase

from verification.models import VerificationRun
from verification.suites import CheckResult, SuiteReport
from verification.tasks import execute_run, purge_verification_runs, run_suite_task


class VerificationRunTaskTests(TestCase):
    """Test recording suite executions"""

    def test_execute_records_report(self):
        run = VerificationRun.objects.create(suite='vonstaudt', options={'max_n': 6})
        run = execute_run(run)
        self.assertEqual(run.status, VerificationRun.Status.PASSED)
        self.assertEqual(run.failures, 0)
        self.assertEqual(run.checks, len(run.report['checks']))
        self.assertIsNotNone(run.duration)

    def test_failed_report(self):
        report = SuiteReport('core', [CheckResult('a', 'tag', 'passed'), CheckResult('b', 'tag', 'failed')])
        run = VerificationRun.objects.create(suite='core')
        with mock.patch('verification.tasks.run_suite', return_value=report):
            run = execute_run(run)
        self.assertEqual(run.status, VerificationRun.Status.FAILED)
        self.assertEqual(run.failures, 1)

    def test_errored_report(self):
        report = SuiteReport('core', [CheckResult('a', 'tag', 'error')])
        run = VerificationRun.objects.create(suite='core')
        with mock.patch('verification.tasks.run_suite', return_value=report):
            run = execute_run(run)
        self.assertEqual(run.status, VerificationRun.Status.ERROR)

    def test_scheduled_task_creates_run(self):
        report = SuiteReport('all', [CheckResult('a', 'tag', 'passed')])
        with mock.patch('verification.tasks.run_suite', return_value=report):
            result = run_suite_task.apply(kwargs={'suite': 'all', 'fast': True}).get()
        run = VerificationRun.objects.get(pk=result['run'])
        self.assertEqual(run.options['fast'], True)
        self.assertEqual(run.status, VerificationRun.Status.PASSED)

    def test_purge_keeps_recent_and_pending(self):
        old = VerificationRun.objects.create(suite='core', status=VerificationRun.Status.PASSED)
        stale_pending = VerificationRun.objects.create(suite='core')
        recent = VerificationRun.objects.create(suite='core', status=VerificationRun.Status.FAILED)
        VerificationRun.objects.filter(pk__in=[old.pk, stale_pending.pk]).update(
            created_at=timezone.now() - timedelta(days=60))

        purge_verification_runs.apply()
        remaining = set(VerificationRun.objects.values_list('pk', flat=True))
        self.assertEqual(remaining, {stale_pending.pk, recent.pk})


class VerificationRunApiTests(APITestCase):
    """Test queueing and listing runs"""

    def test_post_queues_run(self):
        with mock.patch('verification.views.run_suite_task.delay') as delay:
            with self.captureOnCommitCallbacks(execute=True):
                response = self.client.post(reverse('verification_runs'), {'suite': 'trig', 'max_p': 100},
                                            format='json')
        self.assertEqual(response.status_code, status.HTTP_201_CREATED)
        run = VerificationRun.objects.get(pk=response.data['id'])
        self.assertEqual(run.options, {'fast': True, 'max_n': None, 'max_p': 100, 'prec': None})
        delay.assert_called_once_with(run.pk)

    def test_unknown_suite_rejected(self):
        response = self.client.post(reverse('verification_runs'), {'suite': 'everything'}, format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_prec_above_limit_rejected(self):
        response = self.client.post(reverse('verification_runs'), {'suite': 'core', 'prec': 10 ** 6},
                                    format='json')
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_list_and_detail(self):
        run = VerificationRun.objects.create(suite='core', status=VerificationRun.Status.PASSED, checks=3)
        response = self.client.get(reverse('verification_runs'))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        rows = response.data['results'] if isinstance(response.data, dict) else response.data
        self.assertEqual(rows[0]['suite'], 'core')

        response = self.client.get(reverse('verification_run_detail', args=[run.pk]))
        self.assertEqual(response.data['checks'], 3)
