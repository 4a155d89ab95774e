# verification/tests/test_suites.py
from django.test import SimpleTestCase

from core.exceptions import BoundViolation
from verification.suites import (
    ERROR,
    FAILED,
    PASSED,
    SUITE_NAMES,
    Check,
    CheckResult,
    SuiteOptions,
    SuiteReport,
    run_check,
    run_suite,
    suite_checks,
)


class RunCheckTests(SimpleTestCase):
    """Test how a single check result is classified"""

    def test_true_passes(self):
        result = run_check(Check('ok', 'tag', lambda: True))
        self.assertEqual(result.status, PASSED)
        self.assertIsNone(result.margin)

    def test_false_fails(self):
        self.assertEqual(run_check(Check('no', 'tag', lambda: False)).status, FAILED)

    def test_domain_error_fails_with_detail(self):
        def violated():
            raise BoundViolation("bound exceeded", n=3)

        result = run_check(Check('bound', 'tag', violated))
        self.assertEqual(result.status, FAILED)
        self.assertEqual(result.detail, 'bound exceeded')

    def test_unexpected_exception_is_error(self):
        result = run_check(Check('broken', 'tag', lambda: 1 / 0))
        self.assertEqual(result.status, ERROR)
        self.assertIn('ZeroDivisionError', result.detail)

    def test_margin_from_rows(self):
        rows = [{'margin': '0.5'}, {'margin': '0.125'}, {'margin': '2.0'}]
        self.assertEqual(run_check(Check('rows', 'tag', lambda: rows)).margin, '0.125')


class SuiteTests(SimpleTestCase):
    """Test suite assembly and reports on small budgets"""

    def test_every_suite_has_tagged_checks(self):
        options = SuiteOptions(fast=True)
        for name in SUITE_NAMES:
            checks = suite_checks(name, options)
            self.assertTrue(checks, name)
            self.assertTrue(all(check.tag for check in checks), name)

    def test_traceability_covers_every_invariant(self):
        invariant_tags = {
            # exact_core
            'defining-conditions', 'sign-rule', 'half-value', 'gould', 'binomial-sum', 'von-staudt-clausen',
            'bernoulli-denominator', 'power-sums', 'l2-inner-product',
            # analytic_core
            'interval-soundness', 'periodicity', 'b2n-bound', 'alpha-bisection', 'alpha-zero',
            # euler_maclaurin
            'em-remainder', 'em-periodicity', 'polynomial-exactness',
            # quadrature
            'exactness-degree', 'simpson-identity', 'romberg-recurrence', 'measured-order', 'gauss-node',
            # asymptotic_series
            'harmonic-sandwich', 'harmonic-nested', 'series-width', 'c-series-expansion', 'd-series-expansion',
            'e-series-identity', 'gamma-table',
            # trig_sums
            'csc-pairing', 'csc-sum-bracket', 'cot-sum-bracket', 'alternating-brackets', 'asymptotic-ratio',
            'csc-sum-expansion', 'cot-sum-expansion',
        }
        for fast in (True, False):
            checks = suite_checks('all', SuiteOptions(fast=fast))
            report = SuiteReport(suite='all', results=[CheckResult(c.name, c.tag, PASSED) for c in checks])
            self.assertEqual(invariant_tags - set(report.traceability()), set())

    def test_all_concatenates_in_order(self):
        options = SuiteOptions(fast=True)
        names = [check.name for check in suite_checks('all', options)]
        expected = [check.name for suite in SUITE_NAMES for check in suite_checks(suite, options)]
        self.assertEqual(names, expected)

    def test_unknown_suite(self):
        with self.assertRaises(KeyError):
            suite_checks('nonsense', SuiteOptions())

    def test_vonstaudt_passes(self):
        report = run_suite('vonstaudt', SuiteOptions(max_n=10))
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, 0)
        self.assertIn('von-staudt-clausen', report.traceability())

    def test_core_passes(self):
        report = run_suite('core', SuiteOptions(max_n=8))
        self.assertTrue(report.passed, [r.as_dict() for r in report.results if r.status != PASSED])

    def test_report_is_deterministic(self):
        first = run_suite('vonstaudt', SuiteOptions(max_n=6)).as_dict()
        second = run_suite('vonstaudt', SuiteOptions(max_n=6)).as_dict()
        self.assertEqual(first, second)
        self.assertEqual(first['suite'], 'vonstaudt')
        self.assertEqual(set(first['checks'][0]), {'name', 'tag', 'status', 'margin'})

    def test_budget_overrides(self):
        options = SuiteOptions(fast=True, max_n=5, max_p=50)
        self.assertEqual(options.n_limit(30, 12), 5)
        self.assertEqual(options.p_limit(10000, 1000), 50)
        self.assertEqual(SuiteOptions(fast=True).p_limit(10000, 1000), 1000)
        self.assertEqual(SuiteOptions().n_limit(30, 12), 30)
