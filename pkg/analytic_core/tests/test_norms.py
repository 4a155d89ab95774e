# analytic_core/tests/test_norms.py
import random
from fractions import Fraction
from math import factorial
from unittest import mock

from django.test import SimpleTestCase
from mpmath import mp

from analytic_core.dilcher import dilcher_check, dilcher_truncation, normalized_convergence_check
from analytic_core.norms import (
    alpha_bisection_check,
    alpha_monotone_check,
    b2n_two_sided_bound,
    evaluate_mp,
    find_alpha,
    l1_norm,
    l1_norm_enclosure,
    periodic_bernoulli,
    periodic_bernoulli_interval,
    periodic_shift_check,
    sharpness_ratio,
    sup_norm_report,
)
from analytic_core.precision import endpoint_fractions, lower, mpf_to_fraction, precision, to_mpf, upper
from core.exceptions import BoundViolation, InvalidArgument
from exact_core.bernoulli import bernoulli_polynomial


class PeriodicBernoulliTests(SimpleTestCase):
    """Test the 1-periodic extension"""

    def test_examples(self):
        with precision(128):
            self.assertEqual(periodic_bernoulli(1, Fraction(1, 4)), mp.mpf(-0.25))
            self.assertEqual(periodic_bernoulli(2, Fraction(3, 2)), mp.mpf(-1) / 12)
            expected = bernoulli_polynomial(3).evaluate(Fraction(3, 4))
            self.assertEqual(periodic_bernoulli(3, Fraction(-1, 4)), mp.mpf(expected.numerator) / expected.denominator)

    def test_periodicity_for_float_arguments(self):
        rng = random.Random(7)
        with precision(256):
            for n in range(0, 9):
                for _ in range(100):
                    x = mp.mpf(rng.uniform(-3, 3))
                    a = periodic_bernoulli(n, x)
                    b = periodic_bernoulli(n, x + 1)
                    self.assertLessEqual(abs(a - b), mp.ldexp(1, -240))

    def test_shift_check(self):
        self.assertEqual(periodic_shift_check(n_max=8, samples=100, seed=3, prec=128), 900)

    def test_interval_version_encloses_exact_value(self):
        with precision(128):
            x = mp.mpf("2.3")
            exact = bernoulli_polynomial(4).evaluate(mpf_to_fraction(x) - 2)
            lo, hi = endpoint_fractions(periodic_bernoulli_interval(4, x))
            self.assertLessEqual(lo, exact)
            self.assertLessEqual(exact, hi)


class SupNormTests(SimpleTestCase):
    """Test sup-norm bounds"""

    def test_n1(self):
        with precision(128):
            report = sup_norm_report(1, grid=1000)
            self.assertEqual(report.even_sup, Fraction(1, 6))
            self.assertTrue(mp.almosteq((lower(report.odd_bound) + upper(report.odd_bound)) / 2, 1 / (4 * mp.pi), 2 ** -100))

    def test_grid_maximum_below_bound(self):
        with precision(128):
            for n in range(1, 6):
                report = sup_norm_report(n, grid=2000)
                self.assertLessEqual(report.odd_grid_max, upper(report.odd_bound))


class AlphaZeroTests(SimpleTestCase):
    """Test the zero of B_2n in (0, 1/2)"""

    def test_alpha_1(self):
        with precision(128):
            alpha = find_alpha(1, tol=Fraction(1, 2 ** 60))
            exact = mp.mpf(1) / 2 - 1 / (2 * mp.sqrt(3))
            self.assertLessEqual(lower(alpha.bracket), exact)
            self.assertLessEqual(exact, upper(alpha.bracket))
            self.assertLessEqual(alpha.width, Fraction(1, 2 ** 60))

    def test_bracket_within_bounds(self):
        with precision(128):
            for n in range(1, 8):
                alpha = find_alpha(n)
                self.assertGreater(lower(alpha.bracket), mp.mpf(1) / 4 - 1 / (mp.pi * 4 ** n))
                self.assertLess(alpha.hi, Fraction(1, 4))

    def test_sign_change_is_preserved(self):
        poly = bernoulli_polynomial(6)
        alpha = find_alpha(3, prec=128)
        self.assertLess(poly.evaluate(alpha.lo) * poly.evaluate(alpha.hi), 0)

    def test_monotone(self):
        for n in range(1, 5):
            self.assertTrue(alpha_monotone_check(n, prec=128))

    def test_bisection_halves_and_stays_inside_bounds(self):
        for n in range(1, 8):
            alpha = alpha_bisection_check(n, prec=128)
            self.assertEqual(alpha.width * 2 ** alpha.steps, alpha.initial_width)

    def test_bisection_check_rejects_uneven_steps(self):
        alpha = find_alpha(2, prec=128)
        alpha.steps += 1
        with mock.patch('analytic_core.norms.find_alpha', return_value=alpha):
            with self.assertRaises(BoundViolation):
                alpha_bisection_check(2, prec=128)


class L1NormTests(SimpleTestCase):
    """Test the L1 norm formulas"""

    def test_examples(self):
        with precision(128):
            self.assertTrue(mp.almosteq(l1_norm(1), mp.mpf(1) / 4, 2 ** -120))
            self.assertTrue(mp.almosteq(l1_norm(2), 1 / (9 * mp.sqrt(3)), 2 ** -100))

    def test_matches_numerical_integral(self):
        with precision(128):
            for n in (3, 4, 5, 6):
                poly = bernoulli_polynomial(n)
                if n % 2:
                    breaks = [0, mp.mpf(1) / 2, 1]
                else:
                    alpha = find_alpha(n // 2)
                    root = to_mpf(alpha.lo)
                    breaks = [0, root, 1 - root, 1]
                integral = mp.quad(lambda t: abs(evaluate_mp(poly, t)), breaks)
                self.assertLess(abs(l1_norm(n) - integral), mp.mpf(10) ** -25)

    def test_bound(self):
        with precision(128):
            self.assertLess(l1_norm(9), 16 * factorial(9) / (2 * mp.pi) ** 10)

    def test_escalated_margin_is_recomputed(self):
        def escalate(margin, prec=None, label='', error=None):
            with precision(256) as bits:
                enclosure = margin(bits)
                self.assertGreater(lower(enclosure), 0)
            return enclosure

        with mock.patch('analytic_core.norms.certify_positive', side_effect=escalate), \
                mock.patch('analytic_core.norms.find_alpha', wraps=find_alpha) as alpha:
            l1_norm_enclosure(4, prec=128)
        self.assertIn(256, [call.kwargs['prec'] for call in alpha.call_args_list])
        self.assertIn(128, [call.kwargs['prec'] for call in alpha.call_args_list])


class B2nBoundTests(SimpleTestCase):
    """Test the two-sided |b_2n| estimate and its sharpness"""

    def test_bounds_hold(self):
        for n in range(1, 11):
            bound = b2n_two_sided_bound(n, prec=128)
            self.assertLess(upper(bound.lower), to_mpf(bound.value))
            self.assertLess(to_mpf(bound.value), lower(bound.upper))

    def test_ratio_decreases_to_one(self):
        with precision(128):
            ratios = [sharpness_ratio(n) for n in range(1, 21)]
            for previous, current in zip(ratios, ratios[1:]):
                self.assertLess(current, previous)
            self.assertTrue(all(1 <= r <= 2 for r in ratios))
            self.assertLess(abs(ratios[-1] - 1), mp.mpf('0.1'))

    def test_rejects_zero(self):
        with self.assertRaises(InvalidArgument):
            b2n_two_sided_bound(0)


class DilcherTests(SimpleTestCase):
    """Test the normalized limit of B_n"""

    def test_truncation_at_zero(self):
        with precision(128):
            for m in range(1, 6):
                self.assertEqual(dilcher_truncation(2 * m, 0), 1)

    def test_bound_examples(self):
        with precision(128):
            report = dilcher_check(10, mp.mpf('0.3'))
            self.assertLess(report.deviation, report.bound)
            report = dilcher_check(2, 0)
            self.assertTrue(mp.almosteq(report.normalized.real, mp.pi ** 2 / 12, 2 ** -100))

    def test_complex_argument(self):
        with precision(128):
            report = dilcher_check(12, mp.mpc('0.2', '-0.4'))
            self.assertLess(report.deviation, report.bound)

    def test_uniform_convergence(self):
        with precision(128):
            deviations = [normalized_convergence_check(n, grid=500) for n in range(2, 9)]
            self.assertLess(deviations[2], mp.mpf(3) / 256)
            self.assertLess(deviations[-1], mp.mpf(3) / 65536)
            for previous, current in zip(deviations, deviations[1:]):
                self.assertLess(current, previous)
