# euler_maclaurin/tests/test_summation.py
from fractions import Fraction
from math import factorial

from django.test import SimpleTestCase
from mpmath import iv, mp

from analytic_core.precision import contains, lower, precision, upper, width
from core.exceptions import InvalidArgument, PreconditionViolated
from euler_maclaurin.integrands import corpus, get_integrand
from euler_maclaurin.summation import (
    MonotoneTerms,
    composite_mean,
    decay_check,
    em_identity_check,
    kernel_remainder,
    monotone_tail_sum,
    offset_periodicity_check,
    polynomial_exactness_check,
    signed_remainder_cor61,
)


class CompositeMeanTests(SimpleTestCase):
    """Test the offset Riemann mean"""

    def test_examples(self):
        with precision(128):
            self.assertEqual(composite_mean(get_integrand('poly:1'), 7, Fraction(3, 10)), 1)
            identity = get_integrand('poly:0,1')
            self.assertEqual(composite_mean(identity, 4, 0), mp.mpf(3) / 8)
            self.assertEqual(composite_mean(identity, 4, Fraction(1, 2)), mp.mpf(1) / 2)

    def test_decimal_offset(self):
        with precision(128):
            value = composite_mean(get_integrand('poly:0,1'), 4, mp.mpf('0.5'))
            self.assertEqual(value, mp.mpf(1) / 2)

    def test_rejects_bad_arguments(self):
        f = get_integrand('exp')
        with self.assertRaises(InvalidArgument):
            composite_mean(f, 0, 0)
        with self.assertRaises(InvalidArgument):
            composite_mean(f, 3, Fraction(3, 2))


class IdentityCheckTests(SimpleTestCase):
    """Test the remainder identity and its bound"""

    def test_exp(self):
        result = em_identity_check(get_integrand('exp'), 8, 3, 0, prec=128)
        self.assertEqual(len(result.correction_terms), 3)
        self.assertLessEqual(max(abs(lower(result.remainder)), abs(upper(result.remainder))), result.bound)
        with precision(128):
            total = result.estimate + mp.fsum(result.correction_terms) + (lower(result.remainder) + upper(result.remainder)) / 2
            self.assertLess(abs(total - (mp.e - 1)), mp.ldexp(1, -90))

    def test_linear_has_no_remainder(self):
        for p in (1, 3, 8):
            result = em_identity_check(get_integrand('poly:1,2'), p, 2, Fraction(1, 4), prec=128)
            self.assertTrue(contains(result.remainder, 0))
            self.assertLess(width(result.remainder), mp.ldexp(1, -90))

    def test_cosine_has_no_corrections(self):
        result = em_identity_check(get_integrand('cos2pi'), 4, 2, 0, prec=128)
        self.assertTrue(all(term == 0 for term in result.correction_terms))
        self.assertEqual(result.estimate, 0)
        with precision(128):
            self.assertLess(abs(result.integral), mp.ldexp(1, -90))

    def test_decimal_offset(self):
        with precision(128):
            result = em_identity_check(get_integrand('log1p'), 5, 4, mp.mpf('0.3'))
            self.assertEqual(result.m, 4)

    def test_offsets_zero_and_one_agree(self):
        with precision(128):
            for name in ('exp', 'log1p', 'poly:0,0,0,1'):
                f = get_integrand(name)
                at_zero, _ = kernel_remainder(f, 4, 3, 0)
                at_one, _ = kernel_remainder(f, 4, 3, 1)
                self.assertLess(abs(at_zero - at_one), mp.ldexp(1, -100))

    def test_polynomial_exact_beyond_degree(self):
        f = get_integrand('poly:0,1,0,-2,5')
        exact = f.polynomial.integrate()
        for p in (1, 2, 5):
            result = em_identity_check(f, p, 5, Fraction(1, 3), prec=128)
            with precision(128):
                corrected = result.estimate + mp.fsum(result.correction_terms)
                self.assertLess(abs(corrected - mp.mpf(exact.numerator) / exact.denominator), mp.ldexp(1, -100))

    def test_offset_periodicity_from_definition(self):
        for name in ('exp', 'reciprocal1p', 'poly:0,0,0,1'):
            for m in (1, 3, 6):
                gap = offset_periodicity_check(get_integrand(name), 4, m, prec=128)
                self.assertLess(gap, mp.ldexp(1, -80))

    def test_polynomial_exactness_check(self):
        f = get_integrand('poly:0,1,0,-2,5')
        for p in (1, 3, 16):
            for x in (Fraction(0), Fraction(1, 2), Fraction(1)):
                self.assertLess(polynomial_exactness_check(f, p, 5, x, prec=128), mp.ldexp(1, -100))
        with self.assertRaises(InvalidArgument):
            polynomial_exactness_check(f, 2, 4)
        with self.assertRaises(InvalidArgument):
            polynomial_exactness_check(get_integrand('exp'), 2, 4)

    def test_corpus_sweep(self):
        offsets = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1))
        for f in corpus(max_degree=3):
            for p in (2, 8):
                for m in (1, 4):
                    for x in offsets:
                        em_identity_check(f, p, m, x, prec=96)

    def test_rejects_bad_order(self):
        with self.assertRaises(InvalidArgument):
            em_identity_check(get_integrand('exp'), 4, 0, 0)


class DecayTests(SimpleTestCase):
    """Test p^m E tending to 0"""

    def test_exp(self):
        values = decay_check(get_integrand('exp'), 2, 0, [4, 8, 16, 32, 64], prec=128)
        magnitudes = [abs(v) for v in values]
        self.assertEqual(magnitudes, sorted(magnitudes, reverse=True))

    def test_reciprocal(self):
        values = decay_check(get_integrand('reciprocal1p'), 3, 0, [4, 8, 16, 32], prec=128)
        self.assertLess(abs(values[-1]), abs(values[0]))

    def test_low_degree_polynomial_vanishes(self):
        values = decay_check(get_integrand('poly:1,1,1'), 3, Fraction(1, 2), [2, 4, 8], prec=128)
        self.assertTrue(all(v == 0 for v in values))

    def test_requires_increasing_counts(self):
        with self.assertRaises(InvalidArgument):
            decay_check(get_integrand('exp'), 2, 0, [8, 4])


class SignedRemainderTests(SimpleTestCase):
    """Test the signed remainder of the trapezoid form"""

    def test_log1p(self):
        with precision(128):
            enclosure = signed_remainder_cor61(get_integrand('log1p'), 1)
            self.assertTrue(contains(enclosure, mp.mpf(3) / 2 * mp.log(2) - 1))
            for m in (2, 3, 4):
                enclosure = signed_remainder_cor61(get_integrand('log1p'), m)
                self.assertGreaterEqual(upper(enclosure), 0)

    def test_linear_is_zero(self):
        with precision(128):
            enclosure = signed_remainder_cor61(get_integrand('poly:3,-1'), 1)
            self.assertTrue(contains(enclosure, 0))
            self.assertLess(width(enclosure), mp.ldexp(1, -90))

    def test_increasing_odd_derivative_rejected(self):
        with self.assertRaises(PreconditionViolated):
            signed_remainder_cor61(get_integrand('reciprocal1p'), 1)
        with self.assertRaises(PreconditionViolated):
            signed_remainder_cor61(get_integrand('exp'), 2)


def inverse_square_terms(sign=1):
    return MonotoneTerms(
        name='inverse_square',
        deriv=lambda k, s: sign * (-1) ** k * factorial(k + 1) / iv.mpf(s) ** (k + 2),
        tail_integral=lambda K: sign / iv.mpf(K),
    )


class MonotoneTailTests(SimpleTestCase):
    """Test certified tails of completely monotone series"""

    def test_inverse_squares(self):
        with precision(128):
            exact = mp.zeta(2) - mp.fsum(mp.mpf(1) / k ** 2 for k in range(1, 10))
            for m in (1, 2, 4):
                tail = monotone_tail_sum(inverse_square_terms(), 10, m)
                self.assertLessEqual(lower(tail), exact)
                self.assertLessEqual(exact, upper(tail))
            self.assertLess(width(tail), mp.mpf(10) ** -9)

    def test_wrong_sign_rejected(self):
        with precision(128):
            with self.assertRaises(PreconditionViolated):
                monotone_tail_sum(inverse_square_terms(sign=-1), 10, 2)
