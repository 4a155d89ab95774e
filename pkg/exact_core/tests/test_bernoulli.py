# exact_core/tests/test_bernoulli.py
"""
Bernoulli numbers and polynomials against the published tables and against
mpmath's independent rational generator.
"""

from fractions import Fraction

import mpmath
from django.test import SimpleTestCase

from core.exceptions import InvalidArgument
from exact_core.bernoulli import BernoulliCache, bernoulli_number, bernoulli_polynomial, poly_eval
from exact_core.polynomial import RatPolynomial


def oracle(n):
    """b_n from mpmath, with the b_1 = -1/2 convention."""
    p, q = mpmath.bernfrac(n)
    return Fraction(int(p), int(q))


class BernoulliNumberTests(SimpleTestCase):
    """Test the canonical recurrence for b_n"""

    TABLE = {
        0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
        6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66),
        12: Fraction(-691, 2730), 14: Fraction(7, 6), 16: Fraction(-3617, 510),
    }

    def test_table_values(self):
        for n, expected in self.TABLE.items():
            with self.subTest(n=n):
                self.assertEqual(bernoulli_number(n), expected)

    def test_odd_indices_vanish(self):
        for n in range(3, 61, 2):
            self.assertEqual(bernoulli_number(n), 0)

    def test_against_mpmath_oracle(self):
        for n in range(0, 81):
            with self.subTest(n=n):
                self.assertEqual(bernoulli_number(n), oracle(n))

    def test_negative_index_rejected(self):
        with self.assertRaises(InvalidArgument):
            bernoulli_number(-1)

    def test_fresh_cache_fills_every_index(self):
        cache = BernoulliCache()
        cache.number(12)
        self.assertEqual(len(cache.numbers), 13)
        self.assertEqual(cache.numbers_upto(4), [Fraction(1), Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)])


class BernoulliPolynomialTests(SimpleTestCase):
    """Test B_n(X) against the polynomial table"""

    def test_table_values(self):
        self.assertEqual(bernoulli_polynomial(0), RatPolynomial([1]))
        self.assertEqual(str(bernoulli_polynomial(1)), 'X - 1/2')
        self.assertEqual(str(bernoulli_polynomial(2)), 'X^2 - X + 1/6')
        self.assertEqual(str(bernoulli_polynomial(3)), 'X^3 - 3/2*X^2 + 1/2*X')
        self.assertEqual(str(bernoulli_polynomial(4)), 'X^4 - 2*X^3 + X^2 - 1/30')
        self.assertEqual(str(bernoulli_polynomial(5)), 'X^5 - 5/2*X^4 + 5/3*X^3 - 1/6*X')

    def test_monic_with_constant_b_n(self):
        for n in range(0, 41):
            with self.subTest(n=n):
                b = bernoulli_polynomial(n)
                self.assertEqual(b.degree, n)
                self.assertEqual(b.leading, 1)
                self.assertEqual(b.coefficient(0), bernoulli_number(n))

    def test_zero_mean(self):
        for n in range(1, 41):
            self.assertEqual(bernoulli_polynomial(n).integrate(0, 1), 0)

    def test_poly_eval(self):
        self.assertEqual(poly_eval(bernoulli_polynomial(4), 0), Fraction(-1, 30))
        self.assertEqual(poly_eval(bernoulli_polynomial(1), Fraction(1, 2)), 0)
        self.assertEqual(poly_eval(bernoulli_polynomial(2), '1/2'), Fraction(-1, 12))

    def test_value_at_quarter(self):
        # B_2n(1/4) = 2^(-2n) (2^(1-2n) - 1) b_2n
        self.assertEqual(poly_eval(bernoulli_polynomial(4), Fraction(1, 4)), Fraction(7, 3840))
        for n in range(1, 12):
            expected = Fraction(1, 4 ** n) * (Fraction(2) ** (1 - 2 * n) - 1) * bernoulli_number(2 * n)
            self.assertEqual(poly_eval(bernoulli_polynomial(2 * n), Fraction(1, 4)), expected)
