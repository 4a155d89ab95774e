# exact_core/tests/test_polynomial.py
from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import InvalidArgument
from exact_core.polynomial import RatPolynomial, X, format_rational, parse_rational


class RationalFormatTests(SimpleTestCase):
    """Test the "num/den" wire format"""

    def test_integer_has_no_denominator(self):
        self.assertEqual(format_rational(Fraction(7)), '7')
        self.assertEqual(format_rational(Fraction(-4, 2)), '-2')

    def test_fraction_is_reduced(self):
        self.assertEqual(format_rational(Fraction(10, 132)), '5/66')
        self.assertEqual(format_rational(Fraction(-2, 60)), '-1/30')

    def test_parse(self):
        self.assertEqual(parse_rational('5/66'), Fraction(5, 66))
        self.assertEqual(parse_rational(' -3 '), Fraction(-3))

    def test_parse_rejects_garbage(self):
        with self.assertRaises(InvalidArgument):
            parse_rational('1/0')
        with self.assertRaises(InvalidArgument):
            parse_rational('pi')


class RatPolynomialTests(SimpleTestCase):
    """Test exact polynomial arithmetic"""

    def test_trailing_zeros_stripped(self):
        p = RatPolynomial([1, 2, 0, 0])
        self.assertEqual(p.degree, 1)
        self.assertEqual(p.coeffs, (Fraction(1), Fraction(2)))

    def test_zero_polynomial_is_empty(self):
        zero = RatPolynomial([0, 0])
        self.assertTrue(zero.is_zero)
        self.assertEqual(zero.coeffs, ())
        self.assertEqual(str(zero), '0')
        self.assertTrue((X - X).is_zero)

    def test_multiplication_and_power(self):
        self.assertEqual((X + 1) * (X - 1), X ** 2 - 1)
        self.assertEqual((X + 1) ** 3, RatPolynomial([1, 3, 3, 1]))

    def test_shift_and_compose(self):
        p = X ** 2 - X
        self.assertEqual(p.shift(1), X ** 2 + X)
        self.assertEqual(p.compose(1 - X), X ** 2 - X)

    def test_scale(self):
        self.assertEqual((X ** 2 + X).scale(Fraction(1, 2)), RatPolynomial([0, Fraction(1, 2), Fraction(1, 4)]))

    def test_calculus(self):
        p = RatPolynomial([1, 2, 3])
        self.assertEqual(p.derivative(), RatPolynomial([2, 6]))
        self.assertEqual(p.antiderivative(), RatPolynomial([0, 1, 1, 1]))
        self.assertEqual(p.integrate(0, 1), 3)

    def test_divide_by_x(self):
        self.assertEqual((X ** 3 - X).divide_by_x(), X ** 2 - 1)
        with self.assertRaises(InvalidArgument):
            (X + 1).divide_by_x()

    def test_text_format(self):
        p = RatPolynomial([0, Fraction(1, 2), Fraction(-3, 2), 1])
        self.assertEqual(str(p), 'X^3 - 3/2*X^2 + 1/2*X')
        self.assertEqual(str(-X + 2), '-X + 2')

    def test_evaluate_is_exact(self):
        p = X ** 2 - X + Fraction(1, 6)
        self.assertEqual(p.evaluate(Fraction(1, 2)), Fraction(-1, 12))
        self.assertEqual(p.evaluate('1/3'), Fraction(-1, 18))
