# euler_maclaurin/tests/test_integrands.py
from dataclasses import replace
from fractions import Fraction

from django.test import SimpleTestCase
from mpmath import mp

from analytic_core.precision import precision
from core.exceptions import BoundViolation, InvalidArgument, PreconditionViolated
from euler_maclaurin.integrands import corpus, get_integrand, monomial_integrand, validate_integrand
from exact_core.polynomial import RatPolynomial


class CorpusLookupTests(SimpleTestCase):
    """Test name lookup of the built-in integrands"""

    def test_named_integrands(self):
        for name in ('exp', 'reciprocal1p', 'cos2pi', 'log1p'):
            self.assertEqual(get_integrand(name).name, name)

    def test_polynomial_by_coefficients(self):
        f = get_integrand('poly:1/2,0,3')
        self.assertEqual(f.polynomial, RatPolynomial([Fraction(1, 2), 0, 3]))
        with precision(128):
            self.assertEqual(f(mp.mpf(1)), mp.mpf('3.5'))
            self.assertEqual(f.delta(0), 3)
            self.assertEqual(f.delta(1), 6)

    def test_unknown_name(self):
        with self.assertRaises(InvalidArgument):
            get_integrand('sinh')
        with self.assertRaises(InvalidArgument):
            get_integrand('poly:')
        with self.assertRaises(InvalidArgument):
            get_integrand('poly:1,x')

    def test_corpus_contents(self):
        names = [f.name for f in corpus(max_degree=2)]
        self.assertEqual(names, ['exp', 'reciprocal1p', 'cos2pi', 'log1p', 'poly:1', 'poly:0,1', 'poly:0,0,1'])


class MonotoneFlagTests(SimpleTestCase):
    """Test the decreasing-derivative flags"""

    def test_log1p_odd_orders(self):
        f = get_integrand('log1p')
        self.assertTrue(f.decreasing(1))
        self.assertTrue(f.decreasing(3))
        self.assertFalse(f.decreasing(0))
        self.assertFalse(f.decreasing(2))

    def test_reciprocal1p_even_orders(self):
        f = get_integrand('reciprocal1p')
        self.assertTrue(f.decreasing(0))
        self.assertFalse(f.decreasing(1))
        self.assertFalse(f.decreasing(3))

    def test_polynomial_flags_from_grid(self):
        linear = monomial_integrand(1)
        self.assertFalse(linear.decreasing(0))
        self.assertTrue(linear.decreasing(1))
        falling = get_integrand('poly:0,0,-1')
        self.assertTrue(falling.decreasing(0))
        self.assertTrue(falling.decreasing(1))

    def test_exp_and_cosine_have_none(self):
        self.assertEqual(get_integrand('exp').monotone_flags, frozenset())
        self.assertEqual(get_integrand('cos2pi').monotone_flags, frozenset())


class ValidatorTests(SimpleTestCase):
    """Test the closed-form derivative validators"""

    def test_corpus_passes(self):
        for f in corpus(max_degree=6):
            self.assertTrue(validate_integrand(f, grid=200, prec=128), f.name)

    def test_understated_sup_is_caught(self):
        f = replace(get_integrand('exp'), sup_deriv=lambda m: mp.mpf(2))
        with self.assertRaises(BoundViolation):
            validate_integrand(f, grid=100, prec=128)

    def test_false_monotone_flag_is_caught(self):
        f = replace(get_integrand('exp'), monotone_flags=frozenset({0}))
        with self.assertRaises(PreconditionViolated):
            validate_integrand(f, grid=100, prec=128)

    def test_order_limit(self):
        with self.assertRaises(InvalidArgument):
            get_integrand('exp').require_order(99)
