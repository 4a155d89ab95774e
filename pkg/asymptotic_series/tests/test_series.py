# asymptotic_series/tests/test_series.py
from unittest import mock

from django.test import SimpleTestCase
from mpmath import iv, mp

from analytic_core.precision import contains, lower, precision, upper, width
from asymptotic_series.series import (
    SeriesValue,
    leading_terms_check,
    lm84_check,
    pr82_check,
    pr83_check,
    series_C,
    series_D,
    series_E,
    series_value,
    width_shrink_check,
)
from core.exceptions import IdentityViolation, InvalidArgument, SandwichViolation, ToleranceFailure

PREC = 128


class SeriesClosedFormTests(SimpleTestCase):
    """Test C_1, D_1 and E_1 against their closed forms"""

    def test_c1(self):
        result = series_C(1, prec=PREC)
        with precision(PREC + 20):
            self.assertTrue(contains(result.value, (1 + mp.euler - mp.log(2 * mp.pi)) / 2))
            self.assertLess(width(result.value), mp.ldexp(1, -100))
            self.assertAlmostEqual(float(lower(result.value)), -0.1303307, places=7)

    def test_d1(self):
        result = series_D(1, prec=PREC)
        with precision(PREC + 20):
            self.assertTrue(contains(result.value, (mp.log(mp.pi) - mp.euler) / 2))

    def test_e1(self):
        result = series_E(1, prec=PREC)
        with precision(PREC + 20):
            self.assertTrue(contains(result.value, mp.log(2)))
            self.assertLess(width(result.value), mp.ldexp(1, -100))

    def test_dispatch_and_output(self):
        result = series_value('E', 1, tol='1e-25', prec=PREC)
        row = result.as_dict(12)
        self.assertEqual((row['kind'], row['p']), ('E', 1))
        self.assertTrue(row['lo'].startswith('0.69314718'))
        self.assertTrue(row['hi'].startswith('0.69314718'))
        with self.assertRaises(InvalidArgument):
            series_value('F', 1)

    def test_tolerance_failure(self):
        with self.assertRaises(ToleranceFailure):
            series_C(1, tol='1e-30', terms=10, order=1, prec=PREC)

    def test_budget_doubling_halves_width(self):
        coarse = series_C(2, terms=200, order=1, prec=PREC)
        fine = series_C(2, terms=400, order=1, prec=PREC)
        with precision(PREC):
            self.assertGreaterEqual(width(coarse.value) / width(fine.value), mp.mpf('1.9'))
            self.assertLessEqual(lower(coarse.value), lower(fine.value))
            self.assertGreaterEqual(upper(coarse.value), upper(fine.value))

    def test_width_shrink_check(self):
        for kind in ('C', 'D', 'E'):
            with self.subTest(kind=kind):
                self.assertGreaterEqual(width_shrink_check(kind, p=2, terms=64, prec=PREC), 1.9)
        with self.assertRaises(ToleranceFailure):
            width_shrink_check('C', p=2, terms=64, factor=3, prec=PREC)

    def test_rejects_bad_arguments(self):
        with self.assertRaises(InvalidArgument):
            series_C(0)
        with self.assertRaises(InvalidArgument):
            series_D(1, terms=0)
        with self.assertRaises(InvalidArgument):
            series_E(1, order=0)


class SeriesExpansionTests(SimpleTestCase):
    """Test the expansions of C_p, D_p and E_p in 1/p"""

    def test_c_expansion_witness(self):
        witness = pr82_check(3, 2, prec=PREC)
        with precision(PREC):
            self.assertGreater(lower(witness), 0)
            self.assertLess(upper(witness), mp.mpf(1) / 30)

    def test_d_expansion_witness(self):
        witness = pr83_check(2, 2, prec=PREC)
        with precision(PREC):
            self.assertGreater(lower(witness), 0)
            self.assertLess(upper(witness), mp.mpf(1) / 30)

    def test_e_identity(self):
        residual = lm84_check(4, prec=PREC)
        with precision(PREC):
            self.assertLessEqual(lower(residual), 0)
            self.assertGreaterEqual(upper(residual), 0)
            self.assertLess(width(residual), mp.ldexp(1, -90))

    def test_leading_terms(self):
        difference = leading_terms_check(10, prec=PREC)
        with precision(PREC):
            self.assertLess(abs(mp.mpf(upper(difference))), mp.mpf('5e-9'))
        with self.assertRaises(InvalidArgument):
            leading_terms_check(10, terms=3)


class SeriesPostconditionTests(SimpleTestCase):
    """Test that D_p and E_p refuse enclosures contradicting their known relations"""

    def test_d_within_expansion_bracket(self):
        for p in (1, 2, 5):
            series_D(p, prec=PREC)

    def test_d_outside_expansion_bracket(self):
        with precision(PREC):
            wrong = SeriesValue(kind='D', p=2, value=iv.mpf(1), terms=10, order=1)
        with mock.patch('asymptotic_series.series._harmonic_series', return_value=wrong):
            with self.assertRaises(SandwichViolation):
                series_D(2, prec=PREC)

    def test_e_agrees_with_d(self):
        result = series_E(3, prec=PREC, cross_check=True)
        with precision(PREC):
            self.assertLess(width(result.value), mp.ldexp(1, -100))

    def test_e_rejects_inconsistent_d(self):
        with precision(PREC):
            wrong = SeriesValue(kind='D', p=1, value=iv.mpf(5), terms=10, order=1)
        with mock.patch('asymptotic_series.series.series_D', return_value=wrong):
            with self.assertRaises(IdentityViolation):
                series_E(1, prec=PREC)
            series_E(1, prec=PREC, cross_check=False)
