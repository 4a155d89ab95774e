# trig_sums/tests/test_expansions.py
from django.test import SimpleTestCase
from mpmath import mp

from analytic_core.precision import lower, midpoint, precision, upper
from core.exceptions import InvalidArgument
from trig_sums.expansions import (
    I_expansion_check,
    I_sweep,
    J_expansion_check,
    J_sweep,
    asymptotic_ratio,
    cor94_bracket,
    cor97_bracket,
    pr72_expansion_check,
    rm98_identity_suite,
)

PREC = 128


class ExpansionWitnessTests(SimpleTestCase):
    """Test the remainder witnesses of the I_p and J_p expansions"""

    def assertInside(self, witness, bound):
        with precision(PREC):
            self.assertGreater(lower(witness), 0)
            self.assertLess(upper(witness), bound)

    def test_csc_expansion(self):
        self.assertInside(I_expansion_check(5, 1, prec=PREC), mp.mpf(1) / 6)
        self.assertInside(I_expansion_check(16, 2, prec=PREC), mp.mpf(1) / 30)

    def test_cot_expansion(self):
        self.assertInside(J_expansion_check(5, 1, prec=PREC), mp.mpf(1) / 6)
        self.assertInside(J_expansion_check(32, 3, prec=PREC), mp.mpf(1) / 42)

    def test_harmonic_number_expansion(self):
        with precision(PREC):
            bound = (1 + 2 * mp.zeta(2)) / (6 * 2 * mp.pi)
        self.assertInside(pr72_expansion_check(4, 1, prec=PREC), bound)
        self.assertInside(pr72_expansion_check(1, 1, prec=PREC), bound)
        with precision(PREC):
            bound = (1 + 2 * mp.zeta(4)) / (30 * 4 * mp.pi)
        self.assertInside(pr72_expansion_check(10, 2, prec=PREC), bound)

    def test_small_p_rejected(self):
        with self.assertRaises(InvalidArgument):
            I_expansion_check(1, 1)
        with self.assertRaises(InvalidArgument):
            J_expansion_check(4, 0)


class BracketTests(SimpleTestCase):
    """Test the alternating brackets of I_p and J_p"""

    def test_csc_bracket_first_case(self):
        for p in (1, 2, 3, 10, 100):
            bracket = cor94_bracket(p, 0, prec=PREC)
            with precision(PREC):
                self.assertLess(upper(bracket.lower), lower(bracket.value))
                self.assertLess(upper(bracket.value), lower(bracket.upper))
                gap = midpoint(bracket.upper) - midpoint(bracket.lower)
                self.assertAlmostEqual(float(gap), float(mp.pi / (36 * p)), places=12)

    def test_higher_brackets(self):
        for n in (1, 2):
            for p in (4, 16, 64):
                self.assertGreater(lower(cor94_bracket(p, n, prec=PREC).margin), 0)
                self.assertGreater(lower(cor97_bracket(p, n, prec=PREC).margin), 0)

    def test_cot_bracket_first_case(self):
        for p in (1, 2, 5, 40):
            bracket = cor97_bracket(p, 0, prec=PREC)
            with precision(PREC):
                gap = bracket.upper - bracket.value
                self.assertGreater(lower(gap), 0)
                self.assertLess(upper(gap), mp.pi / 36)

    def test_sweeps(self):
        rows = I_sweep(30, prec=PREC)
        self.assertEqual([row['p'] for row in rows], list(range(1, 31)))
        self.assertTrue(all(mp.mpf(row['margin']) > 0 for row in rows))
        rows = J_sweep(20, start=2, prec=PREC)
        self.assertEqual(rows[0]['p'], 2)
        self.assertEqual(set(rows[0]), {'p', 'value', 'lower', 'upper', 'margin'})

    def test_bad_bracket_arguments(self):
        with self.assertRaises(InvalidArgument):
            cor94_bracket(0)
        with self.assertRaises(InvalidArgument):
            cor97_bracket(4, n=-1)
        with self.assertRaises(InvalidArgument):
            I_sweep(3, start=5)


class SeriesLinkTests(SimpleTestCase):
    """Test the identities between the trigonometric sums and C_p, D_p, E_p"""

    def test_series_identities(self):
        for p in (1, 3, 8):
            self.assertTrue(rm98_identity_suite(p, prec=PREC))

    def test_asymptotic_ratio(self):
        ratio = asymptotic_ratio(10_000, prec=64)
        self.assertLess(abs(ratio - 1), 0.05)
