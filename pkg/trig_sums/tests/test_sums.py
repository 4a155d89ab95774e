# trig_sums/tests/test_sums.py
from django.test import SimpleTestCase
from mpmath import iv, mp

from analytic_core.precision import contains, lower, midpoint, precision, upper, width
from core.exceptions import IdentityViolation, InvalidArgument
from trig_sums.sums import TRIG_KINDS, agree, csc_pairing_check, csc_sum, identity_suite, trig_sum

PREC = 128


class TrigSumTests(SimpleTestCase):
    """Test direct evaluation of the trigonometric sums"""

    def test_small_values(self):
        with precision(PREC):
            self.assertTrue(contains(trig_sum('I', 2).value, 1))
            self.assertTrue(contains(trig_sum('J', 2).value, 0))
            self.assertTrue(contains(trig_sum('I', 3).value, 4 / mp.sqrt(3)))
            self.assertTrue(contains(trig_sum('J', 4).value, -2))

    def test_empty_sums_are_zero(self):
        with precision(PREC):
            for kind in TRIG_KINDS:
                value = trig_sum(kind, 1).value
                self.assertEqual(lower(value), 0)
                self.assertEqual(upper(value), 0)

    def test_csc_sum_positive(self):
        with precision(PREC):
            for p in range(2, 12):
                self.assertGreater(lower(trig_sum('I', p).value), 0)

    def test_pairing_matches_forward_sum(self):
        with precision(PREC):
            for p in (7, 8, 101):
                paired, forward = csc_sum(p), csc_sum(p, paired=False)
                self.assertLessEqual(abs(mp.mpf(upper(paired)) - mp.mpf(upper(forward))),
                                     2 * mp.ldexp(1, -PREC) * upper(forward) + width(forward))

    def test_pairing_check(self):
        for p in (1, 2, 3, 8, 101, 1000):
            residual = csc_pairing_check(p, prec=PREC)
            with precision(PREC):
                self.assertLessEqual(abs(midpoint(residual)), 4 * p * mp.ldexp(1, -PREC) * max(1, upper(csc_sum(p))))

    def test_as_dict(self):
        row = trig_sum('I', 2, prec=PREC).as_dict(10)
        self.assertEqual((row['kind'], row['p']), ('I', 2))
        self.assertEqual(row['value'], '1.0')

    def test_rejects_bad_arguments(self):
        with self.assertRaises(InvalidArgument):
            trig_sum('N', 3)
        with self.assertRaises(InvalidArgument):
            trig_sum('I', 0)


class IdentitySuiteTests(SimpleTestCase):
    """Test the relations between the six trigonometric sums"""

    def test_identities_hold(self):
        for p in (1, 2, 7, 64):
            self.assertTrue(identity_suite(p, prec=PREC))

    def test_disagreement_detected(self):
        with precision(PREC):
            with self.assertRaises(IdentityViolation):
                agree("1 = 2", trig_sum('I', 2).value, 2 * trig_sum('I', 2).value, PREC)

    def test_wide_enclosures_are_undecided(self):
        with precision(PREC):
            with self.assertRaises(IdentityViolation):
                agree("wide", iv.mpf([0, 1]), iv.mpf([0, 1]), PREC)
