# euler_maclaurin/tests/test_gauss.py
from django.test import SimpleTestCase
from mpmath import mp

from analytic_core.precision import precision
from core.exceptions import ToleranceFailure
from euler_maclaurin.gauss import adaptive_gauss, fixed_gauss, gauss_legendre_nodes


class GaussLegendreTests(SimpleTestCase):
    """Test the Gauss-Legendre rules"""

    def test_nodes_and_weights(self):
        for n in (15, 31):
            nodes = gauss_legendre_nodes(n, 128)
            self.assertEqual(len(nodes), n)
            with precision(128):
                self.assertTrue(mp.almosteq(mp.fsum(w for _, w in nodes), 2, 2 ** -120))
                for (x, w), (y, v) in zip(nodes, reversed(nodes)):
                    self.assertTrue(mp.almosteq(x, -y, 2 ** -120))
                    self.assertTrue(mp.almosteq(w, v, 2 ** -120))

    def test_fixed_rule_exact_degree(self):
        with precision(128):
            self.assertTrue(mp.almosteq(fixed_gauss(lambda t: t ** 61, 0, 1, 31), mp.mpf(1) / 62, 2 ** -110))
            self.assertTrue(mp.almosteq(fixed_gauss(lambda t: t ** 29, 0, 1, 15), mp.mpf(1) / 30, 2 ** -110))

    def test_adaptive_reaches_tolerance(self):
        with precision(128):
            tol = mp.ldexp(1, -96)
            result = adaptive_gauss(mp.exp, 0, 1, tol)
            self.assertLess(abs(result.value - (mp.e - 1)), tol)
            result = adaptive_gauss(lambda t: 1 / (1 + t), 0, 1, tol)
            self.assertLess(abs(result.value - mp.log(2)), tol)
            self.assertLessEqual(result.error, tol)

    def test_depth_limit(self):
        with precision(128):
            with self.assertRaises(ToleranceFailure):
                adaptive_gauss(lambda t: mp.sqrt(t), 0, 1, mp.ldexp(1, -120), max_depth=3)
