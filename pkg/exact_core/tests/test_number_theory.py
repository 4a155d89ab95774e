# exact_core/tests/test_number_theory.py
from django.test import SimpleTestCase

from core.exceptions import InvalidArgument
from exact_core.number_theory import (
    bernoulli_denominator_check,
    integrality_von5,
    is_prime,
    tangent_integrality,
    tangent_number,
    von_staudt_clausen,
)


class VonStaudtClausenTests(SimpleTestCase):
    """Test von Staudt-Clausen and the denominator of b_2n"""

    def test_small_cases(self):
        self.assertEqual(von_staudt_clausen(1), ([2, 3], 1))
        self.assertEqual(von_staudt_clausen(2), ([2, 3, 5], 1))
        primes, integer_part = von_staudt_clausen(6)
        self.assertEqual(primes, [2, 3, 5, 7, 13])
        self.assertEqual(integer_part, 1)

    def test_integer_part_up_to_thirty(self):
        for n in range(1, 31):
            with self.subTest(n=n):
                primes, integer_part = von_staudt_clausen(n)
                self.assertIsInstance(integer_part, int)
                self.assertTrue(bernoulli_denominator_check(n))

    def test_rejects_zero(self):
        with self.assertRaises(InvalidArgument):
            von_staudt_clausen(0)

    def test_is_prime(self):
        self.assertEqual([q for q in range(30) if is_prime(q)], [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])


class IntegralityTests(SimpleTestCase):
    """Test the integrality corollaries and tangent numbers"""

    def test_von5(self):
        self.assertTrue(integrality_von5(2, 2))
        self.assertTrue(integrality_von5(10, 12))
        for m in range(1, 8):
            for k in range(0, 25):
                self.assertTrue(integrality_von5(m, k))

    def test_tangent_numbers(self):
        self.assertEqual([tangent_number(k) for k in range(1, 7)], [1, 2, 16, 272, 7936, 353792])

    def test_tangent_integrality(self):
        for n in range(1, 31):
            with self.subTest(n=n):
                self.assertTrue(tangent_integrality(n))
