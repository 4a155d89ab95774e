# exact_core/tests/test_api.py
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase


class ExactEndpointTests(APITestCase):
    """Test the read-only exact endpoints"""

    def test_numbers_range(self):
        response = self.client.get(reverse('exact_numbers'), {'start': 8, 'end': 10})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(
            response.data['numbers'],
            [{'n': 8, 'value': '-1/30'}, {'n': 9, 'value': '0'}, {'n': 10, 'value': '5/66'}],
        )

    def test_numbers_bad_range(self):
        response = self.client.get(reverse('exact_numbers'), {'start': 5, 'end': 2})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_polynomial(self):
        response = self.client.get(reverse('exact_polynomial'), {'n': 3})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['polynomial'], 'X^3 - 3/2*X^2 + 1/2*X')
        self.assertEqual(response.data['coefficients'], ['0', '1/2', '-3/2', '1'])

    def test_evaluate(self):
        response = self.client.get(reverse('exact_evaluate'), {'n': 2, 'x': '1/2'})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['value'], '-1/12')

    def test_evaluate_rejects_non_rational(self):
        response = self.client.get(reverse('exact_evaluate'), {'n': 2, 'x': 'pi'})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_power_sum(self):
        response = self.client.get(reverse('exact_power_sum'), {'n': 2, 'm': 4})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['value'], '30')
        self.assertEqual(response.data['polynomial'], '1/3*X^3 + 1/2*X^2 + 1/6*X')

    def test_von_staudt(self):
        response = self.client.get(reverse('exact_von_staudt'), {'n': 2})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['primes'], [2, 3, 5])
        self.assertEqual(response.data['integer_part'], '1')
        self.assertEqual(response.data['b_2n'], '-1/30')
