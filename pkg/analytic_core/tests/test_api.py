# analytic_core/tests/test_api.py
from django.core.cache import cache
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase


class AnalyticEndpointTests(APITestCase):
    """Test the high-precision endpoints"""

    def setUp(self):
        cache.clear()

    def test_periodic_rational_and_decimal(self):
        response = self.client.get(reverse('analytic_periodic'), {'n': 1, 'x': '1/4', 'prec': 128})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['value'], '-0.25')
        response = self.client.get(reverse('analytic_periodic'), {'n': 1, 'x': '2.75', 'prec': 128})
        self.assertEqual(response.data['value'], '0.25')

    def test_alpha(self):
        response = self.client.get(reverse('analytic_alpha'), {'n': 1, 'prec': 128, 'digits': 12})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data['bracket']['lower'].startswith('0.21132486'))

    def test_b2n_bound(self):
        response = self.client.get(reverse('analytic_b2n_bound'), {'n': 5, 'prec': 128})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data['value'], '5/66')

    def test_dilcher(self):
        response = self.client.get(reverse('analytic_dilcher'), {'n': 10, 're': 0.3, 'prec': 128})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertIn('deviation', response.data)

    def test_precision_above_maximum_rejected(self):
        response = self.client.get(reverse('analytic_l1_norm'), {'n': 2, 'prec': 10 ** 6})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_missing_index_rejected(self):
        response = self.client.get(reverse('analytic_sup_norm'))
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
