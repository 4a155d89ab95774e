# exact_core/views.py

from core.views import ComputationView

from .bernoulli import bernoulli_number, bernoulli_polynomial, default_cache
from .identities import power_sum, power_sum_polynomial
from .number_theory import von_staudt_clausen
from .polynomial import format_rational
from .serializers import (
    EvaluateQuerySerializer,
    IndexQuerySerializer,
    PowerSumQuerySerializer,
    RangeQuerySerializer,
    VonStaudtQuerySerializer,
)


class BernoulliNumbersView(ComputationView):
    """
    GET /api/exact/numbers/?start=0&end=10
    """
    query_serializer_class = RangeQuerySerializer

    def compute(self, params):
        values = default_cache.numbers_upto(params['end'])
        return {
            'numbers': [
                {'n': n, 'value': format_rational(values[n])}
                for n in range(params['start'], params['end'] + 1)
            ]
        }


class BernoulliPolynomialView(ComputationView):
    """
    GET /api/exact/polynomial/?n=3
    """
    query_serializer_class = IndexQuerySerializer

    def compute(self, params):
        poly = bernoulli_polynomial(params['n'])
        return {'n': params['n'], 'polynomial': str(poly), 'coefficients': poly.to_list()}


class BernoulliEvaluateView(ComputationView):
    """
    GET /api/exact/evaluate/?n=4&x=1/4
    """
    query_serializer_class = EvaluateQuerySerializer

    def compute(self, params):
        value = bernoulli_polynomial(params['n']).evaluate(params['x'])
        return {'n': params['n'], 'x': format_rational(params['x']), 'value': format_rational(value)}


class PowerSumView(ComputationView):
    """
    GET /api/exact/power-sum/?n=3          -> S_3 as a polynomial
    GET /api/exact/power-sum/?n=3&m=10     -> 1^3 + ... + 10^3
    """
    query_serializer_class = PowerSumQuerySerializer

    def compute(self, params):
        n = params['n']
        payload = {'n': n, 'polynomial': str(power_sum_polynomial(n))}
        if 'm' in params:
            payload['m'] = params['m']
            payload['value'] = format_rational(power_sum(n, params['m']))
        return payload


class VonStaudtClausenView(ComputationView):
    """
    GET /api/exact/von-staudt/?n=6
    """
    query_serializer_class = VonStaudtQuerySerializer
    cache_prefix = 'exact.von_staudt'

    def compute(self, params):
        primes, integer_part = von_staudt_clausen(params['n'])
        return {
            'n': params['n'],
            'b_2n': format_rational(bernoulli_number(2 * params['n'])),
            'primes': primes,
            'integer_part': str(integer_part),
        }
