# asymptotic_series/views.py

from mpmath import mp

from analytic_core.precision import format_interval, precision, resolve_prec
from analytic_core.serializers import PrecisionQuerySerializer
from core.views import ComputationView
from exact_core.polynomial import format_rational

from .harmonic import euler_gamma, gamma_bounds_table, harmonic, harmonic_expansion
from .serializers import (
    ExpansionQuerySerializer,
    GammaTableQuerySerializer,
    HarmonicQuerySerializer,
    SeriesCheckQuerySerializer,
    SeriesQuerySerializer,
)
from .series import leading_terms_check, lm84_check, pr82_check, pr83_check, series_value


class HarmonicView(ComputationView):
    """
    GET /api/series/harmonic/?n=4
    """
    query_serializer_class = HarmonicQuerySerializer
    cache_prefix = 'series.harmonic'

    def compute(self, params):
        return {'n': params['n'], 'value': format_rational(harmonic(params['n']))}


class EulerGammaView(ComputationView):
    """
    GET /api/series/gamma/?prec=256
    """
    query_serializer_class = PrecisionQuerySerializer
    cache_prefix = 'series.gamma'

    def compute(self, params):
        bits = resolve_prec(params.get('prec'))
        with precision(bits):
            enclosure = euler_gamma(bits)
            return {'prec': bits, 'gamma': format_interval(enclosure, params['digits'])}


class GammaTableView(ComputationView):
    """
    GET /api/series/gamma-table/?n=1,2,4,8
    """
    query_serializer_class = GammaTableQuerySerializer

    def compute(self, params):
        rows = gamma_bounds_table(params['n'], prec=params.get('prec'))
        return {
            'rows': [
                {
                    'n': row['n'],
                    'lower': mp.nstr(row['lower'], 10, strip_zeros=False),
                    'upper': mp.nstr(row['upper'], 10, strip_zeros=False),
                }
                for row in rows
            ]
        }


class HarmonicExpansionView(ComputationView):
    """
    GET /api/series/expansion/?n=10&m=3
    """
    query_serializer_class = ExpansionQuerySerializer
    cache_prefix = 'series.expansion'

    def compute(self, params):
        expansion = harmonic_expansion(params['n'], params['m'], prec=params.get('prec'))
        with precision(params.get('prec')):
            return {
                'n': expansion.n,
                'm': expansion.m,
                'truncated_value': mp.nstr(expansion.truncated_value, params['digits']),
                'error': format_interval(expansion.error_enclosure, params['digits']),
            }


class SeriesValueView(ComputationView):
    """
    GET /api/series/value/?kind=C&p=3&tol=1e-20
    """
    query_serializer_class = SeriesQuerySerializer
    cache_prefix = 'series.value'

    def compute(self, params):
        with precision(params.get('prec')):
            result = series_value(params['kind'], params['p'], tol=params.get('tol'), prec=params.get('prec'))
            return {**result.as_dict(params['digits']), 'terms': result.terms, 'order': result.order}


class SeriesCheckView(ComputationView):
    """
    GET /api/series/check/?check=pr82&p=3&m=2
    """
    query_serializer_class = SeriesCheckQuerySerializer
    cache_prefix = 'series.check'

    def compute(self, params):
        p, m, prec = params['p'], params['m'], params.get('prec')
        check = params['check']
        if check == 'pr82':
            enclosure = pr82_check(p, m, prec=prec)
        elif check == 'pr83':
            enclosure = pr83_check(p, m, prec=prec)
        elif check == 'lm84':
            enclosure = lm84_check(p, prec=prec)
        else:
            enclosure = leading_terms_check(p, min(m - 1, 2), prec=prec)
        with precision(prec):
            return {'check': check, 'p': p, 'm': m, 'holds': True,
                    'witness': format_interval(enclosure, params['digits'])}
