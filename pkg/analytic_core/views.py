# analytic_core/views.py

from mpmath import mp

from core.views import ComputationView
from exact_core.polynomial import format_rational

from .dilcher import dilcher_check, normalized_convergence_check
from .norms import b2n_two_sided_bound, find_alpha, l1_norm_enclosure, periodic_bernoulli, sup_norm_report
from .precision import format_interval, parse_real, precision
from .serializers import (
    ConvergenceQuerySerializer,
    DilcherQuerySerializer,
    NormQuerySerializer,
    PeriodicQuerySerializer,
)


class PeriodicBernoulliView(ComputationView):
    """
    GET /api/analytic/periodic/?n=3&x=-1/4
    """
    query_serializer_class = PeriodicQuerySerializer

    def compute(self, params):
        with precision(params.get('prec')):
            value = periodic_bernoulli(params['n'], parse_real(params['x']))
            return {'n': params['n'], 'x': params['x'], 'value': mp.nstr(value, params['digits'])}


class SupNormView(ComputationView):
    """
    GET /api/analytic/sup-norm/?n=2
    """
    query_serializer_class = NormQuerySerializer
    cache_prefix = 'analytic.sup_norm'

    def compute(self, params):
        digits = params['digits']
        with precision(params.get('prec')):
            report = sup_norm_report(params['n'])
            return {
                'n': report.n,
                'even_sup': format_rational(report.even_sup),
                'odd_bound': format_interval(report.odd_bound, digits),
                'odd_quarter_lower': format_interval(report.odd_quarter_lower, digits),
                'odd_grid_max': mp.nstr(report.odd_grid_max, digits),
                'odd_quarter_value': format_rational(report.odd_quarter_value),
            }


class AlphaZeroView(ComputationView):
    """
    GET /api/analytic/alpha/?n=3
    """
    query_serializer_class = NormQuerySerializer
    cache_prefix = 'analytic.alpha'

    def compute(self, params):
        with precision(params.get('prec')):
            alpha = find_alpha(params['n'])
            return {
                'n': alpha.n,
                'bracket': format_interval(alpha.bracket, params['digits']),
                'lo': format_rational(alpha.lo),
                'hi': format_rational(alpha.hi),
                'steps': alpha.steps,
            }


class L1NormView(ComputationView):
    """
    GET /api/analytic/l1-norm/?n=2
    """
    query_serializer_class = NormQuerySerializer
    cache_prefix = 'analytic.l1_norm'

    def compute(self, params):
        with precision(params.get('prec')) as bits:
            return {'n': params['n'], 'l1_norm': format_interval(l1_norm_enclosure(params['n'], bits), params['digits'])}


class B2nBoundView(ComputationView):
    """
    GET /api/analytic/b2n-bound/?n=5
    """
    query_serializer_class = NormQuerySerializer

    def compute(self, params):
        digits = params['digits']
        with precision(params.get('prec')):
            bound = b2n_two_sided_bound(params['n'])
            return {
                'n': bound.n,
                'lower': format_interval(bound.lower, digits),
                'value': format_rational(bound.value),
                'upper': format_interval(bound.upper, digits),
            }


class DilcherView(ComputationView):
    """
    GET /api/analytic/dilcher/?n=10&re=0.3&im=0
    """
    query_serializer_class = DilcherQuerySerializer

    def compute(self, params):
        digits = params['digits']
        with precision(params.get('prec')):
            report = dilcher_check(params['n'], mp.mpc(params['re'], params['im']))
            return {
                'n': report.n,
                'truncation': mp.nstr(report.truncation, digits),
                'normalized': mp.nstr(report.normalized, digits),
                'deviation': mp.nstr(report.deviation, 10),
                'bound': mp.nstr(report.bound, 10),
            }


class NormalizedConvergenceView(ComputationView):
    """
    GET /api/analytic/convergence/?n=4&grid=1000
    """
    query_serializer_class = ConvergenceQuerySerializer
    cache_prefix = 'analytic.convergence'

    def compute(self, params):
        with precision(params.get('prec')):
            deviation = normalized_convergence_check(params['n'], grid=params['grid'])
            return {
                'n': params['n'],
                'grid': params['grid'],
                'deviation': mp.nstr(deviation, 10),
                'bound': mp.nstr(mp.mpf(3) / 4 ** params['n'], 10),
            }
