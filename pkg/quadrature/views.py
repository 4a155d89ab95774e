# quadrature/views.py

from mpmath import mp

from analytic_core.precision import format_interval, precision
from core.views import ComputationView
from euler_maclaurin.integrands import get_integrand
from exact_core.polynomial import format_rational

from .expansions import convergence_table, error_expansion, order_limit_check, trapezoid_monotone_remainder
from .romberg import q_binomial, romberg_expansion_check
from .rules import apply_rule
from .serializers import (
    ApplyRuleQuerySerializer,
    ConvergenceQuerySerializer,
    ExpansionQuerySerializer,
    MonotoneRemainderQuerySerializer,
    OrderLimitQuerySerializer,
    QBinomialQuerySerializer,
    RombergQuerySerializer,
)


def _nstr(value, digits):
    return None if value is None else mp.nstr(value, digits)


class ApplyRuleView(ComputationView):
    """
    GET /api/quadrature/apply/?rule=simpson&f=exp&p=4
    """
    query_serializer_class = ApplyRuleQuerySerializer

    def compute(self, params):
        f = get_integrand(params['f'])
        rule = params['rule']
        with precision(params.get('prec')):
            value = apply_rule(rule, f, params['p'])
            return {'rule': str(rule), 'f': f.name, 'p': params['p'], 'value': mp.nstr(value, params['digits'])}


class ExpansionView(ComputationView):
    """
    GET /api/quadrature/expansion/?rule=gauss2&f=exp&m=6
    """
    query_serializer_class = ExpansionQuerySerializer
    cache_prefix = 'quadrature.expansion'

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            expansion = error_expansion(params['rule'], f, params['m'])
            return {
                'rule': str(expansion.rule),
                'f': f.name,
                'truncation_order': expansion.truncation_order,
                'terms': [{'power': j, 'coefficient': mp.nstr(c, params['digits'])} for j, c in expansion.terms],
            }


class OrderLimitView(ComputationView):
    """
    GET /api/quadrature/order-limit/?rule=midpoint&f=exp&p=8,16,32
    """
    query_serializer_class = OrderLimitQuerySerializer
    cache_prefix = 'quadrature.order_limit'

    def compute(self, params):
        f = get_integrand(params['f'])
        rule = params['rule']
        with precision(params.get('prec')):
            limit = order_limit_check(rule, f, params['p'])
            return {'rule': str(rule), 'f': f.name, 'order': rule.order, 'limit': mp.nstr(limit, params['digits'])}


class ConvergenceView(ComputationView):
    """
    GET /api/quadrature/convergence/?rule=romberg:1&f=log1p&p=1,2,4,8
    """
    query_serializer_class = ConvergenceQuerySerializer
    cache_prefix = 'quadrature.convergence'

    def compute(self, params):
        f = get_integrand(params['f'])
        digits = params['digits']
        with precision(params.get('prec')):
            rows = convergence_table(params['rule'], f, params['p'])
            return {
                'f': f.name,
                'rows': [
                    {
                        'rule': row['rule'],
                        'p': row['p'],
                        'value': mp.nstr(row['value'], digits),
                        'error': mp.nstr(row['error'], 10),
                        'scaled_error': mp.nstr(row['scaled_error'], 10),
                        'measured_order': _nstr(row['measured_order'], 6),
                    }
                    for row in rows
                ],
            }


class RombergCheckView(ComputationView):
    """
    GET /api/quadrature/romberg/?f=exp&p=1&level=2&m=6
    """
    query_serializer_class = RombergQuerySerializer
    cache_prefix = 'quadrature.romberg'

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            residual = romberg_expansion_check(f, params['p'], params['level'], params['m'])
            return {
                'f': f.name,
                'p': params['p'],
                'level': params['level'],
                'm': params['m'],
                'residual': format_interval(residual, params['digits']),
            }


class QBinomialView(ComputationView):
    """
    GET /api/quadrature/q-binomial/?n=3&m=2&q=1/4
    """
    query_serializer_class = QBinomialQuerySerializer

    def compute(self, params):
        value = q_binomial(params['n'], params['m'], params['q'])
        return {'n': params['n'], 'm': params['m'], 'q': format_rational(params['q']), 'value': format_rational(value)}


class MonotoneRemainderView(ComputationView):
    """
    GET /api/quadrature/monotone-remainder/?f=log1p&p=4&m=1
    """
    query_serializer_class = MonotoneRemainderQuerySerializer

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            enclosure = trapezoid_monotone_remainder(f, params['p'], params['m'])
            return {'f': f.name, 'p': params['p'], 'm': params['m'],
                    'remainder': format_interval(enclosure, params['digits'])}
