# euler_maclaurin/views.py

from mpmath import mp

from analytic_core.precision import format_interval, parse_real, precision
from core.views import ComputationView

from .integrands import get_integrand, validate_integrand
from .serializers import (
    CompositeMeanQuerySerializer,
    DecayQuerySerializer,
    IdentityQuerySerializer,
    IntegrandQuerySerializer,
    SignedRemainderQuerySerializer,
)
from .summation import composite_mean, decay_check, em_identity_check, signed_remainder_cor61


class CompositeMeanView(ComputationView):
    """
    GET /api/em/composite-mean/?f=exp&p=7&x=3/10
    """
    query_serializer_class = CompositeMeanQuerySerializer

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            value = composite_mean(f, params['p'], parse_real(params['x']))
            return {'f': f.name, 'p': params['p'], 'x': params['x'], 'value': mp.nstr(value, params['digits'])}


class IdentityCheckView(ComputationView):
    """
    GET /api/em/identity/?f=exp&p=8&m=3&x=0
    """
    query_serializer_class = IdentityQuerySerializer
    cache_prefix = 'em.identity'

    def compute(self, params):
        digits = params['digits']
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            result = em_identity_check(f, params['p'], params['m'], parse_real(params['x']))
            return {
                'f': f.name,
                'p': result.p,
                'm': result.m,
                'x': params['x'],
                'estimate': mp.nstr(result.estimate, digits),
                'correction_terms': [mp.nstr(t, digits) for t in result.correction_terms],
                'remainder': format_interval(result.remainder, digits),
                'integral': mp.nstr(result.integral, digits),
                'bound': mp.nstr(result.bound, 10),
                'discrepancy': mp.nstr(result.discrepancy, 5),
            }


class DecayView(ComputationView):
    """
    GET /api/em/decay/?f=exp&m=2&p=4,8,16,32
    """
    query_serializer_class = DecayQuerySerializer
    cache_prefix = 'em.decay'

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            scaled = decay_check(f, params['m'], parse_real(params['x']), params['p'])
            return {
                'f': f.name,
                'm': params['m'],
                'rows': [{'p': p, 'scaled_remainder': mp.nstr(v, 12)} for p, v in zip(params['p'], scaled)],
            }


class SignedRemainderView(ComputationView):
    """
    GET /api/em/signed-remainder/?f=log1p&m=2
    """
    query_serializer_class = SignedRemainderQuerySerializer

    def compute(self, params):
        f = get_integrand(params['f'])
        with precision(params.get('prec')):
            enclosure = signed_remainder_cor61(f, params['m'])
            return {'f': f.name, 'm': params['m'], 'remainder': format_interval(enclosure, params['digits'])}


class ValidateIntegrandView(ComputationView):
    """
    GET /api/em/validate/?f=poly:0,0,1
    """
    query_serializer_class = IntegrandQuerySerializer
    cache_prefix = 'em.validate'

    def compute(self, params):
        f = get_integrand(params['f'])
        validate_integrand(f, prec=params.get('prec'))
        return {'f': f.name, 'valid': True, 'max_order': f.max_order, 'monotone_orders': sorted(f.monotone_flags)}
