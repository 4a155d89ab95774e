# trig_sums/views.py

from analytic_core.precision import format_interval, precision
from core.views import ComputationView

from .expansions import (
    I_expansion_check,
    I_sweep,
    J_expansion_check,
    J_sweep,
    alternating_bracket,
    pr72_expansion_check,
    rm98_identity_suite,
)
from .serializers import (
    BracketQuerySerializer,
    ExpansionCheckQuerySerializer,
    IdentityQuerySerializer,
    SweepQuerySerializer,
    TrigSumQuerySerializer,
)
from .sums import identity_suite, trig_sum

EXPANSION_CHECKS = {'I': I_expansion_check, 'J': J_expansion_check, 'pr72': pr72_expansion_check}


class TrigSumView(ComputationView):
    """
    GET /api/trig/sum/?kind=I&p=3
    """
    query_serializer_class = TrigSumQuerySerializer
    cache_prefix = 'trig.sum'

    def compute(self, params):
        result = trig_sum(params['kind'], params['p'], prec=params.get('prec'))
        with precision(params.get('prec')):
            return result.as_dict(params['digits'])


class IdentityView(ComputationView):
    """
    GET /api/trig/identities/?p=7
    GET /api/trig/identities/?p=3&relations=series
    """
    query_serializer_class = IdentityQuerySerializer
    cache_prefix = 'trig.identities'

    def compute(self, params):
        suite = rm98_identity_suite if params['relations'] == 'series' else identity_suite
        return {'p': params['p'], 'relations': params['relations'], 'holds': suite(params['p'], prec=params.get('prec'))}


class ExpansionCheckView(ComputationView):
    """
    GET /api/trig/expansion/?check=I&p=5&m=1
    """
    query_serializer_class = ExpansionCheckQuerySerializer
    cache_prefix = 'trig.expansion'

    def compute(self, params):
        witness = EXPANSION_CHECKS[params['check']](params['p'], params['m'], prec=params.get('prec'))
        with precision(params.get('prec')):
            return {
                'check': params['check'],
                'p': params['p'],
                'm': params['m'],
                'holds': True,
                'witness': format_interval(witness, params['digits']),
            }


class BracketView(ComputationView):
    """
    GET /api/trig/bracket/?kind=I&p=100&n=1
    """
    query_serializer_class = BracketQuerySerializer
    cache_prefix = 'trig.bracket'

    def compute(self, params):
        bracket = alternating_bracket(params['kind'], params['p'], params['n'], prec=params.get('prec'))
        with precision(params.get('prec')):
            return {'kind': bracket.kind, 'n': bracket.n, **bracket.as_row(params['digits'])}


class SweepView(ComputationView):
    """
    GET /api/trig/sweep/?kind=J&max_p=50
    """
    query_serializer_class = SweepQuerySerializer
    cache_prefix = 'trig.sweep'

    def compute(self, params):
        sweep = I_sweep if params['kind'] == 'I' else J_sweep
        rows = sweep(params['max_p'], n=params['n'], prec=params.get('prec'))
        return {'kind': params['kind'], 'n': params['n'], 'rows': rows}
