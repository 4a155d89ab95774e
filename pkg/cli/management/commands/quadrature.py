from mpmath import mp

from analytic_core.precision import precision
from cli.base import BernoulliCommand
from core.exceptions import InvalidArgument
from euler_maclaurin.integrands import get_integrand
from exact_core.polynomial import parse_rational
from quadrature.expansions import convergence_table
from quadrature.rules import RuleId, pullback

MAX_PANELS = 1 << 20


def parse_p_range(text: str) -> list[int]:
    """'N', 'A:B' (step 1), 'A:B:K' (step K) or 'A:B:xK' (multiply by K)."""
    parts = text.split(':')
    try:
        if len(parts) == 1:
            values = [int(parts[0])]
        elif len(parts) in (2, 3):
            start, stop = int(parts[0]), int(parts[1])
            step = parts[2] if len(parts) == 3 else '1'
            values = []
            if step.startswith('x'):
                factor = int(step[1:])
                if factor < 2:
                    raise InvalidArgument("multiplicative step must be >= 2", p=text)
                p = start
                while p <= stop:
                    values.append(p)
                    p *= factor
            else:
                if int(step) < 1:
                    raise InvalidArgument("step must be >= 1", p=text)
                values = list(range(start, stop + 1, int(step)))
        else:
            raise InvalidArgument(f"bad p range {text!r}")
    except ValueError:
        raise InvalidArgument(f"bad p range {text!r}")
    if not values or values[0] < 1 or values[-1] > MAX_PANELS:
        raise InvalidArgument(f"p range must lie in 1..{MAX_PANELS}", p=text)
    return values


def parse_interval(text: str):
    lo, sep, hi = text.partition(':')
    if not sep:
        raise InvalidArgument(f"interval must look like a:b, got {text!r}")
    return parse_rational(lo), parse_rational(hi)


class Command(BernoulliCommand):
    help = 'Convergence table of a quadrature rule, as CSV for plotting'
    default_format = 'csv'

    def add_command_arguments(self, parser):
        parser.add_argument('--rule', default='trapezoid', help="midpoint, trapezoid, simpson, gauss2 or romberg:L")
        parser.add_argument('--fn', default='exp', help="exp, reciprocal1p, cos2pi, log1p or poly:<coefficients>")
        parser.add_argument('--p', default='1:64:x2', help="panel counts, e.g. 1:64:x2")
        parser.add_argument('--interval', default=None, help="integrate over a:b instead of [0, 1]")

    def run(self, options, output, prec):
        rule = RuleId.parse(options['rule'])
        f = get_integrand(options['fn'])
        if options['interval']:
            f = pullback(f, *parse_interval(options['interval']))
        rows = convergence_table(rule, f, parse_p_range(options['p']), prec=prec)
        digits = output.digits
        with precision(prec):
            return [
                {
                    'rule': row['rule'],
                    'p': row['p'],
                    'value': mp.nstr(row['value'], digits),
                    'error': mp.nstr(row['error'], digits),
                    'scaled_error': mp.nstr(row['scaled_error'], digits),
                    'measured_order': None if row['measured_order'] is None else mp.nstr(row['measured_order'], 8),
                }
                for row in rows
            ]
