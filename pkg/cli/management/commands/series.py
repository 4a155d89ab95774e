from mpmath import mp

from asymptotic_series.series import SERIES_KINDS, series_value
from cli.base import BernoulliCommand
from core.exceptions import InvalidArgument


def parse_tol(text):
    if text is None:
        return None
    try:
        tol = mp.mpf(text)
    except (ValueError, TypeError):
        raise InvalidArgument(f"bad tolerance {text!r}")
    if not tol > 0:
        raise InvalidArgument("tolerance must be positive", tol=text)
    return tol


class Command(BernoulliCommand):
    help = 'Certified enclosure of C_p, D_p or E_p'
    default_format = 'json'

    def add_command_arguments(self, parser):
        parser.add_argument('kind', choices=SERIES_KINDS)
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--tol', default=None, help='Target enclosure width, e.g. 1e-40')

    def run(self, options, output, prec):
        result = series_value(options['kind'], options['p'], tol=parse_tol(options['tol']), prec=prec)
        return result.as_dict(output.digits)
