import logging
import math

from mpmath import mp

from analytic_core.precision import lower, precision, setting, upper, width
from asymptotic_series.harmonic import euler_gamma
from cli.base import BernoulliCommand
from core.exceptions import PrecisionUnreachable

logger = logging.getLogger('cli')


def certified_digits(digits: int, prec: int) -> tuple[str, int]:
    """
    Euler's constant to `digits` significant digits. The precision doubles
    until both endpoints of the enclosure round to the same string.
    """
    bits = max(prec, math.ceil(digits * math.log2(10)) + 16)
    maximum = int(setting('MAX_PREC'))
    while True:
        enclosure = euler_gamma(bits)
        with precision(bits):
            lo = mp.nstr(lower(enclosure), digits, strip_zeros=False)
            hi = mp.nstr(upper(enclosure), digits, strip_zeros=False)
            if lo == hi:
                return lo, bits
            logger.debug(f"gamma at {bits} bits: {lo} vs {hi}, width {mp.nstr(width(enclosure), 3)}")
        if bits >= maximum:
            raise PrecisionUnreachable(f"gamma endpoints still disagree at {bits} bits", digits=digits)
        bits = min(2 * bits, maximum)


class Command(BernoulliCommand):
    help = "Euler's constant, with digits certified by an interval enclosure"

    def run(self, options, output, prec):
        value, bits = certified_digits(output.digits, prec)
        if output.format == 'pretty':
            return value
        return {'digits': output.digits, 'value': value, 'bits': bits}
