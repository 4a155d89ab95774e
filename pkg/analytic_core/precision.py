# analytic_core/precision.py
"""
Working-precision management and the interval helpers every numeric module
builds on.

Point values are ``mp.mpf`` at the active precision; certified enclosures
are ``iv.mpf`` intervals with outward rounding. ``precision(prec)`` sets
both contexts at once. Every public numeric operation takes a ``prec``
argument; ``None`` inherits the enclosing block, or DEFAULT_PREC outside one.
"""

from __future__ import annotations

import logging
import random
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from typing import Callable

from django.conf import settings
from mpmath import iv, mp

from core.exceptions import BernoulliError, BoundViolation, InvalidArgument, PrecisionUnreachable
from exact_core.identities import eta_even_exact, zeta_even_exact
from exact_core.polynomial import parse_rational

logger = logging.getLogger(__name__)

DEFAULTS = {
    'DEFAULT_PREC': 256,
    'MAX_PREC': 4096,
    'GRID_POINTS': 10_000,
    'TRIG_FULL_MAX_P': 10_000,
    'TRIG_FAST_MAX_P': 1_000,
    'SWEEP_PREC': 128,
    'CACHE_TIMEOUT': 3600,
}

MIN_PREC = 64

_active_prec: ContextVar[int | None] = ContextVar("active_prec", default=None)


def setting(name: str):
    """Numeric configuration value from settings.BERNOULLI."""
    configured = getattr(settings, 'BERNOULLI', {})
    if name in configured:
        return configured[name]
    return DEFAULTS[name]


def default_prec() -> int:
    return int(setting('DEFAULT_PREC'))


def resolve_prec(prec: int | None) -> int:
    """Explicit prec, else the enclosing precision block, else DEFAULT_PREC."""
    if prec is None:
        prec = _active_prec.get() or default_prec()
    prec = int(prec)
    if prec < MIN_PREC:
        raise InvalidArgument(f"precision must be at least {MIN_PREC} bits", prec=prec)
    if prec > setting('MAX_PREC'):
        raise PrecisionUnreachable("requested precision exceeds MAX_PREC", prec=prec, max_prec=setting('MAX_PREC'))
    return prec


@contextmanager
def precision(prec: int | None = None):
    """Set the point and interval contexts to `prec` bits for the block."""
    prec = resolve_prec(prec)
    saved = iv.prec
    token = _active_prec.set(prec)
    iv.prec = prec
    try:
        with mp.workprec(prec):
            yield prec
    finally:
        iv.prec = saved
        _active_prec.reset(token)


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------

def to_mpf(value):
    """Correctly rounded point value of an int, Fraction or mpf."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def to_interval(value):
    """Interval enclosing an exact value; existing intervals pass through."""
    if isinstance(value, iv.mpf):
        return value
    if isinstance(value, Fraction):
        return iv.mpf(value.numerator) / value.denominator
    if isinstance(value, int):
        return iv.mpf(value)
    if isinstance(value, mp.mpf):
        return iv.mpf(value)
    raise InvalidArgument(f"cannot enclose {value!r}")


def lower(x):
    """Lower endpoint of an interval as an mp.mpf."""
    return mp.make_mpf(x._mpi_[0])


def upper(x):
    return mp.make_mpf(x._mpi_[1])


def midpoint(x):
    return (lower(x) + upper(x)) / 2


def width(x):
    return upper(x) - lower(x)


def hull(lo, hi):
    """Interval [lo, hi] from two point values."""
    lo, hi = to_interval(lo), to_interval(hi)
    return iv.mpf((lower(lo), upper(hi)))


def contains(x, value) -> bool:
    """True iff the interval x contains every point of `value`."""
    y = to_interval(value)
    return lower(x) <= lower(y) and upper(y) <= upper(x)


def endpoint_fractions(x) -> tuple[Fraction, Fraction]:
    """Both endpoints of x as exact Fractions."""
    return mpf_to_fraction(lower(x)), mpf_to_fraction(upper(x))


def mpf_to_fraction(value) -> Fraction:
    man, exp = mp.mpf(value).man_exp
    if exp >= 0:
        return Fraction(man * 2 ** exp)
    return Fraction(man, 2 ** -exp)


def parse_real(text: str):
    """A Fraction when the text is a rational, otherwise a decimal mp.mpf."""
    try:
        return parse_rational(text)
    except InvalidArgument:
        try:
            return mp.mpf(text)
        except (ValueError, TypeError):
            raise InvalidArgument(f"Not a real number: {text!r}")


def format_interval(x, digits: int = 20) -> dict:
    return {
        'lower': mp.nstr(lower(x), digits),
        'upper': mp.nstr(upper(x), digits),
        'width': mp.nstr(width(x), 5),
    }


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

def pi(prec: int | None = None):
    """pi correctly rounded to the working precision."""
    with precision(prec):
        return +mp.pi


def pi_interval():
    """Certified enclosure of pi at the active interval precision."""
    return +iv.pi


def zeta_even(n: int, prec: int | None = None):
    """Certified enclosure of zeta(2n) from its exact rational multiple of pi^(2n)."""
    with precision(prec):
        return to_interval(zeta_even_exact(n)) * pi_interval() ** (2 * n)


def eta_even(n: int, prec: int | None = None):
    """Certified enclosure of eta(2n) = (1 - 2^(1-2n)) zeta(2n)."""
    with precision(prec):
        return to_interval(eta_even_exact(n)) * pi_interval() ** (2 * n)


# ---------------------------------------------------------------------------
# Strict inequalities
# ---------------------------------------------------------------------------

def strict_margin_threshold(prec: int):
    return mp.ldexp(mp.mpf(1), -(prec // 2))


def certify_positive(margin: Callable[[int], object], prec: int | None = None, label: str = 'inequality',
                     error: type[BernoulliError] = BoundViolation):
    """
    Certify a strict inequality lhs > rhs.

    `margin(prec)` must return an interval enclosure of lhs - rhs computed at
    `prec` bits. The inequality holds once the lower endpoint exceeds
    2^(-prec/2); otherwise the precision is doubled up to MAX_PREC. Returns
    the final margin interval; raises `error` with the last margin.
    """
    prec = resolve_prec(prec)
    max_prec = setting('MAX_PREC')
    while True:
        with precision(prec):
            enclosure = margin(prec)
            lo = lower(enclosure)
            if lo > strict_margin_threshold(prec):
                return enclosure
            last = mp.nstr(lo, 10)
        if prec * 2 > max_prec:
            break
        logger.debug(f"{label}: margin {last} too small at {prec} bits, escalating")
        prec *= 2
    logger.error(f"{label}: strict inequality not certified, margin {last} at {prec} bits")
    raise error(f"{label} does not hold with a certified margin", margin=last, prec=prec)


# ---------------------------------------------------------------------------
# Self-checks and formatting
# ---------------------------------------------------------------------------

_INTERVAL_OPERATIONS = {
    'add': lambda a, b: a + b,
    'sub': lambda a, b: a - b,
    'mul': lambda a, b: a * b,
    'div': lambda a, b: a / b,
}


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6))


def interval_soundness_check(samples: int = 1000, seed: int = 0, prec: int | None = None) -> int:
    """
    Compare interval add, sub, mul, div and integer powers on random
    rationals against the exact rational result, `samples` cases per
    operation. Returns the number of cases checked.
    """
    rng = random.Random(seed)
    checked = 0
    with precision(prec):
        for name, operation in list(_INTERVAL_OPERATIONS.items()) + [('pow', None)]:
            for _ in range(samples):
                a, b = _random_fraction(rng), _random_fraction(rng)
                if name == 'pow':
                    k = rng.randint(0, 12)
                    exact, enclosure = a ** k, to_interval(a) ** k
                else:
                    if name == 'div' and b == 0:
                        b = Fraction(1)
                    exact, enclosure = operation(a, b), operation(to_interval(a), to_interval(b))
                lo, hi = endpoint_fractions(enclosure)
                if not lo <= exact <= hi:
                    logger.error(f"interval {name} lost {exact}")
                    raise BoundViolation(f"interval {name} does not enclose the exact result", a=a, b=b, exact=exact)
                checked += 1
    logger.debug(f"interval arithmetic sound on {checked} cases")
    return checked


def fixed_decimal(x, places: int = 10) -> str:
    """x rounded to `places` decimals, as a plain fixed-point string."""
    with mp.workprec(max(mp.prec, 64)):
        q = int(mp.nint(to_mpf(x) * 10 ** places))
    sign = '-' if q < 0 else ''
    whole, frac = divmod(abs(q), 10 ** places)
    return f"{sign}{whole}.{frac:0{places}d}"
