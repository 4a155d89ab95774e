# asymptotic_series/harmonic.py
"""
Harmonic numbers, their asymptotic expansion and a self-contained enclosure
of Euler's constant.

For every n >= 1 and m >= 1,

    0 < (-1)^m (H_n - ln n - gamma - 1/(2n) + sum_{k<m} b_2k/(2k n^2k)) < |b_2m|/(2m n^2m),

so evaluating the bracket at one (n, m) encloses gamma to the width of the
right-hand side.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mp

from analytic_core.precision import (
    certify_positive,
    contains,
    hull,
    midpoint,
    precision,
    resolve_prec,
    setting,
    to_interval,
    width,
)
from core.exceptions import InvalidArgument, PrecisionUnreachable, SandwichViolation
from exact_core.bernoulli import bernoulli_number

logger = logging.getLogger(__name__)

GAMMA_N_CANDIDATES = (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5)
GAMMA_MAX_M = 200
GUARD_BITS = 32


def work_prec(bits: int) -> int:
    """bits plus guard bits, capped at MAX_PREC."""
    return min(bits + GUARD_BITS, int(setting('MAX_PREC')))


def _split_sum(a: int, b: int) -> tuple[int, int]:
    # sum_{a <= k < b} 1/k as numerator, denominator
    if b - a == 1:
        return 1, a
    mid = (a + b) // 2
    p1, q1 = _split_sum(a, mid)
    p2, q2 = _split_sum(mid, b)
    return p1 * q2 + p2 * q1, q1 * q2


@lru_cache(maxsize=1024)
def harmonic(n: int) -> Fraction:
    """H_n exactly; H_0 = 0."""
    if n < 0:
        raise InvalidArgument("harmonic index must be >= 0", n=n)
    if n == 0:
        return Fraction(0)
    return Fraction(*_split_sum(1, n + 1))


def harmonic_block(p: int, n: int) -> Fraction:
    """H_{p(n+1)} - H_{pn} = sum_{j=1}^{p} 1/(pn + j)."""
    if p < 1 or n < 0:
        raise InvalidArgument("need p >= 1 and n >= 0", p=p, n=n)
    return Fraction(*_split_sum(p * n + 1, p * (n + 1) + 1))


def harmonic_interval(n: int, start: int = 0):
    """Enclosure of sum_{start < k <= n} 1/k, summed in ascending order."""
    total = iv.mpf(0)
    for k in range(start + 1, n + 1):
        total += iv.mpf(1) / k
    return total


def expansion_partial(n: int, m: int) -> Fraction:
    """sum_{k<m} b_2k/(2k n^2k)."""
    return sum((bernoulli_number(2 * k) / (2 * k * Fraction(n) ** (2 * k)) for k in range(1, m)), Fraction(0))


def expansion_bound(n: int, m: int) -> Fraction:
    """|b_2m|/(2m n^2m), the width of the order-m bracket."""
    return abs(bernoulli_number(2 * m)) / (2 * m * Fraction(n) ** (2 * m))


# ---------------------------------------------------------------------------
# Euler's constant
# ---------------------------------------------------------------------------

def gamma_parameters(prec: int) -> tuple[int, int]:
    """First (n, m) whose bracket width is below 2^(-prec-2)."""
    target = Fraction(1, 2 ** (prec + 2))
    for n in GAMMA_N_CANDIDATES:
        for m in range(1, GAMMA_MAX_M + 1):
            if expansion_bound(n, m) < target:
                return n, m
    raise PrecisionUnreachable("no (n, m) brackets gamma this tightly", prec=prec,
                               max_n=GAMMA_N_CANDIDATES[-1], max_m=GAMMA_MAX_M)


@lru_cache(maxsize=32)
def _euler_gamma(bits: int):
    n, m = gamma_parameters(bits)
    logger.debug(f"gamma at {bits} bits from n={n}, m={m}")
    with precision(work_prec(bits)):
        centre = (harmonic_interval(n) - iv.ln(n) - to_interval(Fraction(1, 2 * n))
                  + to_interval(expansion_partial(n, m)))
        spread = to_interval(expansion_bound(n, m))
        # gamma = centre - (-1)^m r with 0 < r < spread
        if m % 2 == 0:
            enclosure = hull(centre.a - spread, centre.b)
        else:
            enclosure = hull(centre.a, centre.b + spread)
        if width(enclosure) > mp.ldexp(1, -bits + 4):
            raise PrecisionUnreachable("gamma enclosure too wide", prec=bits, width=width(enclosure))
        return enclosure


def euler_gamma(prec: int | None = None):
    """Certified interval containing Euler's constant, of width <= 2^(-prec+4)."""
    return _euler_gamma(resolve_prec(prec))


def gamma_bounds_table(n_list, prec: int | None = None) -> list[dict]:
    """
    Rows (n, gamma_n^-, gamma_n^+) with

        gamma_n^+ = H_n - ln n - 1/(2n) + 1/(12 n^2),  gamma_n^- = gamma_n^+ - 1/(120 n^4).
    """
    rows = []
    with precision(prec):
        for n in n_list:
            if n < 1:
                raise InvalidArgument("n must be >= 1", n=n)
            exact = harmonic(n) - Fraction(1, 2 * n) + Fraction(1, 12 * n * n)
            upper = mp.mpf(exact.numerator) / exact.denominator - mp.log(n)
            lower = upper - mp.mpf(1) / (120 * mp.mpf(n) ** 4)
            rows.append({'n': n, 'lower': lower, 'upper': upper})
    return rows


# ---------------------------------------------------------------------------
# Truncated expansions
# ---------------------------------------------------------------------------

@dataclass
class HarmonicExpansion:
    """
    truncated_value = ln n + gamma + 1/(2n) - sum_{k<m} b_2k/(2k n^2k);
    error_enclosure encloses H_n - truncated_value.
    """
    n: int
    m: int
    truncated_value: object
    error_enclosure: object
    gamma_used: object


def _truncation(n: int, m: int, bits: int):
    return (iv.ln(n) + euler_gamma(bits) + to_interval(Fraction(1, 2 * n))
            - to_interval(expansion_partial(n, m)))


def harmonic_expansion(n: int, m: int, prec: int | None = None) -> HarmonicExpansion:
    """Order-m expansion of H_n with the sign and size of its error certified."""
    if n < 1 or m < 1:
        raise InvalidArgument("need n >= 1 and m >= 1", n=n, m=m)
    sign = (-1) ** m
    bound = expansion_bound(n, m)

    def signed_error(bits):
        return sign * (to_interval(harmonic(n)) - _truncation(n, m, bits))

    label = f"H_{n} order {m} expansion"
    certify_positive(signed_error, prec=prec, label=label, error=SandwichViolation)
    certify_positive(lambda bits: to_interval(bound) - signed_error(bits), prec=prec, label=label,
                     error=SandwichViolation)

    with precision(prec) as bits:
        truncated = _truncation(n, m, bits)
        return HarmonicExpansion(
            n=n,
            m=m,
            truncated_value=midpoint(truncated),
            error_enclosure=to_interval(harmonic(n)) - truncated,
            gamma_used=midpoint(euler_gamma(bits)),
        )


def harmonic_bracket_check(n: int, m: int, prec: int | None = None):
    """
    The order-m and order-(m+1) truncations lie on opposite sides of H_n.
    Returns the interval between them.
    """
    below, above = harmonic_expansion(n, m, prec), harmonic_expansion(n, m + 1, prec)
    if m % 2:
        # odd m: H_n lies below the order-m truncation
        below, above = above, below
    with precision(prec):
        return hull(below.truncated_value, above.truncated_value)


def harmonic_nesting_check(n: int, max_m: int = 6, prec: int | None = None) -> list:
    """
    Successive brackets [order m, order m + 1] around H_n are nested for
    m < max_m. Returns the brackets, outermost first.
    """
    if max_m < 2:
        raise InvalidArgument("need max_m >= 2", max_m=max_m)
    brackets = [harmonic_bracket_check(n, m, prec) for m in range(1, max_m)]
    for m, (outer, inner) in enumerate(zip(brackets, brackets[1:]), start=1):
        if not contains(outer, inner):
            logger.error(f"H_{n}: order {m + 1} bracket leaves the order {m} bracket")
            raise SandwichViolation(f"H_{n} truncation brackets are not nested", n=n, m=m)
    return brackets
