# trig_sums/expansions.py
"""
Expansions of I_p and J_p in powers of 1/p, the alternating brackets that
follow from them, sweeps over p and the identities linking the trigonometric
sums to the harmonic series C_p, D_p and E_p.

With lambda_p = ln p + gamma - ln(pi/2) and mu_p = -p^2 ln p + (ln(2 pi) - gamma) p^2 - p:

    pi I_p = 2p lambda_p - sum_{k<m} 2 b_2k eta(2k)/(k p^(2k-1)) + (-1)^m 2 eta(2m)/(m p^(2m-1)) eps'
    pi J_p = mu_p - sum_{k<m} b_2k zeta(2k)/(k p^(2k-2)) + (-1)^m zeta(2m)/(m p^(2m-2)) eps

with eps, eps' in (0, |b_2m|).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from mpmath import iv, mp

from analytic_core.precision import (
    certify_positive,
    eta_even,
    lower,
    midpoint,
    pi_interval,
    precision,
    setting,
    to_interval,
    zeta_even,
)
from asymptotic_series.harmonic import euler_gamma, harmonic
from asymptotic_series.series import lm84_residual, series_C, series_D, series_E, witness_check
from core.exceptions import InvalidArgument
from exact_core.bernoulli import bernoulli_number

from .sums import agree, cot_sum, csc_sum

logger = logging.getLogger(__name__)

BRACKET_KINDS = ('I', 'J')
MAX_BRACKET_N = 10


def _require(p: int, m: int, minimum_p: int = 2):
    if p < minimum_p:
        raise InvalidArgument(f"p must be >= {minimum_p}", p=p)
    if m < 1:
        raise InvalidArgument("m must be >= 1", m=m)


def _lambda(p: int, bits: int):
    return iv.ln(p) + euler_gamma(bits) - iv.ln(pi_interval() / 2)


def _mu(p: int, bits: int):
    return -iv.mpf(p) ** 2 * iv.ln(p) + (iv.ln(2 * pi_interval()) - euler_gamma(bits)) * p ** 2 - p


def I_expansion_check(p: int, m: int, prec: int | None = None):
    """
    Certify eps'_{p,m} in (0, |b_2m|) and the n = 0 bracket
    2p lambda_p/pi - pi/(36p) < I_p < 2p lambda_p/pi. Returns eps'.
    """
    _require(p, m)

    def epsilon(bits):
        partial = iv.mpf(0)
        for k in range(1, m):
            partial += to_interval(2 * bernoulli_number(2 * k) / (k * Fraction(p) ** (2 * k - 1))) * eta_even(k)
        residual = pi_interval() * csc_sum(p) - 2 * p * _lambda(p, bits) + partial
        return (-1) ** m * residual * to_interval(m * Fraction(p) ** (2 * m - 1)) / (2 * eta_even(m))

    witness = witness_check(f"I_{p} order {m} expansion", epsilon, m, prec)
    cor94_bracket(p, 0, prec=prec)
    return witness


def J_expansion_check(p: int, m: int, prec: int | None = None):
    """
    Certify eps_{p,m} in (0, |b_2m|) and the n = 0 bracket
    0 < mu_p/pi - J_p < pi/36. Returns eps.
    """
    _require(p, m)

    def epsilon(bits):
        partial = iv.mpf(0)
        for k in range(1, m):
            partial += to_interval(bernoulli_number(2 * k) / (k * Fraction(p) ** (2 * k - 2))) * zeta_even(k)
        residual = pi_interval() * cot_sum(p) - _mu(p, bits) + partial
        return (-1) ** m * residual * to_interval(m * Fraction(p) ** (2 * m - 2)) / zeta_even(m)

    witness = witness_check(f"J_{p} order {m} expansion", epsilon, m, prec)
    cor97_bracket(p, 0, prec=prec)
    return witness


def pr72_expansion_check(p: int, m: int, prec: int | None = None):
    """
    theta_{p,m} in

        J_p = -p^2 H_p/pi + ln(2 pi) p^2/pi - p/(2 pi)
              - sum_{k<m} b_2k (1 + 2 zeta(2k))/(2 pi k p^(2k-2)) + (-1)^m theta/p^(2m-2),

    certified inside (0, |b_2m| (1 + 2 zeta(2m))/(2 pi m)).
    """
    _require(p, m, minimum_p=1)

    def theta(bits):
        pi = pi_interval()
        main = (-to_interval(harmonic(p)) * p ** 2 + iv.ln(2 * pi) * p ** 2 - iv.mpf(p) / 2) / pi
        for k in range(1, m):
            weight = to_interval(bernoulli_number(2 * k) / (2 * k * Fraction(p) ** (2 * k - 2)))
            main -= weight * (1 + 2 * zeta_even(k)) / pi
        return (-1) ** m * (cot_sum(p) - main) * to_interval(Fraction(p) ** (2 * m - 2))

    def bound(bits):
        return to_interval(abs(bernoulli_number(2 * m)) / (2 * m)) * (1 + 2 * zeta_even(m)) / pi_interval()

    return witness_check(f"J_{p} harmonic-number expansion order {m}", theta, m, prec, bound=bound)


# ---------------------------------------------------------------------------
# Alternating brackets
# ---------------------------------------------------------------------------

@dataclass
class Bracket:
    """lower < value < upper, margin = min(value - lower, upper - value)."""
    kind: str
    p: int
    n: int
    value: object
    lower: object
    upper: object
    margin: object

    def as_row(self, digits: int = 20) -> dict:
        return {
            'p': self.p,
            'value': mp.nstr(midpoint(self.value), digits),
            'lower': mp.nstr(midpoint(self.lower), digits),
            'upper': mp.nstr(midpoint(self.upper), digits),
            'margin': mp.nstr(lower(self.margin), 6),
        }


def _i_correction(k: int, p: int):
    coefficient = (-1) ** k * (2 ** (2 * k) - 2) * bernoulli_number(2 * k) ** 2 / (k * factorial(2 * k))
    return to_interval(coefficient) * (pi_interval() / p) ** (2 * k - 1)


def _j_correction(k: int, p: int):
    coefficient = (-1) ** k * bernoulli_number(2 * k) ** 2 / (k * factorial(2 * k))
    pi = pi_interval()
    return 2 * pi * to_interval(coefficient) * (2 * pi / p) ** (2 * k - 2)


def _bracket_parts(kind: str, p: int, n: int, bits: int):
    if kind == 'I':
        value = csc_sum(p)
        base = 2 * p * _lambda(p, bits) / pi_interval()
        correction = _i_correction
    else:
        value = cot_sum(p)
        base = _mu(p, bits) / pi_interval()
        correction = _j_correction
    upper_bound = base + sum((correction(k, p) for k in range(1, 2 * n + 1)), iv.mpf(0))
    lower_bound = upper_bound + correction(2 * n + 1, p)
    return value, lower_bound, upper_bound


def alternating_bracket(kind: str, p: int, n: int, prec: int | None = None) -> Bracket:
    """
    The truncations after 2n and 2n + 1 correction terms bound I_p (or J_p)
    from above and below respectively; both sides are certified strict.
    """
    if kind not in BRACKET_KINDS:
        raise InvalidArgument(f"no bracket for {kind!r}", known=', '.join(BRACKET_KINDS))
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    if not 0 <= n <= MAX_BRACKET_N:
        raise InvalidArgument(f"n must lie in 0..{MAX_BRACKET_N}", n=n)
    label = f"{kind}_{p} bracket n={n}"
    below = certify_positive(lambda bits: _difference(kind, p, n, bits, upper_side=False), prec=prec,
                             label=f"{label} lower")
    above = certify_positive(lambda bits: _difference(kind, p, n, bits, upper_side=True), prec=prec,
                             label=f"{label} upper")
    with precision(prec) as bits:
        value, lower_bound, upper_bound = _bracket_parts(kind, p, n, bits)
        margin = below if lower(below) < lower(above) else above
        return Bracket(kind=kind, p=p, n=n, value=value, lower=lower_bound, upper=upper_bound, margin=margin)


def _difference(kind: str, p: int, n: int, bits: int, upper_side: bool):
    value, lower_bound, upper_bound = _bracket_parts(kind, p, n, bits)
    return upper_bound - value if upper_side else value - lower_bound


def cor94_bracket(p: int, n: int = 0, prec: int | None = None) -> Bracket:
    """Alternating bracket of I_p; n = 0 gives 2p lambda_p/pi - pi/(36p) < I_p < 2p lambda_p/pi."""
    return alternating_bracket('I', p, n, prec)


def cor97_bracket(p: int, n: int = 0, prec: int | None = None) -> Bracket:
    """Alternating bracket of J_p; n = 0 gives 0 < mu_p/pi - J_p < pi/36."""
    return alternating_bracket('J', p, n, prec)


def _sweep(kind: str, max_p: int, n: int, start: int, prec):
    if max_p < start:
        raise InvalidArgument("max_p must be at least the first p", max_p=max_p, start=start)
    prec = setting('SWEEP_PREC') if prec is None else prec
    rows = []
    for p in range(start, max_p + 1):
        rows.append(alternating_bracket(kind, p, n, prec=prec).as_row())
    logger.info(f"{kind} bracket n={n} holds for p={start}..{max_p}")
    return rows


def I_sweep(max_p: int, n: int = 0, start: int = 1, prec: int | None = None) -> list[dict]:
    """CSV-ready rows (p, value, lower, upper, margin) of the I_p bracket for p = start..max_p."""
    return _sweep('I', max_p, n, start, prec)


def J_sweep(max_p: int, n: int = 0, start: int = 1, prec: int | None = None) -> list[dict]:
    """CSV-ready rows (p, value, lower, upper, margin) of the J_p bracket for p = start..max_p."""
    return _sweep('J', max_p, n, start, prec)


# ---------------------------------------------------------------------------
# Links to the harmonic series
# ---------------------------------------------------------------------------

def rm98_identity_suite(p: int, prec: int | None = None) -> bool:
    """
    D_p = (ln(pi/2) - gamma - ln p)/2 + ln 2/(2p) + pi I_p/(4p)
    E_p = ln 2/p + pi I_p/(2p)
    C_p = (ln p + gamma - ln(2 pi))/2 + 1/(2p) + pi J_p/(2p^2)
    I_p = -2 ln 2/pi + 2p E_p/pi = -2 ln 2/pi + 2p lambda_p/pi + 4p D_p/pi
    pi J_p = mu_p + 2p^2 C_p

    The series are summed independently of the trigonometric sums, so each
    relation is checked between two certified enclosures.
    """
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    with precision(prec) as bits:
        c = series_C(p, prec=bits).value
        d = series_D(p, prec=bits).value
        e = series_E(p, prec=bits, cross_check=False).value
        i, j = csc_sum(p), cot_sum(p)
        pi, gamma, ln2 = pi_interval(), euler_gamma(bits), iv.ln2
        terms = 2 * p
        lm84_residual(p, e, d, bits)
        agree(f"D_{p} in terms of I_{p}", d,
              (iv.ln(pi / 2) - gamma - iv.ln(p)) / 2 + ln2 / (2 * p) + pi * i / (4 * p), bits, terms=terms)
        agree(f"E_{p} in terms of I_{p}", e, ln2 / p + pi * i / (2 * p), bits, terms=terms)
        agree(f"C_{p} in terms of J_{p}", c,
              (iv.ln(p) + gamma - iv.ln(2 * pi)) / 2 + iv.mpf(1) / (2 * p) + pi * j / (2 * iv.mpf(p) ** 2),
              bits, terms=terms)
        agree(f"I_{p} from E_{p}", i, -2 * ln2 / pi + 2 * p * e / pi, bits, terms=terms)
        agree(f"I_{p} from D_{p}", i, -2 * ln2 / pi + 2 * p * _lambda(p, bits) / pi + 4 * p * d / pi, bits,
              terms=terms)
        agree(f"J_{p} from C_{p}", pi * j, _mu(p, bits) + 2 * iv.mpf(p) ** 2 * c, bits, terms=terms)
    logger.debug(f"series and trigonometric sums agree at p={p}")
    return True


def asymptotic_ratio(p: int, prec: int | None = None):
    """I_p / (2p ln p/pi); tends to 1 slowly. Not certified."""
    if p < 2:
        raise InvalidArgument("p must be >= 2", p=p)
    with precision(prec):
        return midpoint(csc_sum(p)) * mp.pi / (2 * p * mp.log(p))
