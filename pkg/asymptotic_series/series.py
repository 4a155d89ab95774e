# asymptotic_series/series.py
"""
The series

    C_p = sum_{n>=1} (H_pn - ln(pn) - gamma - 1/(2pn))
    D_p = sum_{n>=1} (-1)^(n-1) (H_pn - ln(pn) - gamma)
    E_p = sum_{n>=0} (-1)^n (H_p(n+1) - H_pn)

as certified enclosures, and the checks of their expansions in 1/p.

C_p and D_p are summed directly up to N; each tail term is split with the
harmonic bracket at an order chosen so the remainder part is negligible,
which leaves zeta(2k) - H_N^(2k) and eta(2k) minus its partial sums. E_p is
summed in pairs u_k = t_2k - t_2k+1 whose smooth extension is completely
monotone, so its tail is certified by the Euler-Maclaurin tail sum.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp

from analytic_core.precision import (
    certify_positive,
    eta_even,
    lower,
    pi_interval,
    precision,
    to_interval,
    upper,
    width,
    zeta_even,
)
from core.exceptions import IdentityViolation, InvalidArgument, SandwichViolation, ToleranceFailure
from euler_maclaurin.summation import MonotoneTerms, monotone_tail_sum
from exact_core.bernoulli import bernoulli_number

from .harmonic import euler_gamma, expansion_bound, work_prec

logger = logging.getLogger(__name__)

DEFAULT_TERMS = 1000
DEFAULT_PAIRS = 64
MAX_TAIL_ORDER = 150
SERIES_KINDS = ('C', 'D', 'E')


@dataclass
class SeriesValue:
    kind: str
    p: int
    value: object
    terms: int
    order: int

    def as_dict(self, digits: int = 30) -> dict:
        return {
            'kind': self.kind,
            'p': self.p,
            'lo': mp.nstr(lower(self.value), digits),
            'hi': mp.nstr(upper(self.value), digits),
        }


def _check(p: int, terms: int | None, order: int | None, default: int) -> int:
    if p < 1:
        raise InvalidArgument("p must be >= 1", p=p)
    if order is not None and not 1 <= order <= MAX_TAIL_ORDER:
        raise InvalidArgument(f"tail order must lie in 1..{MAX_TAIL_ORDER}", order=order)
    terms = default if terms is None else terms
    if terms < 1:
        raise InvalidArgument("term budget must be >= 1", terms=terms)
    return terms


def _target(tol, bits: int):
    return mp.mpf(tol) if tol is not None else mp.ldexp(1, -bits)


def _finish(kind: str, p: int, value, terms: int, order: int, tol) -> SeriesValue:
    if tol is not None and width(value) >= mp.mpf(tol):
        raise ToleranceFailure(f"{kind}_{p} enclosure wider than the tolerance",
                               width=width(value), tol=tol, terms=terms, order=order)
    logger.debug(f"{kind}_{p}: N={terms}, order={order}, width={mp.nstr(width(value), 5)}")
    return SeriesValue(kind=kind, p=p, value=value, terms=terms, order=order)


# ---------------------------------------------------------------------------
# C_p and D_p
# ---------------------------------------------------------------------------

def _direct_sum(p: int, terms: int, gamma, alternating: bool):
    """sum_{n<=N} s_n (H_pn - ln(pn) - gamma - 1/(2pn)), s_n = 1 or (-1)^(n-1)."""
    total = iv.mpf(0)
    h = iv.mpf(0)
    for n in range(1, terms + 1):
        for j in range(p * (n - 1) + 1, p * n + 1):
            h += iv.mpf(1) / j
        term = h - iv.ln(p * n) - gamma - iv.mpf(1) / (2 * p * n)
        total = total - term if alternating and n % 2 == 0 else total + term
    return total


class _PowerTails:
    """zeta(2k) - sum_{n<=N} n^-2k and eta(2k) - sum_{n<=N} (-1)^(n-1) n^-2k, computed on demand."""

    def __init__(self, terms: int):
        self.terms = terms
        self._plain = {}
        self._alternating = {}

    def _partial(self, k: int):
        if k not in self._plain:
            plain, alternating = iv.mpf(0), iv.mpf(0)
            for n in range(1, self.terms + 1):
                value = iv.mpf(1) / iv.mpf(n) ** (2 * k)
                plain += value
                alternating = alternating + value if n % 2 else alternating - value
            self._plain[k], self._alternating[k] = plain, alternating
        return self._plain[k], self._alternating[k]

    def zeta(self, k: int):
        return zeta_even(k) - self._partial(k)[0]

    def eta(self, k: int):
        return eta_even(k) - self._partial(k)[1]


def _sandwich_tail(p: int, tails: _PowerTails, order: int, alternating: bool):
    """
    sum_{n>N} s_n c_pn with c_pn = -sum_{k<order} b_2k/(2k (pn)^2k) + (-1)^order r_n,
    0 < r_n < |b_2 order|/(2 order (pn)^(2 order)).
    """
    total = iv.mpf(0)
    for k in range(1, order):
        weight = to_interval(bernoulli_number(2 * k) / (2 * k * Fraction(p) ** (2 * k)))
        total -= weight * (tails.eta(k) if alternating else tails.zeta(k))
    spread = upper(to_interval(expansion_bound(p, order)) * tails.zeta(order))
    if alternating:
        remainder = iv.mpf((-spread, spread))
    elif order % 2 == 0:
        remainder = iv.mpf((0, spread))
    else:
        remainder = iv.mpf((-spread, 0))
    return total + remainder, spread


def _harmonic_series(kind: str, p: int, tol, terms, order, prec) -> SeriesValue:
    terms = _check(p, terms, order, DEFAULT_TERMS)
    alternating = kind == 'D'
    with precision(prec) as bits:
        target = _target(tol, bits)
        with precision(work_prec(bits)):
            gamma = euler_gamma(work_prec(bits))
            direct = _direct_sum(p, terms, gamma, alternating)
            tails = _PowerTails(terms)
            if order is not None:
                tail, _ = _sandwich_tail(p, tails, order, alternating)
                chosen = order
            else:
                for chosen in range(1, MAX_TAIL_ORDER + 1):
                    tail, spread = _sandwich_tail(p, tails, chosen, alternating)
                    if spread < target / 4:
                        break
            value = direct + tail
            if alternating:
                value += iv.ln2 / (2 * p)
        return _finish(kind, p, value, terms, chosen, tol)


def series_C(p: int, tol=None, terms: int | None = None, order: int | None = None,
             prec: int | None = None) -> SeriesValue:
    """
    Enclosure of C_p. With `order` the tail is split at that fixed order;
    otherwise the order grows until the tail remainder is below tol/4.
    """
    return _harmonic_series('C', p, tol, terms, order, prec)


def series_D(p: int, tol=None, terms: int | None = None, order: int | None = None,
             prec: int | None = None) -> SeriesValue:
    """
    Enclosure of D_p = ln 2/(2p) + sum_{n>=1} (-1)^(n-1) c_pn. The order-1
    expansion 0 < ln 2/(2p) - D_p < |b_2| eta(2)/(2p^2) must not be
    contradicted by the enclosure.
    """
    result = _harmonic_series('D', p, tol, terms, order, prec)
    with precision(prec):
        epsilon = iv.ln2 / (2 * p) - result.value
        bound = to_interval(Fraction(1, 12 * p * p)) * eta_even(1)
        if upper(epsilon) <= 0 or lower(epsilon - bound) >= 0:
            logger.error(f"D_{p} enclosure contradicts its expansion: {epsilon}")
            raise SandwichViolation(f"D_{p} lies outside its order-1 expansion bracket",
                                    p=p, lower=lower(epsilon), upper=upper(epsilon), bound=upper(bound))
    return result


# ---------------------------------------------------------------------------
# E_p
# ---------------------------------------------------------------------------

def block_terms(p: int) -> MonotoneTerms:
    """
    g(s) = sum_{j=1}^{p} (1/(j + 2ps) - 1/(p + j + 2ps)), so that g(k) = t_2k - t_2k+1
    with t_n = H_p(n+1) - H_pn.
    """
    c = 2 * p

    def deriv(k, s):
        scale = (-1) ** k * iv.factorial(k) * iv.mpf(c) ** k
        total = iv.mpf(0)
        for j in range(1, p + 1):
            total += 1 / iv.mpf(j + c * s) ** (k + 1) - 1 / iv.mpf(p + j + c * s) ** (k + 1)
        return scale * total

    def tail_integral(start):
        total = iv.mpf(0)
        for j in range(1, p + 1):
            total += iv.ln(iv.mpf(p + j + c * start) / (j + c * start))
        return total / c

    return MonotoneTerms(name=f"E_{p} pair terms", deriv=deriv, tail_integral=tail_integral)


def series_E(p: int, tol=None, terms: int | None = None, order: int | None = None,
             prec: int | None = None, cross_check: bool = True) -> SeriesValue:
    """
    Enclosure of E_p from `terms` pairs summed directly and a certified
    completely monotone tail. `order` fixes the tail order; otherwise it
    grows until the tail is narrower than tol/4 or stops improving.

    With `cross_check`, E_p = ln p + gamma - ln(pi/2) + 2 D_p is asserted
    against an independently summed D_p.
    """
    pairs = _check(p, terms, order, DEFAULT_PAIRS)
    with precision(prec) as bits:
        target = _target(tol, bits)
        with precision(work_prec(bits)) as work:
            direct = iv.mpf(0)
            for j in range(1, 2 * p * pairs + 1):
                # 1/j belongs to block n = (j - 1) // p
                term = iv.mpf(1) / j
                direct = direct + term if ((j - 1) // p) % 2 == 0 else direct - term
            terms_g = block_terms(p)
            if order is not None:
                tail = monotone_tail_sum(terms_g, pairs, order, prec=work)
                chosen = order
            else:
                tail, chosen = None, 0
                for m in range(1, MAX_TAIL_ORDER + 1):
                    candidate = monotone_tail_sum(terms_g, pairs, m, prec=work)
                    if tail is not None and width(candidate) >= width(tail):
                        break
                    tail, chosen = candidate, m
                    if width(tail) < target / 4:
                        break
            value = direct + tail
        result = _finish('E', p, value, pairs, chosen, tol)
        if cross_check:
            lm84_residual(p, value, series_D(p, prec=bits).value, bits)
        return result


SERIES = {'C': series_C, 'D': series_D, 'E': series_E}


def series_value(kind: str, p: int, tol=None, prec: int | None = None) -> SeriesValue:
    if kind not in SERIES:
        raise InvalidArgument(f"Unknown series {kind!r}", known=', '.join(SERIES_KINDS))
    return SERIES[kind](p, tol=tol, prec=prec)


def width_shrink_check(kind: str, p: int = 2, terms: int = 64, order: int = 1, factor: float = 1.9,
                       prec: int | None = None):
    """
    Doubling the term budget at a fixed tail order shrinks the enclosure by at
    least `factor`. Returns the ratio of the two widths.
    """
    if kind not in SERIES:
        raise InvalidArgument(f"Unknown series {kind!r}", known=', '.join(SERIES_KINDS))
    options = {'cross_check': False} if kind == 'E' else {}
    with precision(prec) as bits:
        coarse = SERIES[kind](p, terms=terms, order=order, prec=bits, **options)
        fine = SERIES[kind](p, terms=2 * terms, order=order, prec=bits, **options)
        ratio = width(coarse.value) / width(fine.value)
        if ratio < factor:
            logger.error(f"{kind}_{p}: doubling N={terms} shrank the width only {mp.nstr(ratio, 5)}x")
            raise ToleranceFailure(f"{kind}_{p} enclosure does not shrink with the term budget",
                                   terms=terms, ratio=ratio, factor=factor)
        return ratio


# ---------------------------------------------------------------------------
# Expansion checks
# ---------------------------------------------------------------------------

def _partial_expansion(p: int, m: int, constant) -> object:
    """sum_{k<m} b_2k constant(k)/(2k p^2k)."""
    total = iv.mpf(0)
    for k in range(1, m):
        total += to_interval(bernoulli_number(2 * k) / (2 * k * Fraction(p) ** (2 * k))) * constant(k)
    return total


def witness_check(label: str, epsilon, m: int, prec, bound=None):
    """
    Certify 0 < epsilon < bound, bound defaulting to |b_2m|. `epsilon` and
    `bound` take the working precision and return intervals. Returns epsilon.
    """
    if bound is None:
        def bound(bits):
            return to_interval(abs(bernoulli_number(2 * m)))
    certify_positive(epsilon, prec=prec, label=f"{label} lower side", error=SandwichViolation)
    certify_positive(lambda bits: bound(bits) - epsilon(bits), prec=prec, label=f"{label} upper side",
                     error=SandwichViolation)
    with precision(prec) as bits:
        return epsilon(bits)


def pr82_check(p: int, m: int, prec: int | None = None):
    """
    Witness eps in C_p = -sum_{k<m} b_2k zeta(2k)/(2k p^2k) + (-1)^m zeta(2m)/(2m p^2m) eps,
    certified to lie in (0, |b_2m|).
    """
    if m < 1:
        raise InvalidArgument("m must be >= 1", m=m)

    def epsilon(bits):
        c = series_C(p, prec=bits).value
        scale = to_interval(2 * m * Fraction(p) ** (2 * m)) / zeta_even(m)
        return (-1) ** m * (c + _partial_expansion(p, m, zeta_even)) * scale

    return witness_check(f"C_{p} order {m} expansion", epsilon, m, prec)


def pr83_check(p: int, m: int, prec: int | None = None):
    """
    Witness eps' in D_p = ln 2/(2p) - sum_{k<m} b_2k eta(2k)/(2k p^2k) + (-1)^m eta(2m)/(2m p^2m) eps',
    certified to lie in (0, |b_2m|).
    """
    if m < 1:
        raise InvalidArgument("m must be >= 1", m=m)

    def epsilon(bits):
        d = series_D(p, prec=bits).value
        scale = to_interval(2 * m * Fraction(p) ** (2 * m)) / eta_even(m)
        return (-1) ** m * (d - iv.ln2 / (2 * p) + _partial_expansion(p, m, eta_even)) * scale

    return witness_check(f"D_{p} order {m} expansion", epsilon, m, prec)


def lm84_residual(p: int, e, d, bits: int):
    """E_p - (ln p + gamma - ln(pi/2) + 2 D_p) from given enclosures; must contain 0."""
    with precision(bits):
        residual = e - (iv.ln(p) + euler_gamma(bits) - iv.ln(pi_interval() / 2) + 2 * d)
        if not lower(residual) <= 0 <= upper(residual):
            logger.error(f"E_{p} identity residual {residual}")
            raise IdentityViolation(f"E_{p} != ln p + gamma - ln(pi/2) + 2 D_{p}",
                                    p=p, lower=lower(residual), upper=upper(residual))
        return residual


def lm84_check(p: int, prec: int | None = None):
    """E_p - (ln p + gamma - ln(pi/2) + 2 D_p), which must contain 0."""
    with precision(prec) as bits:
        e = series_E(p, prec=bits, cross_check=False).value
        d = series_D(p, prec=bits).value
        return lm84_residual(p, e, d, bits)


def leading_terms_check(p: int, terms: int = 2, prec: int | None = None):
    """
    C_p against -pi^2/(72 p^2) + pi^4/(10800 p^4) truncated to `terms` terms:
    the difference is certified below |b_2m| zeta(2m)/(2m p^2m), m = terms + 1.
    Returns the difference.
    """
    if terms not in (0, 1, 2):
        raise InvalidArgument("terms must be 0, 1 or 2", terms=terms)
    m = terms + 1

    def difference(bits):
        pi = pi_interval()
        display = [-pi ** 2 / (72 * iv.mpf(p) ** 2), pi ** 4 / (10800 * iv.mpf(p) ** 4)][:terms]
        return series_C(p, prec=bits).value - sum(display, iv.mpf(0))

    def margin(bits):
        return to_interval(expansion_bound(p, m)) * zeta_even(m) - abs(difference(bits))

    certify_positive(margin, prec=prec, label=f"C_{p} leading terms", error=SandwichViolation)
    with precision(prec) as bits:
        return difference(bits)
