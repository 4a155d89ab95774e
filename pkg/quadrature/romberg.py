# quadrature/romberg.py
"""
q-binomial coefficients and the Romberg error expansion.

After l Richardson steps the trapezoid term b_2k/((2k)! p^2k) delta f^(2k-1)
is multiplied by prod_{j<=l} (4^(j-k) - 1)/(4^j - 1), which vanishes for
k <= l and equals (-1)^l 2^(-l(l+1)) [k-1 choose l]_{1/4} for k > l.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial

from mpmath import mp

from analytic_core.precision import hull, pi_interval, precision, to_interval, to_mpf, upper
from core.exceptions import BoundViolation, IdentityViolation, InvalidArgument
from euler_maclaurin.integrands import IntegrandSpec
from euler_maclaurin.summation import default_quad_tol, reference_integral
from exact_core.bernoulli import bernoulli_number
from exact_core.polynomial import as_rational

from .rules import RuleId, RuleKind, apply_rule_exact, romberg

logger = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)


def q_binomial(n: int, m: int, q) -> Fraction:
    """(q;q)_n / ((q;q)_(n-m) (q;q)_m) for 0 <= m <= n; q = 1 gives C(n, m)."""
    if not 0 <= m <= n:
        raise InvalidArgument("q-binomial needs 0 <= m <= n", n=n, m=m)
    q = as_rational(q)
    if q == 1:
        return Fraction(comb(n, m))
    numerator, denominator = Fraction(1), Fraction(1)
    for j in range(1, m + 1):
        numerator *= 1 - q ** (n - m + j)
        denominator *= 1 - q ** j
    if denominator == 0:
        raise InvalidArgument("q is a root of unity of order <= m", q=q, m=m)
    return numerator / denominator


def romberg_factor(k: int, level: int) -> Fraction:
    """prod_{j=1}^{level} (4^(j-k) - 1)/(4^j - 1), straight from the recurrence."""
    result = Fraction(1)
    for j in range(1, level + 1):
        result *= (Fraction(4) ** (j - k) - 1) / (4 ** j - 1)
    return result


def romberg_coefficient(k: int, level: int) -> Fraction:
    """The same multiplier in q-binomial form; 0 for k <= level."""
    if k <= level:
        return Fraction(0)
    return Fraction((-1) ** level, 2 ** (level * (level + 1))) * q_binomial(k - 1, level, QUARTER)


def romberg_expansion_terms(f: IntegrandSpec, p: int, level: int, m: int) -> list:
    """(k, term) with term = -coef_k b_2k/((2k)! p^2k) delta f^(2k-1), for level < k <= m/2."""
    return [
        (k, -to_mpf(romberg_coefficient(k, level) * bernoulli_number(2 * k)) / factorial(2 * k)
         * f.delta(2 * k - 1) / mp.mpf(p) ** (2 * k))
        for k in range(level + 1, m // 2 + 1)
    ]


def romberg_expansion_check(f: IntegrandSpec, p: int, level: int, m: int, quad_tol=None,
                            prec: int | None = None):
    """
    Enclosure of the Romberg residual int f - T_p^(level) - expansion, checked
    against (16/pi) 2^(-level(level+1)) (2 pi p)^(-m) sup|f^(m)|.
    """
    if level < 0 or p < 1:
        raise InvalidArgument("need level >= 0 and p >= 1", level=level, p=p)
    if m < 2 * level + 2:
        raise InvalidArgument("the Romberg bound needs m >= 2 level + 2", m=m, level=level)
    f.require_order(m)
    for k in range(1, m // 2 + 1):
        if romberg_factor(k, level) != romberg_coefficient(k, level):
            raise IdentityViolation("Romberg multiplier disagrees with its q-binomial form", k=k, level=level)
    surviving = [k for k in range(1, m // 2 + 1) if romberg_coefficient(k, level) != 0]
    if surviving and surviving[0] != level + 1:
        raise IdentityViolation("first surviving Romberg term is not k = level + 1", first=surviving[0])

    with precision(prec) as bits:
        quad_tol = quad_tol if quad_tol is not None else default_quad_tol(bits)
        integral = reference_integral(f, quad_tol)
        value = romberg(f, p, level)
        terms = romberg_expansion_terms(f, p, level, m)
        residual = integral.value - value - mp.fsum(term for _, term in terms)
        radius = integral.error + quad_tol + mp.ldexp(1, -bits + 8) * 4 ** level * (p + m) * max(1, abs(value))

        bound = upper(16 / pi_interval() / 2 ** (level * (level + 1))
                      / (2 * pi_interval() * p) ** m * to_interval(f.sup_deriv(m)))
        if abs(residual) - radius > bound:
            logger.error(f"Romberg bound violated for {f.name} p={p} level={level} m={m}")
            raise BoundViolation(f"{f.name}: Romberg residual exceeds its bound",
                                 p=p, level=level, m=m, residual=residual, bound=bound)
        return hull(residual - radius, residual + radius)


def romberg_single_panel_check(f: IntegrandSpec, level: int, quad_tol=None, prec: int | None = None):
    """
    Enclosure of int f - T_1^(level), checked against
    10 / (2^((level+2)(level+1)) pi^(2 level + 2)) sup|f^(2 level + 2)|.
    """
    order = 2 * level + 2
    f.require_order(order)
    with precision(prec) as bits:
        quad_tol = quad_tol if quad_tol is not None else default_quad_tol(bits)
        integral = reference_integral(f, quad_tol)
        residual = integral.value - romberg(f, 1, level)
        radius = integral.error + quad_tol + mp.ldexp(1, -bits + 8) * 4 ** level * max(1, abs(integral.value))
        bound = upper(10 / (to_interval(2 ** ((level + 2) * (level + 1))) * pi_interval() ** order)
                      * to_interval(f.sup_deriv(order)))
        if abs(residual) - radius > bound:
            raise BoundViolation(f"{f.name}: single-panel Romberg residual exceeds its bound",
                                 level=level, residual=residual, bound=bound)
        return hull(residual - radius, residual + radius)


def romberg_recurrence_check(f: IntegrandSpec, p: int, max_level: int = 4, prec: int | None = None) -> int:
    """
    T_p^(l) = (4^l T_2p^(l-1) - T_p^(l-1)) / (4^l - 1) for 1 <= l <= max_level,
    numerically and, on a polynomial, in exact arithmetic. Returns the levels checked.
    """
    if p < 1 or max_level < 1:
        raise InvalidArgument("need p >= 1 and max_level >= 1", p=p, max_level=max_level)
    with precision(prec) as bits:
        for level in range(1, max_level + 1):
            value = romberg(f, p, level)
            stepped = (4 ** level * romberg(f, 2 * p, level - 1) - romberg(f, p, level - 1)) / (4 ** level - 1)
            allowed = mp.ldexp(1, -bits + 8) * 4 ** level * max(mp.one, abs(value))
            if abs(value - stepped) > allowed:
                logger.error(f"Romberg recurrence broken for {f.name} p={p} level={level}")
                raise IdentityViolation(f"{f.name}: Romberg level {level} does not follow from level {level - 1}",
                                        p=p, level=level, gap=abs(value - stepped))
            if f.polynomial is not None:
                exact = apply_rule_exact(RuleId(RuleKind.ROMBERG, level), f.polynomial, p)
                previous = RuleId(RuleKind.ROMBERG, level - 1)
                recurrence = (4 ** level * apply_rule_exact(previous, f.polynomial, 2 * p)
                              - apply_rule_exact(previous, f.polynomial, p)) / (4 ** level - 1)
                if exact != recurrence:
                    raise IdentityViolation(f"{f.name}: exact Romberg level {level} breaks the recurrence",
                                            p=p, level=level)
    return max_level
