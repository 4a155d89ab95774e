# quadrature/expansions.py
"""
Asymptotic error expansions int_0^1 f - rule_p ~ sum_j c_j p^(-j), the
order-limit checks built on them, and convergence tables.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from mpmath import mp

from analytic_core.precision import precision, to_mpf
from core.exceptions import InvalidArgument, OrderMismatch
from euler_maclaurin.integrands import IntegrandSpec
from euler_maclaurin.summation import reference_integral, signed_trapezoid_remainder
from exact_core.bernoulli import bernoulli_number, bernoulli_polynomial

from .romberg import romberg_coefficient
from .rules import RuleId, RuleKind, apply_rule

logger = logging.getLogger(__name__)

LIMIT_RULES = (RuleKind.MIDPOINT, RuleKind.TRAPEZOID, RuleKind.SIMPSON, RuleKind.GAUSS2)
LIMIT_TOLERANCE = Fraction(1, 100)


def bernoulli_at_gauss_alpha(n: int) -> Fraction:
    """
    B_n(1/2 - 1/sqrt(12)) for even n. B_n(1/2 + u) is even in u and u^2 = 1/12,
    so the value is rational.
    """
    if n % 2:
        raise InvalidArgument("only even indices give rational values", n=n)
    centred = bernoulli_polynomial(n).shift(Fraction(1, 2))
    return sum((c * Fraction(1, 12) ** (j // 2) for j, c in enumerate(centred.coeffs) if j % 2 == 0), Fraction(0))


def effective_bernoulli(rule: RuleId, k: int) -> Fraction:
    """
    beta_k with int f - rule_p = -sum_k beta_k/((2k)! p^2k) delta f^(2k-1) + (odd terms).
    """
    kind = rule.kind
    if kind in (RuleKind.LEFT_RIEMANN, RuleKind.RIGHT_RIEMANN, RuleKind.TRAPEZOID):
        return bernoulli_number(2 * k)
    if kind == RuleKind.MIDPOINT:
        return (Fraction(2) ** (1 - 2 * k) - 1) * bernoulli_number(2 * k)
    if kind == RuleKind.SIMPSON:
        return (Fraction(4) ** (1 - k) - 1) / 3 * bernoulli_number(2 * k)
    if kind == RuleKind.GAUSS2:
        return bernoulli_at_gauss_alpha(2 * k)
    return romberg_coefficient(k, rule.level) * bernoulli_number(2 * k)


@dataclass
class ErrorExpansion:
    """terms are (j, c_j) with int_0^1 f - rule_p = sum c_j p^(-j) + o(p^(-m))."""
    rule: RuleId
    terms: list
    truncation_order: int

    def value(self, p: int):
        return mp.fsum(c / mp.mpf(p) ** j for j, c in self.terms)

    def coefficient(self, power: int):
        for j, c in self.terms:
            if j == power:
                return c
        return mp.zero


def error_expansion(rule: RuleId, f: IntegrandSpec, m: int, prec: int | None = None) -> ErrorExpansion:
    """Terms up to p^(-m); zero multipliers are omitted, so powers strictly increase."""
    if m < 1:
        raise InvalidArgument("order m must be >= 1", m=m)
    f.require_order(m - 1)
    with precision(prec):
        terms = []
        if rule.kind == RuleKind.LEFT_RIEMANN:
            terms.append((1, f.delta(0) / 2))
        elif rule.kind == RuleKind.RIGHT_RIEMANN:
            terms.append((1, -f.delta(0) / 2))
        for k in range(1, m // 2 + 1):
            beta = effective_bernoulli(rule, k)
            if beta != 0:
                terms.append((2 * k, -to_mpf(beta) / factorial(2 * k) * f.delta(2 * k - 1)))
        return ErrorExpansion(rule=rule, terms=terms, truncation_order=m)


def _check_doubling(p_list, minimum: int = 2) -> list:
    p_list = list(p_list)
    if len(p_list) < minimum or p_list[0] < 1 or any(b != 2 * a for a, b in zip(p_list, p_list[1:])):
        raise InvalidArgument(f"need at least {minimum} doubling panel counts", p_list=p_list)
    return p_list


def order_limit_check(rule: RuleId, f: IntegrandSpec, p_list=(8, 16, 32), prec: int | None = None):
    """
    Richardson-extrapolated limit of p^r (int f - rule_p), r the rule's order.
    Both the extrapolated limit and the value at the largest p must match the
    closed-form leading coefficient to 1%.
    """
    if rule.kind not in LIMIT_RULES:
        raise InvalidArgument(f"no order limit for {rule}", rule=str(rule))
    p_list = _check_doubling(p_list, minimum=3)
    r = rule.order
    with precision(prec) as bits:
        integral = reference_integral(f).value
        scaled = [mp.mpf(p) ** r * (integral - apply_rule(rule, f, p)) for p in p_list]
        # next terms go like p^-2 and p^-4
        first = [(4 * b - a) / 3 for a, b in zip(scaled, scaled[1:])]
        limit = (16 * first[-1] - first[-2]) / 15
        expected = error_expansion(rule, f, r).coefficient(r)

        if expected == 0:
            negligible = mp.ldexp(1, -(bits // 2))
            if abs(limit) > negligible or abs(scaled[-1]) > negligible:
                raise OrderMismatch(f"{rule}: scaled error does not vanish", limit=limit, last=scaled[-1])
            return limit
        tolerance = abs(expected) * to_mpf(LIMIT_TOLERANCE)
        if abs(limit - expected) > tolerance or abs(scaled[-1] - expected) > tolerance:
            logger.error(f"order limit mismatch for {rule} on {f.name}: {mp.nstr(limit, 10)} vs {mp.nstr(expected, 10)}")
            raise OrderMismatch(f"{rule}: p^{r} times the error does not settle to the predicted limit",
                                limit=limit, expected=expected, last=scaled[-1])
        return limit


def convergence_table(rule: RuleId, f: IntegrandSpec, p_values=(1, 2, 4, 8, 16, 32),
                      prec: int | None = None) -> list[dict]:
    """
    Rows (rule, p, value, error, scaled_error, measured_order) with
    error = int f - rule_p and measured_order = log2 of successive error ratios
    per doubling of p.
    """
    p_values = list(p_values)
    if not p_values or any(b <= a for a, b in zip(p_values, p_values[1:])) or p_values[0] < 1:
        raise InvalidArgument("p values must be increasing positive counts", p_values=p_values)
    with precision(prec):
        integral = reference_integral(f).value
        rows, previous = [], None
        for p in p_values:
            value = apply_rule(rule, f, p)
            error = integral - value
            order = None
            if previous is not None and error != 0 and previous[1] != 0:
                order = mp.log(abs(previous[1]) / abs(error)) / mp.log(mp.mpf(p) / previous[0])
            rows.append({
                'rule': str(rule),
                'p': p,
                'value': value,
                'error': error,
                'scaled_error': mp.mpf(p) ** rule.order * error,
                'measured_order': order,
            })
            previous = (p, error)
        return rows


def trapezoid_monotone_remainder(f: IntegrandSpec, p: int, m: int, quad_tol=None, prec: int | None = None):
    """
    Enclosure of R_{m,p} in

        int_0^1 f = T_p(f) - sum_{k<m} b_2k/((2k)! p^2k) delta f^(2k-1) + (-1)^(m+1) R_{m,p},

    0 <= R_{m,p} <= 6 (2 pi p)^(-2m) (f^(2m-1)(0) - f^(2m-1)(1)); f^(2m-1) must be decreasing.
    """
    return signed_trapezoid_remainder(f, p, m, quad_tol=quad_tol, prec=prec)


def measured_order_check(rule: RuleId, f: IntegrandSpec, p_values=(16, 32, 64), tolerance: float = 0.1,
                         prec: int | None = None):
    """The last measured order of the convergence table is the rule's order to within `tolerance`."""
    with precision(prec):
        rows = convergence_table(rule, f, p_values)
        measured = rows[-1]['measured_order']
        if measured is None or abs(measured - rule.order) > tolerance:
            logger.error(f"{rule} on {f.name}: measured order {measured}, expected {rule.order}")
            raise OrderMismatch(f"{rule}: measured order is not {rule.order}", rule=str(rule),
                                measured=measured, expected=rule.order)
        return measured
