# quadrature/rules.py
"""
Composite quadrature rules on [0, 1] with p panels. Every rule is an offset
Riemann mean or a combination of them:

    left / right / midpoint   H_p(f; 0), H_p(f; 1), H_p(f; 1/2)
    trapezoid                 (left + right) / 2
    simpson                   (trapezoid + 2 midpoint) / 3
    gauss2                    (H_p(f; alpha) + H_p(f; 1 - alpha)) / 2, alpha = 1/2 - 1/sqrt(12)
    romberg:l                 Richardson recurrence on trapezoid values at p, 2p, ..., 2^l p
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from django.db import models
from mpmath import mp

from analytic_core.norms import evaluate_mp
from analytic_core.precision import precision, to_mpf
from core.exceptions import InvalidArgument, OrderMismatch, PreconditionViolated, ToleranceFailure
from euler_maclaurin.integrands import IntegrandSpec
from euler_maclaurin.summation import composite_mean
from exact_core.bernoulli import bernoulli_polynomial
from exact_core.polynomial import RatPolynomial

MAX_ROMBERG_LEVEL = 12


class RuleKind(models.TextChoices):
    LEFT_RIEMANN = 'left', 'Left Riemann sum'
    RIGHT_RIEMANN = 'right', 'Right Riemann sum'
    MIDPOINT = 'midpoint', 'Midpoint rule'
    TRAPEZOID = 'trapezoid', 'Trapezoidal rule'
    SIMPSON = 'simpson', 'Simpson rule'
    GAUSS2 = 'gauss2', 'Two-point Gauss rule'
    ROMBERG = 'romberg', 'Romberg rule'


_ORDERS = {
    RuleKind.LEFT_RIEMANN: 1,
    RuleKind.RIGHT_RIEMANN: 1,
    RuleKind.MIDPOINT: 2,
    RuleKind.TRAPEZOID: 2,
    RuleKind.SIMPSON: 4,
    RuleKind.GAUSS2: 4,
}


@dataclass(frozen=True)
class RuleId:
    kind: RuleKind
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'kind', RuleKind(self.kind))
        if self.kind != RuleKind.ROMBERG and self.level:
            raise InvalidArgument(f"{self.kind.value} takes no level", level=self.level)
        if not 0 <= self.level <= MAX_ROMBERG_LEVEL:
            raise InvalidArgument(f"Romberg level must lie in 0..{MAX_ROMBERG_LEVEL}", level=self.level)

    @classmethod
    def parse(cls, text: str) -> "RuleId":
        """'trapezoid', 'gauss2', 'romberg:3', ..."""
        name, _, level = text.strip().lower().partition(':')
        if name not in RuleKind.values:
            raise InvalidArgument(f"Unknown rule {text!r}", known=', '.join(RuleKind.values))
        if level and name != RuleKind.ROMBERG:
            raise InvalidArgument(f"{name} takes no level", rule=text)
        try:
            level = int(level) if level else 0
        except ValueError:
            raise InvalidArgument(f"Bad Romberg level in {text!r}")
        return cls(RuleKind(name), level)

    @property
    def order(self) -> int:
        """Exponent r with int f - rule_p = O(p^-r) for smooth f."""
        if self.kind == RuleKind.ROMBERG:
            return 2 * self.level + 2
        return _ORDERS[self.kind]

    def __str__(self):
        if self.kind == RuleKind.ROMBERG:
            return f"romberg:{self.level}"
        return self.kind.value


def gauss_alpha(prec: int | None = None):
    """alpha = 1/2 - 1/sqrt(12), the zero of B_2 in (0, 1/2)."""
    with precision(prec):
        return mp.mpf(1) / 2 - 1 / mp.sqrt(12)


def gauss_alpha_residual(prec: int | None = None):
    """|B_2(alpha)| at the working precision."""
    with precision(prec):
        return abs(evaluate_mp(bernoulli_polynomial(2), gauss_alpha()))


def _check_panels(p: int) -> None:
    if p < 1:
        raise InvalidArgument("panel count p must be >= 1", p=p)


def trapezoid(f: IntegrandSpec, p: int):
    return (composite_mean(f, p, 0) + composite_mean(f, p, 1)) / 2


def romberg(f: IntegrandSpec, p: int, level: int, prec: int | None = None):
    """T_p^(level) from trapezoid values recomputed at p, 2p, ..., 2^level p."""
    _check_panels(p)
    with precision(prec):
        row = [trapezoid(f, p * 2 ** i) for i in range(level + 1)]
        for j in range(1, level + 1):
            row = [(4 ** j * row[i + 1] - row[i]) / (4 ** j - 1) for i in range(len(row) - 1)]
        return row[0]


def apply_rule(rule: RuleId, f: IntegrandSpec, p: int, prec: int | None = None):
    """Value of `rule` on p panels of [0, 1]."""
    _check_panels(p)
    with precision(prec):
        kind = rule.kind
        if kind == RuleKind.LEFT_RIEMANN:
            return composite_mean(f, p, 0)
        if kind == RuleKind.RIGHT_RIEMANN:
            return composite_mean(f, p, 1)
        if kind == RuleKind.MIDPOINT:
            return composite_mean(f, p, Fraction(1, 2))
        if kind == RuleKind.TRAPEZOID:
            return trapezoid(f, p)
        if kind == RuleKind.SIMPSON:
            return (trapezoid(f, p) + 2 * composite_mean(f, p, Fraction(1, 2))) / 3
        if kind == RuleKind.GAUSS2:
            alpha = gauss_alpha()
            return (composite_mean(f, p, alpha) + composite_mean(f, p, 1 - alpha)) / 2
        return romberg(f, p, rule.level)


# ---------------------------------------------------------------------------
# Exact values on rational polynomials
# ---------------------------------------------------------------------------

def _mean_exact(poly: RatPolynomial, p: int, x: Fraction) -> Fraction:
    return sum((poly.evaluate((k + x) / p) for k in range(p)), Fraction(0)) / p


def _gauss2_exact(poly: RatPolynomial, p: int) -> Fraction:
    # f(c + h) + f(c - h) keeps only even powers of h, and h^2 = 1/(12 p^2) is rational
    h2 = Fraction(1, 12 * p * p)
    derivs = [poly]
    while not derivs[-1].is_zero:
        derivs.append(derivs[-1].derivative())
    total = Fraction(0)
    for k in range(p):
        centre = Fraction(2 * k + 1, 2 * p)
        factorial_j, power = 1, Fraction(1)
        for j in range(0, len(derivs), 2):
            if j:
                factorial_j *= (j - 1) * j
                power *= h2
            total += derivs[j].evaluate(centre) * power / factorial_j
    return total / p


def apply_rule_exact(rule: RuleId, poly: RatPolynomial, p: int) -> Fraction:
    """The rule applied to a rational polynomial, in exact arithmetic."""
    _check_panels(p)
    kind = rule.kind
    half = Fraction(1, 2)
    if kind == RuleKind.LEFT_RIEMANN:
        return _mean_exact(poly, p, Fraction(0))
    if kind == RuleKind.RIGHT_RIEMANN:
        return _mean_exact(poly, p, Fraction(1))
    if kind == RuleKind.MIDPOINT:
        return _mean_exact(poly, p, half)
    if kind == RuleKind.GAUSS2:
        return _gauss2_exact(poly, p)

    def trap(panels):
        return (_mean_exact(poly, panels, Fraction(0)) + _mean_exact(poly, panels, Fraction(1))) / 2

    if kind == RuleKind.TRAPEZOID:
        return trap(p)
    if kind == RuleKind.SIMPSON:
        return (trap(p) + 2 * _mean_exact(poly, p, half)) / 3
    row = [trap(p * 2 ** i) for i in range(rule.level + 1)]
    for j in range(1, rule.level + 1):
        row = [(4 ** j * row[i + 1] - row[i]) / (4 ** j - 1) for i in range(len(row) - 1)]
    return row[0]


# ---------------------------------------------------------------------------
# Exactness and the Simpson combination
# ---------------------------------------------------------------------------

def expected_exactness(rule: RuleId) -> int:
    """Highest monomial degree the rule integrates exactly."""
    if rule.kind == RuleKind.ROMBERG:
        return 2 * rule.level + 1
    return rule.order - 1


def exactness_degree(rule: RuleId, p: int = 1, max_degree: int = 16) -> int:
    """Largest d such that the rule is exact on t^0, ..., t^d with p panels; -1 if none."""
    for j in range(max_degree + 1):
        if apply_rule_exact(rule, RatPolynomial.monomial(j), p) != Fraction(1, j + 1):
            return j - 1
    return max_degree


def exactness_degree_check(rules, p_values=(1, 2, 3)) -> dict:
    """Each rule is exact up to its degree and not beyond, for every p."""
    found = {}
    for rule in rules:
        for p in p_values:
            degree = exactness_degree(rule, p, max_degree=expected_exactness(rule) + 2)
            if degree != expected_exactness(rule):
                raise OrderMismatch(f"{rule}: exact up to degree {degree}", rule=str(rule), p=p,
                                    expected=expected_exactness(rule))
        found[str(rule)] = expected_exactness(rule)
    return found


def simpson_panels(f: IntegrandSpec, p: int, prec: int | None = None):
    """(1/(6p)) sum_k [f(k/p) + 4 f((2k+1)/(2p)) + f((k+1)/p)], panel by panel."""
    _check_panels(p)
    with precision(prec):
        total = mp.fsum(
            f(to_mpf(Fraction(k, p))) + 4 * f(to_mpf(Fraction(2 * k + 1, 2 * p))) + f(to_mpf(Fraction(k + 1, p)))
            for k in range(p)
        )
        return total / (6 * p)


def simpson_identity_check(f: IntegrandSpec, p: int, prec: int | None = None):
    """
    Simpson as (T + 2M)/3 agrees with its panel form to a few ulps per node;
    on a polynomial both are compared exactly. Returns the gap.
    """
    with precision(prec) as bits:
        combined = apply_rule(RuleId(RuleKind.SIMPSON), f, p)
        panels = simpson_panels(f, p)
        gap = abs(combined - panels)
        allowed = mp.ldexp(1, 3 - bits) * (p + 1) * max(mp.one, abs(panels))
        if gap > allowed:
            raise ToleranceFailure(f"{f.name}: (T + 2M)/3 differs from the panel form", p=p, gap=gap)
    if f.polynomial is not None:
        poly = f.polynomial
        exact_panels = sum(
            (poly.evaluate(Fraction(k, p)) + 4 * poly.evaluate(Fraction(2 * k + 1, 2 * p))
             + poly.evaluate(Fraction(k + 1, p)) for k in range(p)),
            Fraction(0),
        ) / (6 * p)
        if apply_rule_exact(RuleId(RuleKind.SIMPSON), poly, p) != exact_panels:
            raise ToleranceFailure(f"{f.name}: exact (T + 2M)/3 differs from the panel form", p=p)
    return gap


# ---------------------------------------------------------------------------
# General intervals
# ---------------------------------------------------------------------------

def pullback(f: IntegrandSpec, a, b) -> IntegrandSpec:
    """
    g(t) = (b - a) f(a + t (b - a)) on [0, 1], so that int_0^1 g = int_a^b f.
    Derivative bounds of f are only known on [0, 1], so g carries no
    sup_deriv and no monotone flags.
    """
    a, b = to_mpf(a), to_mpf(b)
    if not b > a:
        raise InvalidArgument("interval must satisfy a < b", a=a, b=b)
    length = b - a

    def deriv(k, t):
        return length ** (k + 1) * f.deriv(k, a + t * length)

    def sup_deriv(m):
        raise PreconditionViolated(f"{f.name} on [{a}, {b}]: no derivative bound off [0, 1]", order=m)

    return IntegrandSpec(
        name=f"{f.name}@[{mp.nstr(a, 10)},{mp.nstr(b, 10)}]",
        value=lambda t: length * f(a + t * length),
        deriv=deriv,
        delta=lambda k: deriv(k, mp.one) - deriv(k, mp.zero),
        sup_deriv=sup_deriv,
        max_order=f.max_order,
    )
