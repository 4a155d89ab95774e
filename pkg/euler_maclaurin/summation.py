# euler_maclaurin/summation.py
"""
Offset Riemann means H_p(f; x), their Euler-Maclaurin corrections and the
remainder

    E(p, m, f; x) = int_0^1 f - H_p(f; x) + sum_{k=1}^m B_k(x)/k! * delta f^(k-1) / p^k,

computed both from this definition and from its kernel form
p^(-m) int_0^1 Btilde_m(x - p t)/m! f^(m)(t) dt. Also the signed remainder
of the trapezoid form for integrands with a decreasing odd derivative, and
certified tails of completely monotone series built on it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from mpmath import iv, mp

from analytic_core.norms import evaluate_mp
from analytic_core.precision import hull, lower, pi_interval, precision, to_interval, to_mpf, upper
from core.exceptions import (
    BoundViolation,
    InvalidArgument,
    OrderMismatch,
    PreconditionViolated,
    ToleranceFailure,
)
from exact_core.bernoulli import bernoulli_number, bernoulli_polynomial

from .gauss import ADAPTIVE_POINTS, KERNEL_POINTS, adaptive_gauss, fixed_gauss
from .integrands import IntegrandSpec

logger = logging.getLogger(__name__)


def _point(x):
    """Validate x in [0, 1]; Fractions stay exact."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise InvalidArgument("offset x must lie in [0, 1]", x=x)
        return x
    x = mp.mpf(x)
    if x < 0 or x > 1:
        raise InvalidArgument("offset x must lie in [0, 1]", x=x)
    return x


def _bernoulli_at(k: int, x):
    poly = bernoulli_polynomial(k)
    if isinstance(x, Fraction):
        return to_mpf(poly.evaluate(x))
    return evaluate_mp(poly, x)


def _check_counts(p: int, m: int | None = None) -> None:
    if p < 1:
        raise InvalidArgument("panel count p must be >= 1", p=p)
    if m is not None and m < 1:
        raise InvalidArgument("order m must be >= 1", m=m)


def default_quad_tol(prec: int):
    return mp.ldexp(1, -(3 * prec) // 4)


# ---------------------------------------------------------------------------
# Composite means and corrections
# ---------------------------------------------------------------------------

def composite_mean(f: IntegrandSpec, p: int, x=Fraction(0), prec: int | None = None):
    """H_p(f; x) = (1/p) sum_{k<p} f((k + x)/p)."""
    _check_counts(p)
    x = _point(x)
    with precision(prec):
        if isinstance(x, Fraction):
            nodes = [to_mpf((k + x) / p) for k in range(p)]
        else:
            nodes = [(k + x) / p for k in range(p)]
        return mp.fsum(f(t) for t in nodes) / p


def correction_terms(f: IntegrandSpec, p: int, m: int, x=Fraction(0), prec: int | None = None) -> list:
    """
    The terms -B_k(x)/k! * delta f^(k-1) / p^k for k = 1..m, signed so that
    H_p + sum(terms) + E = int_0^1 f.
    """
    _check_counts(p, m)
    f.require_order(m - 1)
    x = _point(x)
    with precision(prec):
        return [-_bernoulli_at(k, x) / factorial(k) * f.delta(k - 1) / mp.mpf(p) ** k for k in range(1, m + 1)]


def reference_integral(f: IntegrandSpec, tol=None, prec: int | None = None):
    """int_0^1 f by adaptive 15-point Gauss-Legendre; default tolerance 2^(-3 prec/4)."""
    with precision(prec) as bits:
        return adaptive_gauss(f, 0, 1, tol if tol is not None else default_quad_tol(bits), n=ADAPTIVE_POINTS)


def remainder_bound(f: IntegrandSpec, p: int, m: int, prec: int | None = None):
    """Upper bound (8/pi) (2 pi p)^(-m) sup|f^(m)| as an mp.mpf."""
    with precision(prec):
        bound = 8 / pi_interval() / (2 * pi_interval() * p) ** m * to_interval(f.sup_deriv(m))
        return upper(bound)


# ---------------------------------------------------------------------------
# The remainder, two ways
# ---------------------------------------------------------------------------

def defining_remainder(f: IntegrandSpec, p: int, m: int, x=Fraction(0), quad_tol=None,
                       prec: int | None = None):
    """(E, error estimate) from the definition, with a quadrature reference integral."""
    with precision(prec):
        integral = reference_integral(f, quad_tol)
        mean = composite_mean(f, p, x)
        terms = correction_terms(f, p, m, x)
        return integral.value - mean - mp.fsum(terms), integral.error


def kernel_breakpoints(p: int, x) -> list:
    """0, 1 and every t in (0, 1) where x - p t is an integer."""
    points = {Fraction(0), Fraction(1)} if isinstance(x, Fraction) else {mp.zero, mp.one}
    for i in range(-1, p + 1):
        t = (x + i) / p
        if 0 <= t <= 1:
            points.add(t)
    return sorted(to_mpf(t) if isinstance(t, Fraction) else t for t in points)


def kernel_remainder(f: IntegrandSpec, p: int, m: int, x=Fraction(0), prec: int | None = None):
    """
    (E, error estimate) from p^(-m) int_0^1 Btilde_m(x - p t)/m! f^(m)(t) dt.

    The kernel is a polynomial between consecutive breakpoints; each piece
    gets a fixed 31-point rule and the 15-point rule as its error estimate.
    """
    _check_counts(p, m)
    f.require_order(m)
    x = _point(x)
    poly = bernoulli_polynomial(m)
    with precision(prec):
        xv = to_mpf(x) if isinstance(x, Fraction) else x
        pieces, errors = [], []
        breaks = kernel_breakpoints(p, x)
        for a, b in zip(breaks, breaks[1:]):
            if b <= a:
                continue
            shift = mp.floor(xv - p * (a + b) / 2)

            def integrand(t, shift=shift):
                return evaluate_mp(poly, xv - p * t - shift) * f.deriv(m, t)

            fine = fixed_gauss(integrand, a, b, KERNEL_POINTS)
            coarse = fixed_gauss(integrand, a, b, ADAPTIVE_POINTS)
            pieces.append(fine)
            errors.append(abs(fine - coarse))
        scale = mp.mpf(p) ** m * factorial(m)
        return mp.fsum(pieces) / scale, mp.fsum(errors) / scale


@dataclass
class EMResult:
    """
    estimate is H_p(f; x); estimate + sum(correction_terms) + E reproduces
    int_0^1 f, with E enclosed by `remainder`.
    """
    estimate: object
    correction_terms: list
    remainder: object
    p: int
    m: int
    x: object
    integral: object = None
    bound: object = None
    discrepancy: object = None


def em_identity_check(f: IntegrandSpec, p: int, m: int, x=Fraction(0), quad_tol=None,
                      prec: int | None = None) -> EMResult:
    """
    Compute E(p, m, f; x) from its definition and from its kernel form, require
    agreement within the combined tolerances and check
    |E| <= (8/pi)(2 pi p)^(-m) sup|f^(m)|.
    """
    _check_counts(p, m)
    f.require_order(m)
    x = _point(x)
    with precision(prec) as bits:
        quad_tol = quad_tol if quad_tol is not None else default_quad_tol(bits)
        integral = reference_integral(f, quad_tol)
        mean = composite_mean(f, p, x)
        terms = correction_terms(f, p, m, x)
        defined = integral.value - mean - mp.fsum(terms)
        kernel, kernel_error = kernel_remainder(f, p, m, x)

        magnitude = max([mp.one, abs(integral.value), abs(mean)] + [abs(t) for t in terms])
        slack = mp.ldexp(1, -bits + 8) * (p + m + 1) * magnitude
        allowed = integral.error + kernel_error + quad_tol + slack
        discrepancy = abs(defined - kernel)
        if discrepancy > allowed:
            logger.error(f"EM identity failed for {f.name} p={p} m={m} x={x}: |diff| {mp.nstr(discrepancy, 8)}")
            raise ToleranceFailure(f"{f.name}: the two computations of E disagree",
                                   p=p, m=m, x=x, defined=defined, kernel=kernel, allowed=allowed)

        bound = remainder_bound(f, p, m)
        if abs(kernel) - kernel_error > bound + slack:
            logger.error(f"remainder bound violated for {f.name} p={p} m={m} x={x}")
            raise BoundViolation(f"{f.name}: |E| exceeds (8/pi)(2 pi p)^(-m) sup|f^(m)|",
                                 p=p, m=m, x=x, remainder=kernel, bound=bound)

        radius = kernel_error + slack
        return EMResult(
            estimate=mean,
            correction_terms=terms,
            remainder=hull(kernel - radius, kernel + radius),
            p=p,
            m=m,
            x=x,
            integral=integral.value,
            bound=bound,
            discrepancy=discrepancy,
        )


def decay_check(f: IntegrandSpec, m: int, x=Fraction(0), p_list=(4, 8, 16, 32, 64),
                prec: int | None = None) -> list:
    """
    p^m E(p, m, f; x) for each p. The magnitudes must trend to 0: the last
    must be below the first, unless every value already vanishes.
    """
    p_list = list(p_list)
    if len(p_list) < 2 or any(b <= a for a, b in zip(p_list, p_list[1:])):
        raise InvalidArgument("p_list must hold at least two increasing counts", p_list=p_list)
    with precision(prec) as bits:
        scaled = []
        for p in p_list:
            remainder, _ = kernel_remainder(f, p, m, x)
            scaled.append(mp.mpf(p) ** m * remainder)
        negligible = mp.ldexp(1, -(bits // 2))
        if all(abs(v) <= negligible for v in scaled):
            return scaled
        if not abs(scaled[-1]) < abs(scaled[0]):
            raise OrderMismatch(f"{f.name}: p^m E does not decrease along p", m=m,
                                first=scaled[0], last=scaled[-1])
        logger.debug(f"decay for {f.name} m={m}: " + ', '.join(mp.nstr(v, 6) for v in scaled))
        return scaled


def offset_periodicity_check(f: IntegrandSpec, p: int, m: int, quad_tol=None, prec: int | None = None):
    """
    E(p, m, f; 1) = E(p, m, f; 0), both taken from the definition: the means
    and corrections differ, only their combination must not. Returns the gap.
    """
    _check_counts(p, m)
    with precision(prec) as bits:
        quad_tol = quad_tol if quad_tol is not None else default_quad_tol(bits)
        at_zero, zero_error = defining_remainder(f, p, m, Fraction(0), quad_tol)
        at_one, one_error = defining_remainder(f, p, m, Fraction(1), quad_tol)
        scale = max(mp.one, abs(composite_mean(f, p, 0)), abs(composite_mean(f, p, 1)))
        allowed = zero_error + one_error + 2 * quad_tol + mp.ldexp(1, -bits + 8) * (p + m + 1) * scale
        gap = abs(at_one - at_zero)
        if gap > allowed:
            raise ToleranceFailure(f"{f.name}: E(p, m, f; 1) differs from E(p, m, f; 0)",
                                   p=p, m=m, gap=gap, allowed=allowed)
        return gap


def polynomial_exactness_check(f: IntegrandSpec, p: int, m: int, x=Fraction(0), prec: int | None = None):
    """
    For a polynomial of degree d < m the corrected mean H_p + sum(corrections)
    equals the exact integral up to rounding. Returns the gap.
    """
    if f.polynomial is None:
        raise InvalidArgument(f"{f.name} is not a polynomial integrand")
    if m <= f.polynomial.degree:
        raise InvalidArgument("order must exceed the degree", m=m, degree=f.polynomial.degree)
    exact = f.polynomial.integrate()
    with precision(prec) as bits:
        corrected = composite_mean(f, p, x) + mp.fsum(correction_terms(f, p, m, x))
        gap = abs(corrected - to_mpf(exact))
        allowed = mp.ldexp(1, -bits + 8) * (p + m + 1) * max(mp.one, abs(to_mpf(exact)))
        if gap > allowed:
            raise ToleranceFailure(f"{f.name}: corrected mean misses the exact integral",
                                   p=p, m=m, x=x, gap=gap)
        return gap


def signed_trapezoid_remainder(f: IntegrandSpec, p: int, m: int, quad_tol=None, prec: int | None = None):
    """
    Enclosure of R_{m,p} in

        int_0^1 f = T_p(f) - sum_{k<m} b_2k/((2k)! p^2k) delta f^(2k-1) + (-1)^(m+1) R_{m,p}

    for f with f^(2m-1) decreasing; 0 <= R_{m,p} <= 6 (2 pi p)^(-2m) (-delta f^(2m-1)).
    """
    _check_counts(p, m)
    order = 2 * m - 1
    f.require_order(order)
    if not f.decreasing(order):
        raise PreconditionViolated(f"{f.name}: f^({order}) is not known to be decreasing", order=order)
    with precision(prec) as bits:
        quad_tol = quad_tol if quad_tol is not None else default_quad_tol(bits)
        integral = reference_integral(f, quad_tol)
        trapezoid = (composite_mean(f, p, 0) + composite_mean(f, p, 1)) / 2
        corrections = mp.fsum(
            to_mpf(bernoulli_number(2 * k)) / factorial(2 * k) * f.delta(2 * k - 1) / mp.mpf(p) ** (2 * k)
            for k in range(1, m)
        )
        value = (-1) ** (m + 1) * (integral.value - trapezoid + corrections)
        radius = integral.error + quad_tol + mp.ldexp(1, -bits + 8) * (m + p + 1) * max(1, abs(integral.value))
        enclosure = hull(value - radius, value + radius)

        bound = upper(6 / (2 * pi_interval() * p) ** (2 * m) * (-to_interval(f.delta(order))))
        if upper(enclosure) < 0 or lower(enclosure) > bound:
            logger.error(f"signed remainder out of range for {f.name} p={p} m={m}: {mp.nstr(value, 10)}")
            raise BoundViolation(f"{f.name}: R_{m},{p} leaves [0, 6 (2 pi p)^(-2m) (-delta f^(2m-1))]",
                                 p=p, m=m, remainder=value, bound=bound)
        return enclosure


def signed_remainder_cor61(f: IntegrandSpec, m: int, quad_tol=None, prec: int | None = None):
    """
    Enclosure of R_m in

        int_0^1 f = (f(0) + f(1))/2 - sum_{k<m} b_2k/(2k)! delta f^(2k-1) + (-1)^(m+1) R_m

    for f with f^(2m-1) decreasing; 0 <= R_m <= 6 (2 pi)^(-2m) (-delta f^(2m-1)).
    """
    return signed_trapezoid_remainder(f, 1, m, quad_tol=quad_tol, prec=prec)


# ---------------------------------------------------------------------------
# Completely monotone tails
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneTerms:
    """
    A completely monotone g on [start, oo): deriv(k, s) encloses g^(k)(s)
    for an integer s, tail_integral(K) encloses int_K^oo g.
    """
    name: str
    deriv: Callable
    tail_integral: Callable


def monotone_tail_sum(terms: MonotoneTerms, start: int, m: int = 3, prec: int | None = None):
    """
    Enclosure of sum_{k >= start} g(k). The signed remainder above, applied to
    -g on every [k, k + 1] and telescoped, gives

        sum = int_K^oo g + g(K)/2 - sum_{j<m} b_2j/(2j)! g^(2j-1)(K) - (-1)^m R,
        0 <= R <= 6 (2 pi)^(-2m) |g^(2m-1)(K)|.
    """
    if m < 1:
        raise InvalidArgument("order m must be >= 1", m=m)
    with precision(prec):
        derivs = [to_interval(terms.deriv(k, start)) for k in range(2 * m + 1)]
        for k, value in enumerate(derivs):
            signed = value if k % 2 == 0 else -value
            if upper(signed) < 0:
                raise PreconditionViolated(f"{terms.name}: derivative {k} has the wrong sign at {start}",
                                           order=k, start=start)
        total = to_interval(terms.tail_integral(start)) + derivs[0] / 2
        for j in range(1, m):
            total -= to_interval(bernoulli_number(2 * j)) / factorial(2 * j) * derivs[2 * j - 1]
        spread = upper(6 / (2 * pi_interval()) ** (2 * m) * abs(derivs[2 * m - 1]))
        remainder = iv.mpf((0, spread))
        total = total - remainder if m % 2 == 0 else total + remainder
        return total
