# analytic_core/norms.py
"""
Real-variable bounds for Bernoulli polynomials on [0, 1]: periodic
extensions, sup and L1 norms, the zeros alpha_n of B_2n in (0, 1/2), and the
two-sided estimate of |b_2n| against (2n)!/(2 pi)^(2n).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor

from mpmath import iv, mp

from core.exceptions import BoundViolation, BracketFailure, InvalidArgument
from exact_core.bernoulli import bernoulli_number, bernoulli_polynomial
from exact_core.polynomial import RatPolynomial, as_rational

from .precision import (
    certify_positive,
    hull,
    lower,
    mpf_to_fraction,
    pi_interval,
    precision,
    setting,
    to_interval,
    to_mpf,
    upper,
)

logger = logging.getLogger(__name__)

CRITICAL_POINTS = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


# ---------------------------------------------------------------------------
# Evaluation helpers
# ---------------------------------------------------------------------------

def evaluate_mp(poly: RatPolynomial, x):
    """Horner evaluation at an mp.mpf or mp.mpc point."""
    result = mp.mpf(0)
    for c in reversed(poly.coeffs):
        result = result * x + to_mpf(c)
    return result


def evaluate_iv(poly: RatPolynomial, x):
    """Horner evaluation over intervals; the result encloses poly(x)."""
    x = to_interval(x)
    result = iv.mpf(0)
    for c in reversed(poly.coeffs):
        result = result * x + to_interval(c)
    return result


def grid_points(count: int | None = None) -> list[Fraction]:
    """Uniform grid k/count on [0, 1] merged with the critical points."""
    count = count or setting('GRID_POINTS')
    points = {Fraction(k, count) for k in range(count + 1)}
    points.update(CRITICAL_POINTS)
    return sorted(points)


def _fractional_part(x):
    if isinstance(x, (int, Fraction)):
        x = as_rational(x)
        return x - floor(x)
    return x - mp.floor(x)


def periodic_bernoulli(n: int, x, prec: int | None = None):
    """B_n({x}) as an mp.mpf; rational x is reduced exactly first."""
    if n < 0:
        raise InvalidArgument("index must be >= 0", n=n)
    with precision(prec):
        t = _fractional_part(x)
        if isinstance(t, Fraction):
            return to_mpf(bernoulli_polynomial(n).evaluate(t))
        return evaluate_mp(bernoulli_polynomial(n), t)


def periodic_bernoulli_interval(n: int, x, prec: int | None = None):
    """Enclosure of B_n({x}); x must not straddle an integer."""
    if n < 0:
        raise InvalidArgument("index must be >= 0", n=n)
    with precision(prec):
        if isinstance(x, (int, Fraction)):
            t = _fractional_part(x)
            return to_interval(bernoulli_polynomial(n).evaluate(t))
        x = to_interval(x)
        shift = mp.floor(lower(x))
        if mp.floor(upper(x)) != shift:
            raise InvalidArgument("interval straddles an integer", x=x)
        return evaluate_iv(bernoulli_polynomial(n), x - to_interval(shift))


# ---------------------------------------------------------------------------
# Sup norms
# ---------------------------------------------------------------------------

@dataclass
class SupNormReport:
    n: int
    even_sup: Fraction
    odd_bound: object
    odd_quarter_lower: object
    odd_grid_max: object
    odd_quarter_value: Fraction


def sup_norm_report(n: int, grid: int | None = None, prec: int | None = None) -> SupNormReport:
    """
    sup|B_2n| = |b_2n|, and for B_{2n+1}: the grid maximum stays below
    (2n+1)|b_2n|/(2 pi) while |B_{2n+1}(1/4)| stays above (1 - 4^(1-n)) times it.
    """
    if n < 1:
        raise InvalidArgument("sup-norm report needs n >= 1", n=n)
    b2n = abs(bernoulli_number(2 * n))
    odd = bernoulli_polynomial(2 * n + 1)
    quarter = abs(odd.evaluate(Fraction(1, 4)))
    with precision(prec):
        odd_bound = to_interval((2 * n + 1) * b2n) / (2 * pi_interval())
        factor = 1 - Fraction(4, 4 ** n)
        quarter_lower = to_interval(factor) * odd_bound

        grid_max = max(abs(evaluate_mp(odd, to_mpf(t))) for t in grid_points(grid))
        if not grid_max <= lower(odd_bound):
            raise BoundViolation("grid maximum of |B_{2n+1}| exceeds its bound", n=n, grid_max=grid_max)
        # the n = 1 lower bound is exactly zero
        if lower(to_interval(quarter) - quarter_lower) < 0:
            raise BoundViolation("|B_{2n+1}(1/4)| is below its lower bound", n=n, value=quarter)

        return SupNormReport(
            n=n,
            even_sup=b2n,
            odd_bound=odd_bound,
            odd_quarter_lower=quarter_lower,
            odd_grid_max=grid_max,
            odd_quarter_value=quarter,
        )


# ---------------------------------------------------------------------------
# Zeros of B_2n
# ---------------------------------------------------------------------------

@dataclass
class AlphaZero:
    n: int
    lo: Fraction
    hi: Fraction
    bracket: object
    width: Fraction
    steps: int
    initial_width: Fraction | None = None


def _alpha_bounds(n: int):
    """Enclosure of 1/4 - 1/(pi 4^n) at the active precision."""
    return to_interval(Fraction(1, 4)) - 1 / (pi_interval() * 4 ** n)


def find_alpha(n: int, tol=Fraction(1, 2 ** 64), prec: int | None = None) -> AlphaZero:
    """
    Bisect B_2n for its unique zero in (0, 1/2).

    Signs are taken from exact rational evaluation, so the bracket is
    certified. Bisection continues past `tol` until the bracket separates
    from 1/4 - 1/(pi 4^n) and from 1/4, which both bound alpha_n strictly.
    """
    if n < 1:
        raise InvalidArgument("alpha_n needs n >= 1", n=n)
    tol = as_rational(tol) if not isinstance(tol, mp.mpf) else mpf_to_fraction(tol)
    if tol <= 0:
        raise InvalidArgument("tolerance must be positive", tol=tol)

    poly = bernoulli_polynomial(2 * n)
    sign = -1 if n % 2 else 1

    def f(x):
        return sign * poly.evaluate(x)

    # 1/3 > 1/pi, so this bracket contains the certified interval for alpha_n
    lo, hi = Fraction(1, 4) - Fraction(1, 3 * 4 ** n), Fraction(1, 4)
    if not (f(lo) < 0 < f(hi)):
        logger.debug(f"alpha_{n}: guided bracket has no sign change, falling back to [0, 1/2]")
        lo, hi = Fraction(0), Fraction(1, 2)
        if not (f(lo) < 0 < f(hi)):
            raise BracketFailure("no sign change of B_2n on [0, 1/2]", n=n)

    initial_width = hi - lo
    with precision(prec) as bits:
        bound_lo = _alpha_bounds(n)
        steps = 0
        max_steps = 4 * n + bits + tol.denominator.bit_length() + 8
        while True:
            separated = lower(to_interval(lo) - bound_lo) > 0 and hi < Fraction(1, 4)
            if hi - lo <= tol and separated:
                break
            if steps >= max_steps:
                raise BoundViolation(
                    "alpha_n bracket does not separate from its bounds", n=n, lo=lo, hi=hi,
                )
            mid = (lo + hi) / 2
            value = f(mid)
            steps += 1
            if value == 0:
                lo = hi = mid
            elif value < 0:
                lo = mid
            else:
                hi = mid
        logger.debug(f"alpha_{n} bracketed in {steps} steps, width {float(hi - lo):.3e}")
        return AlphaZero(n=n, lo=lo, hi=hi, bracket=hull(lo, hi), width=hi - lo, steps=steps,
                         initial_width=initial_width)


def alpha_monotone_check(n: int, prec: int | None = None) -> bool:
    """alpha_n < alpha_{n+1}, decided from disjoint certified brackets."""
    first, second = find_alpha(n, prec=prec), find_alpha(n + 1, prec=prec)
    return first.hi < second.lo


def alpha_bisection_check(n: int, prec: int | None = None) -> AlphaZero:
    """
    Every bisection step halves the bracket, and the final bracket lies
    strictly inside (1/4 - 1/(pi 4^n), 1/4).
    """
    alpha = find_alpha(n, prec=prec)
    with precision(prec):
        if alpha.width and alpha.width * 2 ** alpha.steps != alpha.initial_width:
            raise BoundViolation("alpha_n bracket did not halve at every step", n=n, steps=alpha.steps,
                                 width=alpha.width, initial_width=alpha.initial_width)
        if not (lower(to_interval(alpha.lo) - _alpha_bounds(n)) > 0 and alpha.hi < Fraction(1, 4)):
            raise BoundViolation("alpha_n bracket leaves its two-sided bound", n=n, lo=alpha.lo, hi=alpha.hi)
    return alpha


def periodic_shift_check(n_max: int = 8, samples: int = 100, seed: int = 0, prec: int | None = None) -> int:
    """
    B_n({x + 1}) = B_n({x}) to one ulp of the value, for n <= n_max and
    random double-precision x in [0, 4). Returns the number of cases.
    """
    rng = random.Random(seed)
    checked = 0
    with precision(prec) as bits:
        for _ in range(samples):
            x = mp.mpf(rng.uniform(0, 4))
            for n in range(n_max + 1):
                here, shifted = periodic_bernoulli(n, x), periodic_bernoulli(n, x + 1)
                ulp = mp.ldexp(max(mp.one, abs(here)), 1 - bits)
                if abs(shifted - here) > ulp:
                    raise BoundViolation("periodic extension is not 1-periodic", n=n, x=x,
                                         difference=abs(shifted - here))
                checked += 1
    return checked


# ---------------------------------------------------------------------------
# L1 norms
# ---------------------------------------------------------------------------

def _l1_value(n: int, bits: int):
    """L1 enclosure at exactly `bits`; the alpha bracket is refined to match."""
    with precision(bits):
        if n % 2:
            return to_interval((4 - Fraction(2) ** (1 - n)) / (n + 1) * abs(bernoulli_number(n + 1)))
        alpha = find_alpha(n // 2, tol=Fraction(1, 2 ** (bits // 2 + 8)), prec=bits)
        extremum = evaluate_iv(bernoulli_polynomial(n + 1), alpha.bracket)
        return to_interval(Fraction(4, n + 1)) * abs(extremum)


def l1_norm_enclosure(n: int, prec: int | None = None):
    """
    Interval enclosing the L1 norm of B_n on [0, 1].

    Even n = 2m uses 4/(n+1) |B_{n+1}(alpha_m)|; B_{n+1} is evaluated on the
    alpha bracket, so the enclosure is certified. Odd n uses
    (4 - 2^(1-n))/(n+1) |b_{n+1}|.
    """
    if n < 1:
        raise InvalidArgument("L1 norm needs n >= 1", n=n)
    with precision(prec) as bits:
        certify_positive(
            lambda b: to_interval(16 * factorial(n)) / (2 * pi_interval()) ** (n + 1) - _l1_value(n, b),
            prec=bits, label=f"L1 norm bound n={n}",
        )
        return _l1_value(n, bits)


def l1_norm(n: int, prec: int | None = None):
    with precision(prec):
        enclosure = l1_norm_enclosure(n, prec)
        return (lower(enclosure) + upper(enclosure)) / 2


# ---------------------------------------------------------------------------
# |b_2n| against (2n)!/(2 pi)^(2n)
# ---------------------------------------------------------------------------

@dataclass
class B2nBound:
    n: int
    lower: object
    value: Fraction
    upper: object


def b2n_two_sided_bound(n: int, prec: int | None = None) -> B2nBound:
    """2(2n)!/(2pi)^(2n) < |b_2n| < 2(1 + 3/4^n)(2n)!/(2pi)^(2n), both certified."""
    if n < 1:
        raise InvalidArgument("bound needs n >= 1", n=n)
    value = abs(bernoulli_number(2 * n))
    with precision(prec) as bits:
        def base():
            return to_interval(2 * factorial(2 * n)) / (2 * pi_interval()) ** (2 * n)

        def inflated():
            return base() * to_interval(1 + Fraction(3, 4 ** n))

        certify_positive(lambda _: to_interval(value) - base(), prec=bits, label=f"|b_{2 * n}| lower bound")
        certify_positive(lambda _: inflated() - to_interval(value), prec=bits, label=f"|b_{2 * n}| upper bound")
        low, high = base(), inflated()
        return B2nBound(n=n, lower=low, value=value, upper=high)


def sharpness_ratio(n: int, prec: int | None = None):
    """|b_2n| (2 pi)^(2n) / (2 (2n)!), which equals zeta(2n)."""
    if n < 1:
        raise InvalidArgument("ratio needs n >= 1", n=n)
    with precision(prec):
        return to_mpf(abs(bernoulli_number(2 * n))) * (2 * mp.pi) ** (2 * n) / (2 * factorial(2 * n))
