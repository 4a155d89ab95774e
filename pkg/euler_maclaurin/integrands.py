# euler_maclaurin/integrands.py
"""
Integrands on [0, 1] with closed-form derivatives, and the built-in corpus
addressable by name: ``exp``, ``reciprocal1p``, ``cos2pi``, ``log1p`` and
``poly:<c0>,<c1>,...`` (ascending coefficients, each an integer or "num/den").
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from mpmath import iv, mp

from analytic_core.norms import evaluate_mp
from analytic_core.precision import precision, to_interval, to_mpf, upper
from core.exceptions import (
    BoundViolation,
    IdentityViolation,
    InvalidArgument,
    PreconditionViolated,
    ToleranceFailure,
)
from exact_core.polynomial import RatPolynomial, parse_rational

logger = logging.getLogger(__name__)

MAX_ORDER = 24

CORPUS_NAMES = ('exp', 'reciprocal1p', 'cos2pi', 'log1p')


@dataclass(frozen=True)
class IntegrandSpec:
    """
    f together with f^(k), the endpoint differences delta f^(k) = f^(k)(1) - f^(k)(0),
    upper bounds for sup |f^(m)| on [0, 1] and the orders k where f^(k) is
    non-increasing on [0, 1].
    """
    name: str
    value: Callable
    deriv: Callable
    delta: Callable
    sup_deriv: Callable
    monotone_flags: frozenset = field(default_factory=frozenset)
    max_order: int = MAX_ORDER
    polynomial: RatPolynomial | None = None

    def __call__(self, x):
        return self.value(x)

    def decreasing(self, k: int) -> bool:
        return k in self.monotone_flags

    def require_order(self, k: int) -> None:
        if k < 0 or k > self.max_order:
            raise InvalidArgument(f"{self.name}: derivative order outside 0..{self.max_order}", order=k)


def _bound(value):
    """Upper endpoint of an exact or interval value, as an mp.mpf."""
    return upper(to_interval(value))


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

def exp_integrand() -> IntegrandSpec:
    return IntegrandSpec(
        name='exp',
        value=mp.exp,
        deriv=lambda k, x: mp.exp(x),
        delta=lambda k: mp.e - 1,
        sup_deriv=lambda m: _bound(+iv.e),
    )


def reciprocal1p_integrand() -> IntegrandSpec:
    # f^(k) = (-1)^k k!/(1+t)^(k+1)
    return IntegrandSpec(
        name='reciprocal1p',
        value=lambda x: 1 / (1 + x),
        deriv=lambda k, x: (-1) ** k * factorial(k) / (1 + x) ** (k + 1),
        delta=lambda k: (-1) ** k * factorial(k) * (mp.ldexp(1, -k - 1) - 1),
        sup_deriv=lambda m: _bound(factorial(m)),
        monotone_flags=frozenset(range(0, MAX_ORDER + 1, 2)),
    )


def cos2pi_integrand() -> IntegrandSpec:
    return IntegrandSpec(
        name='cos2pi',
        value=lambda x: mp.cospi(2 * x),
        deriv=lambda k, x: (2 * mp.pi) ** k * mp.cospi(2 * x + mp.mpf(k) / 2),
        delta=lambda k: mp.zero,
        sup_deriv=lambda m: _bound((2 * iv.pi) ** m),
    )


def _log1p_deriv(k, x):
    if k == 0:
        return mp.log1p(x)
    return (-1) ** (k - 1) * factorial(k - 1) / (1 + x) ** k


def _log1p_delta(k):
    if k == 0:
        return mp.log(2)
    return (-1) ** (k - 1) * factorial(k - 1) * (mp.ldexp(1, -k) - 1)


def log1p_integrand() -> IntegrandSpec:
    # odd derivatives (k-1)!/(1+t)^k decrease on [0, 1]
    return IntegrandSpec(
        name='log1p',
        value=mp.log1p,
        deriv=_log1p_deriv,
        delta=_log1p_delta,
        sup_deriv=lambda m: _bound(+iv.ln2) if m == 0 else _bound(factorial(m - 1)),
        monotone_flags=frozenset(range(1, MAX_ORDER + 1, 2)),
    )


def _derivatives(poly: RatPolynomial, count: int) -> list[RatPolynomial]:
    result = [poly]
    for _ in range(count):
        result.append(result[-1].derivative())
    return result


def _non_increasing_on_grid(derivative: RatPolynomial, grid: int = 1000) -> bool:
    """Exact check that the next derivative is <= 0 at every grid point."""
    if derivative.is_zero:
        return True
    return all(derivative.evaluate(Fraction(i, grid)) <= 0 for i in range(grid + 1))


def polynomial_integrand(poly: RatPolynomial, name: str | None = None) -> IntegrandSpec:
    """Wrap a rational polynomial; everything is derived exactly from its coefficients."""
    derivs = _derivatives(poly, MAX_ORDER + 1)
    flags = frozenset(k for k in range(MAX_ORDER + 1) if _non_increasing_on_grid(derivs[k + 1]))

    def value(x):
        return evaluate_mp(poly, x)

    def deriv(k, x):
        return evaluate_mp(derivs[k], x)

    def delta(k):
        return to_mpf(derivs[k].evaluate(1) - derivs[k].evaluate(0))

    def sup_deriv(m):
        # |t| <= 1 on [0, 1], so the absolute coefficient sum bounds the sup
        return _bound(sum((abs(c) for c in derivs[m].coeffs), Fraction(0)))

    if name is None:
        name = 'poly:' + ','.join(str(c) for c in poly.coeffs) if not poly.is_zero else 'poly:0'
    return IntegrandSpec(
        name=name,
        value=value,
        deriv=deriv,
        delta=delta,
        sup_deriv=sup_deriv,
        monotone_flags=flags,
        polynomial=poly,
    )


def monomial_integrand(j: int) -> IntegrandSpec:
    """t^j."""
    return polynomial_integrand(RatPolynomial.monomial(j))


_BUILDERS = {
    'exp': exp_integrand,
    'reciprocal1p': reciprocal1p_integrand,
    'cos2pi': cos2pi_integrand,
    'log1p': log1p_integrand,
}


def get_integrand(name: str) -> IntegrandSpec:
    """Look up a corpus integrand by its CLI/API name."""
    name = name.strip()
    if name.startswith('poly:'):
        body = name[len('poly:'):]
        if not body:
            raise InvalidArgument("poly: needs at least one coefficient", name=name)
        coeffs = [parse_rational(part) for part in body.split(',')]
        return polynomial_integrand(RatPolynomial(coeffs), name=name)
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise InvalidArgument(f"Unknown integrand {name!r}", known=', '.join(CORPUS_NAMES) + ', poly:<coeffs>')


def corpus(max_degree: int = 6) -> list[IntegrandSpec]:
    """The sweep corpus: the named integrands plus t^j for j <= max_degree."""
    return [builder() for builder in _BUILDERS.values()] + [monomial_integrand(j) for j in range(max_degree + 1)]


# ---------------------------------------------------------------------------
# Validators
# ---------------------------------------------------------------------------

def validate_integrand(f: IntegrandSpec, grid: int = 1000, samples: int = 10, seed: int = 0,
                       prec: int | None = None) -> bool:
    """
    Cross-check an integrand against itself: delta(k) against deriv(k, 1) - deriv(k, 0),
    sup_deriv(m) against the grid maximum of |f^(m)|, every deriv(k, .) against
    a central difference of deriv(k - 1, .) at random points, and every
    monotone flag on the grid.
    """
    with precision(prec) as bits:
        points = [to_mpf(Fraction(i, grid)) for i in range(grid + 1)]
        slack = mp.ldexp(1, -bits + 8)

        for k in range(f.max_order + 1):
            endpoint = f.deriv(k, mp.one) - f.deriv(k, mp.zero)
            if abs(endpoint - f.delta(k)) > slack * max(1, f.sup_deriv(k)):
                raise IdentityViolation(f"{f.name}: delta({k}) disagrees with the endpoint derivatives",
                                        delta=f.delta(k), endpoints=endpoint)

        for m in range(f.max_order + 1):
            observed = max(abs(f.deriv(m, t)) for t in points)
            if observed > f.sup_deriv(m) * (1 + slack):
                raise BoundViolation(f"{f.name}: sup_deriv({m}) is below the grid maximum",
                                     bound=f.sup_deriv(m), observed=observed)

        step = mp.ldexp(1, -(bits // 4))
        tolerance = mp.ldexp(1, -(bits // 8))
        rng = random.Random(seed)
        for _ in range(samples):
            x = step + (1 - 2 * step) * mp.mpf(rng.random())
            for k in range(1, f.max_order + 1):
                central = (f.deriv(k - 1, x + step) - f.deriv(k - 1, x - step)) / (2 * step)
                exact = f.deriv(k, x)
                if abs(central - exact) > tolerance * max(1, f.sup_deriv(k)):
                    raise ToleranceFailure(f"{f.name}: deriv({k}) fails the finite-difference check",
                                           x=x, central=central, closed_form=exact)

        for k in sorted(f.monotone_flags):
            values = [f.deriv(k, t) for t in points]
            for left, right in zip(values, values[1:]):
                if right > left + slack * max(1, abs(left)):
                    raise PreconditionViolated(f"{f.name}: f^({k}) is not decreasing on the grid", order=k)

    logger.debug(f"integrand {f.name} validated up to order {f.max_order}")
    return True
