# analytic_core/dilcher.py
"""
Normalized Bernoulli polynomials converge to cos/sin(2 pi z): the truncated
Taylor polynomials T_n, the complex-plane error bound e^(4 pi |z|)/2^n, and
the uniform deviation from cos(2 pi x) / sin(2 pi x) on [0, 1].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial

from mpmath import mp

from core.exceptions import BoundViolation, InvalidArgument
from exact_core.bernoulli import bernoulli_polynomial

from .norms import evaluate_mp, grid_points
from .precision import precision, to_mpf

logger = logging.getLogger(__name__)


def dilcher_truncation(n: int, z, prec: int | None = None):
    """T_n(z) = sum_k (-1)^k (2 pi z)^(n-2k)/(n-2k)! over k <= n/2, signed by (-1)^floor(n/2)."""
    if n < 2:
        raise InvalidArgument("T_n needs n >= 2", n=n)
    with precision(prec):
        w = 2 * mp.pi * mp.mpc(z)
        total = mp.mpc(0)
        for k in range(n // 2 + 1):
            total += (-1) ** k * w ** (n - 2 * k) / factorial(n - 2 * k)
        return (-1) ** (n // 2) * total


@dataclass
class DilcherReport:
    n: int
    z: object
    normalized: object
    truncation: object
    deviation: object
    bound: object


def dilcher_check(n: int, z, prec: int | None = None) -> DilcherReport:
    """
    |(-1)^floor(n/2) (2 pi)^n/(2 n!) B_n(z + 1/2) - T_n(z)| < e^(4 pi |z|)/2^n.
    """
    if n < 2:
        raise InvalidArgument("the bound needs n >= 2", n=n)
    with precision(prec):
        z = mp.mpc(z)
        scale = (-1) ** (n // 2) * (2 * mp.pi) ** n / (2 * factorial(n))
        normalized = scale * evaluate_mp(bernoulli_polynomial(n), z + mp.mpf(1) / 2)
        truncation = dilcher_truncation(n, z)
        deviation = abs(normalized - truncation)
        bound = mp.exp(4 * mp.pi * abs(z)) / mp.mpf(2) ** n
        if not deviation < bound:
            logger.error(f"Dilcher bound fails at n={n}, z={z}: {deviation} >= {bound}")
            raise BoundViolation("normalized B_n deviates beyond e^(4 pi |z|)/2^n", n=n, z=z, deviation=deviation)
        return DilcherReport(n=n, z=z, normalized=normalized, truncation=truncation, deviation=deviation, bound=bound)


def _max_deviation(n: int, odd: bool, grid: int | None):
    degree = 2 * n + 1 if odd else 2 * n
    poly = bernoulli_polynomial(degree)
    scale = (-1) ** (n + 1) * (2 * mp.pi) ** degree / (2 * factorial(degree))
    target = mp.sinpi if odd else mp.cospi
    worst = mp.mpf(0)
    for t in grid_points(grid):
        x = to_mpf(t)
        worst = max(worst, abs(scale * evaluate_mp(poly, x) - target(2 * x)))
    return worst


def normalized_convergence_check(n: int, grid: int | None = None, prec: int | None = None):
    """
    Max over the grid of |(-1)^(n+1) (2 pi)^(2n)/(2 (2n)!) B_2n(x) - cos(2 pi x)|.

    It must stay below 3/2^(2n); the odd analogue against sin(2 pi x) must
    stay below 3/2^(2n+1). Returns the even deviation.
    """
    if n < 1:
        raise InvalidArgument("convergence check needs n >= 1", n=n)
    with precision(prec):
        even = _max_deviation(n, odd=False, grid=grid)
        odd = _max_deviation(n, odd=True, grid=grid)
        if not even < mp.mpf(3) / 4 ** n:
            raise BoundViolation("even normalized deviation exceeds 3/2^(2n)", n=n, deviation=even)
        if not odd < mp.mpf(3) / 2 ** (2 * n + 1):
            raise BoundViolation("odd normalized deviation exceeds 3/2^(2n+1)", n=n, deviation=odd)
        logger.debug(f"normalized convergence n={n}: even {mp.nstr(even, 5)}, odd {mp.nstr(odd, 5)}")
        return even
