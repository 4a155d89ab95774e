# exact_core/number_theory.py
"""
Arithmetic properties of Bernoulli numbers: von Staudt-Clausen, the
integrality corollaries and tangent numbers.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt, prod

from core.exceptions import InvalidArgument, NotInteger

from .bernoulli import bernoulli_number

__all__ = [
    "is_prime",
    "staudt_primes",
    "von_staudt_clausen",
    "bernoulli_denominator_check",
    "integrality_von5",
    "tangent_number",
    "tangent_integrality",
]

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs here never exceed 2n + 1."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def staudt_primes(n: int) -> list[int]:
    """Primes q with (q - 1) | 2n, ascending."""
    if n < 1:
        raise InvalidArgument("von Staudt-Clausen needs n >= 1", n=n)
    divisors = [d for d in range(1, 2 * n + 1) if (2 * n) % d == 0]
    return sorted(d + 1 for d in divisors if is_prime(d + 1))


def von_staudt_clausen(n: int) -> tuple[list[int], int]:
    """
    Return (primes, b_2n + sum 1/q).

    The second component must be an integer; NotInteger means the cached
    Bernoulli numbers are wrong.
    """
    primes = staudt_primes(n)
    total = bernoulli_number(2 * n) + sum(Fraction(1, q) for q in primes)
    if total.denominator != 1:
        logger.error(f"von Staudt-Clausen sum for n={n} is not integral: {total}")
        raise NotInteger(
            "b_2n plus the reciprocal primes is not an integer",
            n=n, primes=primes, value=total,
        )
    return primes, total.numerator


def bernoulli_denominator_check(n: int) -> bool:
    """The reduced denominator of b_2n is the product of the von Staudt-Clausen primes."""
    return bernoulli_number(2 * n).denominator == prod(staudt_primes(n))


def integrality_von5(m: int, k: int) -> bool:
    """m (m^k - 1) b_k has denominator 1."""
    if m < 1 or k < 0:
        raise InvalidArgument("need m >= 1 and k >= 0", m=m, k=k)
    return (m * (m ** k - 1) * bernoulli_number(k)).denominator == 1


@lru_cache(maxsize=None)
def tangent_number(k: int) -> int:
    """
    a_{2k-1} = tan^(2k-1)(0), from
    a_1 = 1, a_{2n+1} = sum_{j<n} C(2n, 2j+1) a_{2j+1} a_{2(n-j)-1}.
    """
    if k < 1:
        raise InvalidArgument("tangent numbers are indexed from 1", k=k)
    if k == 1:
        return 1
    n = k - 1
    return sum(
        comb(2 * n, 2 * j + 1) * tangent_number(j + 1) * tangent_number(n - j)
        for j in range(n)
    )


def tangent_integrality(n: int) -> bool:
    """
    2^n (2^n - 1) b_n / n is an integer, and for even n = 2k the tangent
    number a_{2k-1} equals 2^{2k}(2^{2k}-1)(-1)^{k+1} b_{2k} / (2k).
    """
    if n < 1:
        raise InvalidArgument("tangent integrality needs n >= 1", n=n)
    value = Fraction(2 ** n * (2 ** n - 1)) * bernoulli_number(n) / n
    if value.denominator != 1:
        return False
    if n % 2:
        return True
    k = n // 2
    return value * (-1) ** (k + 1) == tangent_number(k)
