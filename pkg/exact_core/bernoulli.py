# exact_core/bernoulli.py
"""
Bernoulli numbers b_n = B_n(0) (with b_1 = -1/2) and Bernoulli polynomials.

Numbers come from the recurrence
    b_n = -1/(n+1) * sum_{k<n} C(n+1, k) b_k
and polynomials from B_n(X) = sum_k C(n, k) b_{n-k} X^k. Both are memoized
in a process-wide cache that grows monotonically.
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from math import comb

from core.exceptions import InvalidArgument

from .polynomial import RatPolynomial, as_rational

__all__ = [
    "BernoulliCache",
    "default_cache",
    "bernoulli_number",
    "bernoulli_polynomial",
    "poly_eval",
]

logger = logging.getLogger(__name__)


class BernoulliCache:
    """
    Growable tables numbers[n] = b_n and polys[n] = B_n.

    Reads of already-filled indices are lock-free; growth happens under a
    single writer lock and always fills every index up to the request.
    """

    def __init__(self):
        self.numbers: list[Fraction] = [Fraction(1)]
        self.polys: list[RatPolynomial] = [RatPolynomial.constant(1)]
        self._lock = threading.Lock()

    def _grow_numbers(self, n: int) -> None:
        with self._lock:
            start = len(self.numbers)
            for m in range(start, n + 1):
                acc = sum(comb(m + 1, k) * self.numbers[k] for k in range(m))
                self.numbers.append(-Fraction(acc) / (m + 1))
            if n >= start:
                logger.debug(f"Bernoulli numbers extended from {start} to {n}")

    def _grow_polys(self, n: int) -> None:
        self._grow_numbers(n)
        with self._lock:
            for m in range(len(self.polys), n + 1):
                self.polys.append(
                    RatPolynomial(comb(m, k) * self.numbers[m - k] for k in range(m + 1))
                )

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise InvalidArgument("Bernoulli index must be >= 0", n=n)
        if n >= len(self.numbers):
            self._grow_numbers(n)
        return self.numbers[n]

    def polynomial(self, n: int) -> RatPolynomial:
        if n < 0:
            raise InvalidArgument("Bernoulli index must be >= 0", n=n)
        if n >= len(self.polys):
            self._grow_polys(n)
        return self.polys[n]

    def numbers_upto(self, n: int) -> list[Fraction]:
        self.number(n)
        return self.numbers[: n + 1]


default_cache = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return default_cache.number(n)


def bernoulli_polynomial(n: int) -> RatPolynomial:
    return default_cache.polynomial(n)


def poly_eval(p: RatPolynomial, x) -> Fraction:
    """Exact Horner evaluation of p at a rational point."""
    return p.evaluate(as_rational(x))
