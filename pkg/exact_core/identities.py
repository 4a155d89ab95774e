# exact_core/identities.py
"""
Exact identities satisfied by Bernoulli numbers and polynomials.

Every *_check function returns a plain bool computed with exact rational
arithmetic. The alternative formulas for b_m (Gould, binomial sums,
quadratic and multiplication-derived recurrences) are verification paths
only; the canonical values always come from bernoulli.py.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from core.exceptions import IdentityViolation, InvalidArgument

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .polynomial import RatPolynomial, X, as_rational

__all__ = [
    "forward_difference_check",
    "defining_conditions_check",
    "reflection_check",
    "derivative_check",
    "raabe_check",
    "half_value_check",
    "sign_rule_check",
    "addition_formula",
    "monomial_in_bernoulli_basis",
    "reconstruct_monomial",
    "power_sum",
    "power_sum_polynomial",
    "quadratic_recurrence_check",
    "gould_formula",
    "binomial_sum_formula",
    "multiplication_formula_check",
    "doubling_recurrence",
    "convolution_identity_check",
    "l2_inner_product",
    "zeta_even_exact",
    "eta_even_exact",
]


def _require(condition: bool, message: str, **diagnostics) -> None:
    if not condition:
        raise InvalidArgument(message, **diagnostics)


# ---------------------------------------------------------------------------
# Defining conditions and the basic symmetries
# ---------------------------------------------------------------------------

def forward_difference_check(n: int) -> bool:
    """B_n(X+1) - B_n(X) == n X^(n-1)."""
    _require(n >= 1, "forward difference needs n >= 1", n=n)
    b = bernoulli_polynomial(n)
    return b.shift(1) - b == RatPolynomial.monomial(n - 1, n)


def defining_conditions_check(n: int) -> bool:
    """Constant B_0 = 1, the forward difference, and zero mean on [0, 1]."""
    _require(n >= 0, "index must be >= 0", n=n)
    b = bernoulli_polynomial(n)
    if n == 0:
        return b == 1
    return (
        forward_difference_check(n)
        and b.integrate(0, 1) == 0
        and b.degree == n
        and b.leading == 1
    )


def reflection_check(n: int) -> bool:
    """B_n(1-X) == (-1)^n B_n(X)."""
    _require(n >= 1, "reflection needs n >= 1", n=n)
    b = bernoulli_polynomial(n)
    return b.compose(1 - X) == b * (-1) ** n


def derivative_check(n: int) -> bool:
    """B_n' == n B_{n-1}."""
    _require(n >= 1, "derivative identity needs n >= 1", n=n)
    return bernoulli_polynomial(n).derivative() == bernoulli_polynomial(n - 1) * n


def raabe_check(n: int, p: int) -> bool:
    """(1/p) sum_{k<p} B_n((X+k)/p) == p^(-n) B_n(X)."""
    _require(n >= 1 and p >= 1, "Raabe needs n >= 1 and p >= 1", n=n, p=p)
    b = bernoulli_polynomial(n)
    lhs = RatPolynomial()
    for k in range(p):
        lhs = lhs + b.compose(RatPolynomial([Fraction(k, p), Fraction(1, p)]))
    return lhs / p == b / Fraction(p) ** n


def half_value_check(n: int) -> bool:
    """B_n(1/2) == (2^(1-n) - 1) b_n."""
    value = bernoulli_polynomial(n).evaluate(Fraction(1, 2))
    return value == (Fraction(2) ** (1 - n) - 1) * bernoulli_number(n)


def sign_rule_check(n: int) -> bool:
    """b_{2n+1} = 0 and sign(b_{2n}) = (-1)^(n+1) for n >= 1."""
    _require(n >= 1, "sign rule needs n >= 1", n=n)
    even = bernoulli_number(2 * n)
    positive = n % 2 == 1
    return bernoulli_number(2 * n + 1) == 0 and even != 0 and (even > 0) == positive


def addition_formula(n: int, y) -> RatPolynomial:
    """sum_k C(n,k) B_{n-k}(X) y^k, which equals B_n(X + y)."""
    _require(n >= 0, "index must be >= 0", n=n)
    y = as_rational(y)
    result = RatPolynomial()
    for k in range(n + 1):
        result = result + bernoulli_polynomial(n - k) * (comb(n, k) * y ** k)
    return result


# ---------------------------------------------------------------------------
# Bases, power sums
# ---------------------------------------------------------------------------

def monomial_in_bernoulli_basis(n: int) -> list[Fraction]:
    """Coefficients c_k with X^n = sum_k c_k B_k(X); c_k = C(n+1,k)/(n+1)."""
    _require(n >= 0, "index must be >= 0", n=n)
    return [Fraction(comb(n + 1, k), n + 1) for k in range(n + 1)]


def reconstruct_monomial(n: int) -> RatPolynomial:
    result = RatPolynomial()
    for k, c in enumerate(monomial_in_bernoulli_basis(n)):
        result = result + bernoulli_polynomial(k) * c
    return result


def power_sum(n: int, m: int) -> Fraction:
    """S_n(m) = 1^n + ... + m^n via (B_{n+1}(m+1) - b_{n+1})/(n+1)."""
    _require(n >= 0 and m >= 1, "power sums need n >= 0 and m >= 1", n=n, m=m)
    b = bernoulli_polynomial(n + 1)
    return (b.evaluate(m + 1) - bernoulli_number(n + 1)) / (n + 1)


def power_sum_polynomial(n: int) -> RatPolynomial:
    """S_n(X) as a polynomial in the upper limit X."""
    _require(n >= 0, "index must be >= 0", n=n)
    b = bernoulli_polynomial(n + 1)
    return (b.shift(1) - bernoulli_number(n + 1)) / (n + 1)


# ---------------------------------------------------------------------------
# Alternative formulas for b_m
# ---------------------------------------------------------------------------

def quadratic_recurrence_check(n: int) -> bool:
    """b_{2n} == -1/(2n+1) sum_{k=1}^{n-1} C(2n,2k) b_{2k} b_{2n-2k}."""
    _require(n >= 2, "quadratic recurrence needs n >= 2", n=n)
    acc = sum(
        comb(2 * n, 2 * k) * bernoulli_number(2 * k) * bernoulli_number(2 * n - 2 * k)
        for k in range(1, n)
    )
    return bernoulli_number(2 * n) == -Fraction(acc) / (2 * n + 1)


def gould_formula(m: int) -> Fraction:
    """sum_{n<=m} 1/(n+1) sum_k C(n,k) (-1)^k k^m, with 0^m = 0."""
    _require(m >= 1, "Gould's formula needs m >= 1", m=m)
    total = Fraction(0)
    for n in range(m + 1):
        inner = sum(comb(n, k) * (-1) ** k * k ** m for k in range(1, n + 1))
        total += Fraction(inner, n + 1)
    return total


def binomial_sum_formula(m: int) -> Fraction:
    """
    sum_{n=1}^{m+1} C(m+1,n) (-1)^(n+1)/n * (1^m + ... + (n-1)^m).

    The upper limit is m+1 and the sign (-1)^(n+1); with the range ending at
    m the n = 2 term that produces b_1 = -1/2 would be lost.
    """
    _require(m >= 1, "binomial-sum formula needs m >= 1", m=m)
    total = Fraction(0)
    partial = 0
    for n in range(1, m + 2):
        total += Fraction(comb(m + 1, n) * (-1) ** (n + 1) * partial, n)
        partial += n ** m
    return total


def doubling_recurrence(n: int) -> Fraction:
    """b_n = 1/(2(1-2^n)) sum_{j<n} 2^j C(n,j) b_j, from expanding B_n(1/2) two ways."""
    _require(n >= 1, "doubling recurrence needs n >= 1", n=n)
    acc = sum(2 ** j * comb(n, j) * bernoulli_number(j) for j in range(n))
    return Fraction(acc) / (2 * (1 - 2 ** n))


def multiplication_formula_check(n: int, w, z) -> bool:
    """
    B_n(zw) == w^n B_n(z) + 1/(n+1) sum_{j<n} C(n+1,j) B_j(z) w^(j-1) (B_{n+1-j}(w) - b_{n+1-j}).

    w^(j-1)(B_{n+1-j}(w) - b_{n+1-j}) is evaluated as w^j Q(w) with Q the exact
    quotient by X, so w = 0 is allowed.
    """
    _require(n >= 1, "multiplication formula needs n >= 1", n=n)
    w, z = as_rational(w), as_rational(z)
    lhs = bernoulli_polynomial(n).evaluate(z * w)
    rhs = w ** n * bernoulli_polynomial(n).evaluate(z)
    acc = Fraction(0)
    for j in range(n):
        quotient = (bernoulli_polynomial(n + 1 - j) - bernoulli_number(n + 1 - j)).divide_by_x()
        acc += comb(n + 1, j) * bernoulli_polynomial(j).evaluate(z) * w ** j * quotient.evaluate(w)
    rhs += acc / (n + 1)
    return lhs == rhs and doubling_recurrence(n) == bernoulli_number(n)


def convolution_identity_check(n: int) -> bool:
    """
    (1/(n+1)) sum_k B_k B_{n-k} == sum_{k<=n/2} C(n,2k) b_{2k}/((k+1)(2k+1)) B_{n-2k},
    plus, for n = 2m >= 4, the scalar identity obtained at X = 0.
    """
    _require(n >= 0, "index must be >= 0", n=n)
    lhs = RatPolynomial()
    for k in range(n + 1):
        lhs = lhs + bernoulli_polynomial(k) * bernoulli_polynomial(n - k)
    lhs = lhs / (n + 1)
    rhs = RatPolynomial()
    for k in range(n // 2 + 1):
        weight = Fraction(comb(n, 2 * k)) * bernoulli_number(2 * k) / ((k + 1) * (2 * k + 1))
        rhs = rhs + bernoulli_polynomial(n - 2 * k) * weight
    if lhs != rhs:
        return False
    if n % 2 == 0 and n >= 4:
        m = n // 2
        plain = sum(bernoulli_number(2 * k) * bernoulli_number(2 * m - 2 * k) for k in range(m + 1))
        binomial = sum(
            comb(2 * m + 2, 2 * k + 2) * bernoulli_number(2 * k) * bernoulli_number(2 * m - 2 * k)
            for k in range(m + 1)
        )
        return plain == Fraction(binomial) / (m + 1)
    return True


# ---------------------------------------------------------------------------
# Integrals and zeta values
# ---------------------------------------------------------------------------

def l2_inner_product(n: int, m: int) -> Fraction:
    """
    Exact integral of B_n B_m over [0, 1].

    Raises IdentityViolation if it differs from (-1)^(m-1) b_{n+m} / C(n+m, n).
    """
    _require(n >= 1 and m >= 1, "inner product needs n, m >= 1", n=n, m=m)
    value = (bernoulli_polynomial(n) * bernoulli_polynomial(m)).integrate(0, 1)
    closed_form = (-1) ** (m - 1) * bernoulli_number(n + m) / comb(n + m, n)
    if value != closed_form:
        raise IdentityViolation(
            "inner product disagrees with its closed form", n=n, m=m,
            integral=value, closed_form=closed_form,
        )
    return value


def zeta_even_exact(n: int) -> Fraction:
    """c with zeta(2n) = c * pi^(2n): (-1)^(n-1) 2^(2n-1) b_{2n} / (2n)!."""
    _require(n >= 1, "zeta(2n) needs n >= 1", n=n)
    return (-1) ** (n - 1) * Fraction(2 ** (2 * n - 1)) * bernoulli_number(2 * n) / factorial(2 * n)


def eta_even_exact(n: int) -> Fraction:
    """c with eta(2n) = c * pi^(2n): (-1)^(n-1) (2^(2n) - 2) b_{2n} / (2 (2n)!)."""
    _require(n >= 1, "eta(2n) needs n >= 1", n=n)
    return (-1) ** (n - 1) * Fraction(2 ** (2 * n) - 2) * bernoulli_number(2 * n) / (2 * factorial(2 * n))
