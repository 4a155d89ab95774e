# exact_core/polynomial.py
"""
Dense polynomials over the rationals, plus the "num/den" wire format
used for every exact value the toolkit prints or returns over the API.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from core.exceptions import InvalidArgument

__all__ = ["RatPolynomial", "X", "as_rational", "format_rational", "parse_rational"]

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidArgument(f"Cannot use {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"Not a rational number: {text!r}") from exc


class RatPolynomial:
    """
    Immutable polynomial c_0 + c_1 X + ... + c_d X^d with Fraction coefficients.

    The zero polynomial has no coefficients; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(values)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "RatPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "RatPolynomial":
        if k < 0:
            raise InvalidArgument("monomial degree must be >= 0")
        return cls([0] * k + [c])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RatPolynomial":
        if isinstance(other, RatPolynomial):
            return other
        return RatPolynomial.constant(as_rational(other))

    def __add__(self, other) -> "RatPolynomial":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "RatPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatPolynomial":
        if not isinstance(other, RatPolynomial):
            c = as_rational(other)
            return RatPolynomial(c * a for a in self.coeffs)
        if self.is_zero or other.is_zero:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPolynomial":
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, exponent: int) -> "RatPolynomial":
        if exponent < 0:
            raise InvalidArgument("negative polynomial power")
        result = RatPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- calculus and composition -------------------------------------------

    def __call__(self, x):
        """Horner evaluation for rationals or polynomials (see analytic_core for floats)."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def evaluate(self, x: Scalar) -> Fraction:
        return Fraction(self(as_rational(x)))

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def antiderivative(self) -> "RatPolynomial":
        """Antiderivative with zero constant term."""
        return RatPolynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integrate(self, a: Scalar = 0, b: Scalar = 1) -> Fraction:
        primitive = self.antiderivative()
        return primitive.evaluate(b) - primitive.evaluate(a)

    def compose(self, inner: "RatPolynomial") -> "RatPolynomial":
        """self(inner(X)) by Horner's scheme over polynomials."""
        result = RatPolynomial()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def shift(self, y: Scalar) -> "RatPolynomial":
        return self.compose(RatPolynomial([as_rational(y), 1]))

    def scale(self, c: Scalar) -> "RatPolynomial":
        """p(cX), computed coefficientwise."""
        c = as_rational(c)
        return RatPolynomial(a * c ** k for k, a in enumerate(self.coeffs))

    def divide_by_x(self) -> "RatPolynomial":
        """Exact quotient by X; the constant term must vanish."""
        if self.coefficient(0) != 0:
            raise InvalidArgument("polynomial is not divisible by X")
        return RatPolynomial(self.coeffs[1:])

    # -- presentation -------------------------------------------------------

    def to_list(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = format_rational(magnitude)
            else:
                power = "X" if k == 1 else f"X^{k}"
                body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RatPolynomial({str(self)!r})"


X = RatPolynomial([0, 1])
