"""Truncated formal power series with exact rational coefficients.

The basis series for subset-sum generating functions is

    p_series(k, d) = (-1)^(k - k/d) / k * x^k / (1 - x^d)^(k/d),   d | k,

expanded through the negative binomial series.  Applying M(k) to the vector
of these gives, component by component, the generating functions whose x^n
coefficient is t_count(n, k, d); that every such coefficient is a
nonnegative integer (despite each basis series carrying denominator k) is a
structural fact the test suite verifies rather than assumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .divmatrix import build_m
from .numtheory import binomial, divisors


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series known exactly through x^(order-1)."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((Fraction(0),) * order)

    @classmethod
    def monomial(cls, exponent: int, coefficient, order: int) -> "TruncatedSeries":
        coeffs = [Fraction(0)] * order
        if exponent < order:
            coeffs[exponent] = Fraction(coefficient)
        return cls(tuple(coeffs))

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n < self.order:
            raise IndexError(f"exponent {n} outside truncation order {self.order}")
        return self.coefficients[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))[:order]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(-1)

    def scale(self, factor) -> "TruncatedSeries":
        f = Fraction(factor)
        return TruncatedSeries(tuple(c * f for c in self.coefficients))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i, a in enumerate(self.coefficients[:order]):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients[: order - i]):
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.coefficients[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        inv = [Fraction(0)] * self.order
        inv[0] = 1 / c0
        for n in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self.coefficients[i] * inv[n - i]
            inv[n] = -acc / c0
        return TruncatedSeries(tuple(inv))

    def to_sparse_dict(self) -> dict[str, str]:
        """Sparse JSON form: {"exponent": "coefficient"} for nonzero terms."""
        return {str(i): str(c) for i, c in enumerate(self.coefficients) if c != 0}

    def to_json(self) -> str:
        return json.dumps(self.to_sparse_dict())


def p_series(k: int, d: int, order: int) -> TruncatedSeries:
    """Basis series (-1)^(k-k/d)/k * x^k * (1 - x^d)^(-k/d) through x^(order-1).

    The reciprocal power expands with stride d:
    (1 - x^d)^(-j) = sum over m >= 0 of C(m+j-1, j-1) * x^(d*m).
    """
    if k < 1 or d < 1 or k % d:
        raise ValueError(f"d={d} must divide k={k}")
    if order <= k:
        raise ValueError(f"order must exceed k={k}, got {order}")
    j = k // d
    sign = -1 if (k - j) % 2 else 1
    coeffs = [Fraction(0)] * order
    m = 0
    while k + d * m < order:
        coeffs[k + d * m] = Fraction(sign * binomial(m + j - 1, j - 1), k)
        m += 1
    return TruncatedSeries(tuple(coeffs))


def g_vector(k: int, order: int) -> list[TruncatedSeries]:
    """Apply M(k) to the basis vector of p_series, one component per divisor.

    Component d (in ascending divisor order) has x^n coefficient
    t_count(n, k, d) for n >= k.
    """
    m = build_m(k)
    basis = [p_series(k, d, order) for d in m.divisors]
    out = []
    for row in m.entries:
        acc = TruncatedSeries.zero(order)
        for coeff, series in zip(row, basis):
            if coeff:
                acc = acc + series.scale(coeff)
        out.append(acc)
    return out


def coefficient(series: TruncatedSeries, n: int) -> Fraction:
    """The stored coefficient of x^n; errors outside the truncation order."""
    return series.coefficient(n)


def g_component(k: int, d: int, order: int) -> TruncatedSeries:
    """Single component of g_vector, picked out by its divisor label."""
    divs = divisors(k)
    return g_vector(k, order)[divs.index(d)]
