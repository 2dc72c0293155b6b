"""Truncated formal power series in one variable t with polynomial coefficients.

A series of order N keeps the coefficients of t^0 .. t^N exactly and
discards everything above; arithmetic is closed under that truncation.
Coefficients are MultiPoly values sharing one variable set, so the same
machinery covers scalar series (constant polynomials) and the generating
functions whose t-coefficients are polynomial families.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact import Coeff, MultiPoly

ELEMENTARY_KINDS = ("cosh", "sinh", "cosh2", "sinh2", "sinh_cosh")


class TruncatedSeries:
    """Exact power series in t, truncated beyond a fixed order >= 1."""

    __slots__ = ("order", "num_vars", "_coeffs")

    def __init__(self, coeffs: Sequence[MultiPoly], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients for order {order}, got {len(coeffs)}")
        num_vars = coeffs[0].num_vars
        if any(c.num_vars != num_vars for c in coeffs):
            raise ValueError("series coefficients must share one variable set")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_scalars(cls, values: Sequence[Coeff], order: int, num_vars: int) -> "TruncatedSeries":
        coeffs = [MultiPoly.constant(num_vars, v) for v in values]
        coeffs += [MultiPoly.zero(num_vars)] * (order + 1 - len(coeffs))
        return cls(coeffs[: order + 1], order)

    def coefficient(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return self._coeffs[n]

    def _require_compatible(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_compatible(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self._coeffs, other._coeffs)], self.order
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_compatible(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self._coeffs, other._coeffs)], self.order
        )

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_compatible(other)
        zero = MultiPoly.zero(self.num_vars)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, self.order)

    def scale(self, factor: MultiPoly | Coeff) -> "TruncatedSeries":
        """Multiply every t-coefficient by a polynomial or scalar."""
        if isinstance(factor, MultiPoly) and factor.num_vars != self.num_vars:
            raise ValueError(f"variable count mismatch: {factor.num_vars} vs {self.num_vars}")
        return TruncatedSeries([c * factor for c in self._coeffs], self.order)

    def derivative(self) -> "TruncatedSeries":
        """d/dt; the truncation order drops by one."""
        return TruncatedSeries(
            [(n + 1) * self._coeffs[n + 1] for n in range(self.order)], self.order - 1
        )

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.num_vars == other.num_vars
            and self._coeffs == other._coeffs
        )

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"({c.text()})*t^{n}" for n, c in enumerate(self._coeffs) if c]
        return f"TruncatedSeries({' + '.join(parts) or '0'} + O(t^{self.order + 1}))"


def elementary_series(kind: str, order: int, num_vars: int = 1) -> TruncatedSeries:
    """Standard Taylor series: cosh, sinh, cosh2 (=cosh^2), sinh2, sinh_cosh."""
    if kind not in ELEMENTARY_KINDS:
        raise ValueError(f"unknown series kind {kind!r}; choose from {ELEMENTARY_KINDS}")
    if kind in ("cosh", "sinh"):
        parity = 0 if kind == "cosh" else 1
        values = [
            Fraction(1, factorial(n)) if n % 2 == parity else Fraction(0)
            for n in range(order + 1)
        ]
        return TruncatedSeries.from_scalars(values, order, num_vars)
    cosh = elementary_series("cosh", order, num_vars)
    sinh = elementary_series("sinh", order, num_vars)
    if kind == "cosh2":
        return cosh * cosh
    if kind == "sinh2":
        return sinh * sinh
    return sinh * cosh
