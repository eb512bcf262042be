"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` of order N carries the coefficients of
z^0 .. z^N.  Every operation truncates at the common order, so results
are exact jets of the corresponding formal series.  Coefficients are
:class:`fractions.Fraction`; nothing in this module touches floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import ArgumentError, BranchError, SingularityError

Scalar = Union[int, Fraction]


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are rejected."""
    if isinstance(x, bool):
        raise ArgumentError(f"not a rational number: {x!r}")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            raise ArgumentError(f"expected an exact fraction 'p/q', got {x!r}") from None
    raise ArgumentError(f"not a rational number: {x!r}")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ArgumentError(f"order must be nonnegative, got {self.order}")
        coeffs = tuple(to_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ArgumentError(f"expected {self.order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # constructors ----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate so that the result has the given order."""
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Scalar = 1) -> "TruncatedSeries":
        if k > order:
            return cls.from_coeffs([], order)
        return cls.from_coeffs([0] * k + [c], order)

    # access ----------------------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ArgumentError(f"cannot extend a jet of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    # arithmetic ------------------------------------------------------------

    def _same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ArgumentError(f"order mismatch: {self.order} vs {other.order}")

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            return other
        return TruncatedSeries.constant(to_fraction(other), self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "TruncatedSeries":
        c = to_fraction(c)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._same_order(other)
        a, b, n = self.coeffs, other.coeffs, self.order
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
        return TruncatedSeries(n, tuple(out))

    def __rmul__(self, other) -> "TruncatedSeries":
        return self.scale(other)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(e):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k, dropping terms beyond the order."""
        return TruncatedSeries.from_coeffs([0] * k + list(self.coeffs), self.order)

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise SingularityError("series has zero constant term; no reciprocal")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out.append(-acc * inv0)
        return TruncatedSeries(self.order, tuple(out))

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self.scale(1 / to_fraction(other))

    def sqrt_one(self) -> "TruncatedSeries":
        """Square root with constant term 1 (requires constant term 1)."""
        a = self.coeffs
        if a[0] != 1:
            raise BranchError(f"principal square root needs constant term 1, got {a[0]}")
        r = [Fraction(1)]
        for k in range(1, self.order + 1):
            acc = sum((r[i] * r[k - i] for i in range(1, k)), Fraction(0))
            r.append((a[k] - acc) / 2)
        return TruncatedSeries(self.order, tuple(r))

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: str | dict) -> "TruncatedSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["order"]), tuple(to_fraction(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(format_fraction(c) + ("" if k == 0 else f"*z^{k}"))
        return " + ".join(terms) + f" + O(z^{self.order + 1})" if terms else f"O(z^{self.order + 1})"


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    if not isinstance(t, TruncatedSeries):
        raise ArgumentError("series_mul expects two series")
    return s * t


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    return s.reciprocal()


def series_sqrt_one(s: TruncatedSeries) -> TruncatedSeries:
    return s.sqrt_one()


def polynomial(coeffs: Sequence[Scalar], order: int) -> TruncatedSeries:
    """Jet of the polynomial c_0 + c_1 z + ... at the given order."""
    return TruncatedSeries.from_coeffs(coeffs, order)
