"""Dense exact sequences of moments and cumulants, indexed from 1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ArgumentError
from .series import TruncatedSeries, format_fraction, to_fraction


@dataclass(frozen=True)
class _IndexedSequence:
    """Entries x_1 .. x_order stored densely."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(to_fraction(v) for v in self.values))

    @classmethod
    def of(cls, *values):
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        if not 1 <= k <= len(self.values):
            raise ArgumentError(f"index {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def get(self, k: int, default=Fraction(0)) -> Fraction:
        return self.values[k - 1] if 1 <= k <= len(self.values) else default

    def items(self) -> Iterable[tuple[int, Fraction]]:
        return enumerate(self.values, start=1)

    def truncate(self, order: int):
        if order > self.order:
            raise ArgumentError(f"sequence has order {self.order} < {order}")
        return type(self)(self.values[:order])

    def dilate(self, c) -> "_IndexedSequence":
        """Entry k becomes c**k times entry k."""
        c = to_fraction(c)
        return type(self)(tuple(c ** k * v for k, v in self.items()))

    def scale(self, c) -> "_IndexedSequence":
        c = to_fraction(c)
        return type(self)(tuple(c * v for v in self.values))

    def __add__(self, other):
        if type(other) is not type(self) or other.order != self.order:
            raise ArgumentError("can only add sequences of the same kind and order")
        return type(self)(tuple(a + b for a, b in zip(self.values, other.values)))

    def replace(self, k: int, value) -> "_IndexedSequence":
        vals = list(self.values)
        vals[k - 1] = to_fraction(value)
        return type(self)(tuple(vals))

    def to_json(self) -> list[str]:
        return [format_fraction(v) for v in self.values]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(to_fraction(v) for v in data))


class CumulantSequence(_IndexedSequence):
    """R_1, R_2, ..., R_order."""

    def r_transform(self, order: int | None = None) -> TruncatedSeries:
        """Jet of sum_i R_{i+1} z^i."""
        order = self.order - 1 if order is None else order
        return TruncatedSeries.from_coeffs(self.values, order)

    @classmethod
    def from_r_transform(cls, r: TruncatedSeries) -> "CumulantSequence":
        return cls(r.coeffs)


class MomentSequence(_IndexedSequence):
    """m_1, ..., m_order with m_0 = 1 implicit."""

    def __getitem__(self, k: int) -> Fraction:
        if k == 0:
            return Fraction(1)
        return super().__getitem__(k)

    def to_series(self, order: int | None = None) -> TruncatedSeries:
        """The jet 1 + m_1 z + m_2 z^2 + ..."""
        order = self.order if order is None else order
        return TruncatedSeries.from_coeffs((1,) + self.values, order)

    @classmethod
    def from_series(cls, m: TruncatedSeries) -> "MomentSequence":
        if m[0] != 1:
            raise ArgumentError(f"moment series must start with 1, got {m[0]}")
        return cls(m.coeffs[1:])


def dilate_moments(m: _IndexedSequence, c) -> _IndexedSequence:
    """Moments (or cumulants) of c*X from those of X: entry n times c**n."""
    return m.dilate(c)
