"""Moment-cumulant transforms, free and q-deformed, and mixed moments of words.

Freeness (and q-independence) is encoded by the monochromatic rule: a
multilinear cumulant of linear combinations of generators expands into
one term per generator, since every mixed term vanishes.  Moments are
sums over partitions of products of block cumulants.

For single-variable transforms only the multiset of block sizes matters,
so each enumeration is collapsed once into a histogram of block shapes
(and crossing counts, for the q case) and then reused.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .errors import ArgumentError, DomainError
from .partitions import (
    enumerate_nc_first_block,
    enumerate_noncrossing,
    enumerate_pairings,
    enumerate_partitions,
    restricted_crossings,
)
from .sequences import CumulantSequence, MomentSequence
from .series import to_fraction

LinearCombo = Mapping[int, Fraction]
Letter = Union[int, LinearCombo]


def letter(spec: Letter) -> dict[int, Fraction]:
    """Normalize a generator index or a {index: coefficient} map."""
    if isinstance(spec, int):
        return {spec: Fraction(1)}
    return {int(j): to_fraction(c) for j, c in spec.items() if c != 0}


def word(*letters: Letter) -> tuple[dict[int, Fraction], ...]:
    return tuple(letter(x) for x in letters)


# ---------------------------------------------------------------------------
# shape histograms

def _shape(blocks) -> tuple[int, ...]:
    return tuple(sorted(len(b) for b in blocks))


@lru_cache(maxsize=None)
def _nc_shapes(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple(sorted(Counter(_shape(p.blocks) for p in enumerate_noncrossing(n)).items()))


@lru_cache(maxsize=None)
def _ncfb_shapes(k: int, m: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple(sorted(Counter(_shape(p.blocks) for p in enumerate_nc_first_block(k, m)).items()))


@lru_cache(maxsize=None)
def _crossing_table(n: int) -> tuple[tuple[tuple[tuple[int, ...], ...], int], ...]:
    """Every partition of {1..n} with its restricted crossing number."""
    return tuple((p.blocks, restricted_crossings(p)) for p in enumerate_partitions(n))


@lru_cache(maxsize=None)
def _q_shapes(n: int) -> tuple[tuple[tuple[tuple[int, ...], int], int], ...]:
    hist = Counter((_shape(blocks), rc) for blocks, rc in _crossing_table(n))
    return tuple(sorted(hist.items()))


@lru_cache(maxsize=None)
def _pairing_table(n: int) -> tuple[tuple[tuple[tuple[int, ...], ...], int], ...]:
    return tuple((p.blocks, restricted_crossings(p)) for p in enumerate_pairings(n))


def _product(R: CumulantSequence, shape: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for s in shape:
        out *= R.get(s)
        if not out:
            break
    return out


def _need(R: CumulantSequence, n: int) -> None:
    if n > R.order:
        raise ArgumentError(f"n={n} exceeds the cumulant order {R.order}")


def _check_q(q) -> Fraction:
    q = to_fraction(q)
    if not -1 < q < 1:
        raise DomainError(f"q must lie in (-1, 1), got {q}")
    return q


# ---------------------------------------------------------------------------
# free transforms

def moments_from_free_cumulants(R: CumulantSequence, n: int) -> Fraction:
    """m_n = sum over NC(n) of the product of R_|B| over blocks."""
    _need(R, n)
    return sum((c * _product(R, shape) for shape, c in _nc_shapes(n)), Fraction(0))


def free_moments(R: CumulantSequence, order: int | None = None) -> MomentSequence:
    order = R.order if order is None else order
    return MomentSequence(tuple(moments_from_free_cumulants(R, n) for n in range(1, order + 1)))


def free_cumulants_from_moments(m: MomentSequence, order: int | None = None) -> CumulantSequence:
    """Invert the free moment-cumulant formula by peeling the one-block term."""
    order = m.order if order is None else order
    if order > m.order:
        raise ArgumentError(f"moments known to order {m.order}, asked for {order}")
    R: list[Fraction] = []
    for n in range(1, order + 1):
        partial = CumulantSequence(tuple(R) + (Fraction(0),))
        rest = sum((c * _product(partial, shape) for shape, c in _nc_shapes(n) if shape != (n,)), Fraction(0))
        R.append(m[n] - rest)
    return CumulantSequence(tuple(R))


def ckn(R: CumulantSequence, k: int, n: int) -> Fraction:
    """c^k_n: sum over NC^k(n+k) of the product of block cumulants."""
    if k < 1 or n < 0:
        raise ArgumentError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    _need(R, n + k)
    return sum((c * _product(R, shape) for shape, c in _ncfb_shapes(k, n + k)), Fraction(0))


# ---------------------------------------------------------------------------
# free families and words

@dataclass(frozen=True)
class FreeFamily:
    """Freely independent generators given by their cumulant sequences."""

    generators: tuple[CumulantSequence, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ArgumentError("a family needs at least one generator")
        if len({g.order for g in gens}) != 1:
            raise ArgumentError("all generators must share one order")
        object.__setattr__(self, "generators", gens)

    @property
    def order(self) -> int:
        return self.generators[0].order


def _monochromatic(gens: Sequence[CumulantSequence], args: Sequence[Mapping[int, Fraction]]) -> Fraction:
    k = len(args)
    if k == 0:
        raise ArgumentError("cumulants need at least one argument")
    total = Fraction(0)
    for j, gen in enumerate(gens):
        coeff = Fraction(1)
        for a in args:
            coeff *= a.get(j, 0)
            if not coeff:
                break
        if coeff:
            if k > gen.order:
                raise ArgumentError(f"cumulant of length {k} exceeds the family order {gen.order}")
            total += coeff * gen[k]
    return total


def mixed_free_cumulant(family: FreeFamily, args: Sequence[Letter]) -> Fraction:
    """R_k(args) for linear combinations of free generators."""
    return _monochromatic(family.generators, [letter(a) for a in args])


def _partition_sum(gens, letters, table) -> Fraction:
    cache: dict[tuple[int, ...], Fraction] = {}
    total = Fraction(0)
    for blocks, weight in table:
        if not weight:
            continue
        term = weight
        for b in blocks:
            v = cache.get(b)
            if v is None:
                v = cache[b] = _monochromatic(gens, [letters[i - 1] for i in b])
            term *= v
            if not term:
                break
        total += term
    return total


def mixed_free_moment(family: FreeFamily, w: Sequence[Letter]) -> Fraction:
    """tau of a word of linear combinations, summed over NC(|w|)."""
    letters = [letter(x) for x in w]
    if not letters:
        return Fraction(1)
    table = ((p.blocks, Fraction(1)) for p in enumerate_noncrossing(len(letters)))
    return _partition_sum(family.generators, letters, table)


# ---------------------------------------------------------------------------
# q-deformed transforms

def q_moments_from_cumulants(Rq: CumulantSequence, n: int, q) -> Fraction:
    """Sum over all partitions of q**rc times the product of block q-cumulants."""
    q = _check_q(q)
    _need(Rq, n)
    return sum((c * q ** rc * _product(Rq, shape) for (shape, rc), c in _q_shapes(n)), Fraction(0))


def q_moments(Rq: CumulantSequence, q, order: int | None = None) -> MomentSequence:
    order = Rq.order if order is None else order
    return MomentSequence(tuple(q_moments_from_cumulants(Rq, n, q) for n in range(1, order + 1)))


def q_cumulants_from_moments(m: MomentSequence, order: int | None, q) -> CumulantSequence:
    """Invert the q-moment formula; the one-block term carries weight q**0 = 1."""
    q = _check_q(q)
    order = m.order if order is None else order
    if order > m.order:
        raise ArgumentError(f"moments known to order {m.order}, asked for {order}")
    R: list[Fraction] = []
    for n in range(1, order + 1):
        partial = CumulantSequence(tuple(R) + (Fraction(0),))
        rest = sum(
            (c * q ** rc * _product(partial, shape) for (shape, rc), c in _q_shapes(n) if shape != (n,)),
            Fraction(0),
        )
        R.append(m[n] - rest)
    return CumulantSequence(tuple(R))


@dataclass(frozen=True)
class QFamily:
    """q-independent generators, by q-cumulants or by a covariance matrix.

    With ``covariance`` the generators are q-Gaussian with
    E(G_i G_j) = covariance[i][j].
    """

    q: Fraction
    generators: tuple[CumulantSequence, ...] | None = None
    covariance: tuple[tuple[Fraction, ...], ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "q", _check_q(self.q))
        if self.generators is None and self.covariance is None:
            raise ArgumentError("give q-cumulants or a covariance matrix")
        if self.generators is not None:
            gens = tuple(self.generators)
            if len({g.order for g in gens}) != 1:
                raise ArgumentError("all generators must share one order")
            object.__setattr__(self, "generators", gens)
        if self.covariance is not None:
            cov = tuple(tuple(to_fraction(x) for x in row) for row in self.covariance)
            d = len(cov)
            if any(len(row) != d for row in cov):
                raise ArgumentError("covariance must be square")
            for i in range(d):
                if cov[i][i] < 0:
                    raise ArgumentError("covariance diagonal must be nonnegative")
                for j in range(i):
                    if cov[i][j] != cov[j][i]:
                        raise ArgumentError("covariance must be symmetric")
            object.__setattr__(self, "covariance", cov)

    @classmethod
    def gaussian(cls, q, covariance) -> "QFamily":
        return cls(q, covariance=covariance)

    def inner(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Fraction:
        cov = self.covariance
        return sum((a * b * cov[i][j] for i, a in u.items() for j, b in v.items()), Fraction(0))


def q_wick_moment(fam: QFamily, idx: Sequence[Letter]) -> Fraction:
    """E(G_{u_1} ... G_{u_n}) by the q-Wick pairing formula.

    Letters may be generator indices or linear combinations of them; the
    map u -> G_u is linear, so combinations pair through the covariance.
    """
    if fam.covariance is None:
        raise ArgumentError("q_wick_moment needs a covariance-form family")
    letters = [letter(x) for x in idx]
    n = len(letters)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    q = fam.q
    cache: dict[tuple[int, int], Fraction] = {}
    total = Fraction(0)
    for pairs, rc in _pairing_table(n):
        term = q ** rc
        for i, j in pairs:
            v = cache.get((i, j))
            if v is None:
                v = cache[(i, j)] = fam.inner(letters[i - 1], letters[j - 1])
            term *= v
            if not term:
                break
        total += term
    return total


def mixed_q_moment(fam: QFamily, w: Sequence[Letter], q=None) -> Fraction:
    """E of a word over q-independent generators given by their q-cumulants."""
    if fam.generators is None:
        raise ArgumentError("mixed_q_moment needs a cumulant-form family")
    q = fam.q if q is None else _check_q(q)
    letters = [letter(x) for x in w]
    if not letters:
        return Fraction(1)
    table = ((blocks, q ** rc) for blocks, rc in _crossing_table(len(letters)))
    return _partition_sum(fam.generators, letters, table)
