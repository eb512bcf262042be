"""Set partitions, non-crossing partitions and pair partitions of {1..n}.

All partitions are kept in canonical form: every block is an ascending
tuple and blocks are ordered by their minimum.  Enumerations place the
elements 1, 2, ..., n one at a time, either into an existing block (in
block order) or into a fresh block, so the output order is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import CAPS
from .errors import ArgumentError, ResourceLimitError

Block = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n} in canonical form."""

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(len(b) == 0 for b in blocks):
            raise ArgumentError("blocks must be nonempty")
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ArgumentError(f"blocks {blocks!r} do not partition {{1..{self.n}}}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(n, tuple(blocks))

    @classmethod
    def empty(cls) -> "SetPartition":
        return cls(0, ())

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def block_of(self, i: int) -> Block:
        for b in self.blocks:
            if i in b:
                return b
        raise ArgumentError(f"{i} is not in {{1..{self.n}}}")

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    # serialization -------------------------------------------------------

    def to_text(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "SetPartition":
        text = text.strip()
        if text in ("", "{}"):
            return cls.empty()
        if not (text.startswith("{") and text.endswith("}")):
            raise ArgumentError(f"cannot parse partition {text!r}")
        blocks = []
        for chunk in text[1:-1].split("}{"):
            try:
                blocks.append(tuple(int(x) for x in chunk.split(",")))
            except ValueError:
                raise ArgumentError(f"cannot parse partition {text!r}") from None
        return cls.from_blocks(blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    @classmethod
    def from_json(cls, data: str | Sequence[Sequence[int]]) -> "SetPartition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_blocks(data)

    def __str__(self) -> str:
        return self.to_text() or "{}"


# ---------------------------------------------------------------------------
# cost helpers

def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def catalan_number(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def _check_cap(n: int, cap: int, what: str, cost: str) -> None:
    if n > cap:
        raise ResourceLimitError(f"{what} for n={n} costs {cost} partitions; the cap is n <= {cap}")


# ---------------------------------------------------------------------------
# enumeration

def _straddles(block: list[int], point: int) -> bool:
    return block[0] < point < block[-1]


def _grow(n: int, blocks: list[list[int]], start: int, noncrossing: bool) -> Iterator[tuple[Block, ...]]:
    if start > n:
        yield tuple(tuple(b) for b in blocks)
        return
    for idx, block in enumerate(blocks):
        if noncrossing:
            last = block[-1]
            # joining `start` to `block` crosses any other block spanning its last element
            if any(_straddles(other, last) for j, other in enumerate(blocks) if j != idx):
                continue
        block.append(start)
        yield from _grow(n, blocks, start + 1, noncrossing)
        block.pop()
    blocks.append([start])
    yield from _grow(n, blocks, start + 1, noncrossing)
    blocks.pop()


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[SetPartition, ...]:
    return tuple(SetPartition(n, bs) for bs in _grow(n, [], 1, False))


@lru_cache(maxsize=None)
def _nc_first_block(k: int, m: int) -> tuple[SetPartition, ...]:
    if m == 0:
        return (SetPartition.empty(),)
    if k == 0:
        return tuple(SetPartition(m, bs) for bs in _grow(m, [], 1, True))
    return tuple(SetPartition(m, bs) for bs in _grow(m, [list(range(1, k + 1))], k + 1, True))


def enumerate_partitions(n: int) -> tuple[SetPartition, ...]:
    """All partitions of {1..n}; there are Bell(n) of them."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    _check_cap(n, CAPS.partitions, "enumerating all set partitions", f"Bell({n}) = {bell_number(n)}")
    return _all_partitions(n)


def enumerate_noncrossing(n: int) -> tuple[SetPartition, ...]:
    """All non-crossing partitions of {1..n}.  ``n = 0`` yields the empty partition."""
    if n < 0:
        raise ArgumentError(f"n must be nonnegative, got {n}")
    _check_cap(n, CAPS.noncrossing, "enumerating non-crossing partitions", f"Catalan({n}) = {catalan_number(n)}")
    return _nc_first_block(0, n)


def enumerate_nc_first_block(k: int, m: int) -> tuple[SetPartition, ...]:
    """Non-crossing partitions of {1..m} whose block containing 1 contains 1..k.

    >>> [str(p) for p in enumerate_nc_first_block(2, 3)]
    ['{1,2,3}', '{1,2}{3}']
    """
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    if m < k:
        raise ArgumentError(f"need m >= k, got k={k}, m={m}")
    _check_cap(m, CAPS.noncrossing, "enumerating non-crossing partitions", f"at most Catalan({m}) = {catalan_number(m)}")
    return _nc_first_block(k, m)


def _pairings_of(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _pairings_of(remaining):
            yield [(first, partner)] + tail


@lru_cache(maxsize=None)
def _pairings(n: int) -> tuple[SetPartition, ...]:
    if n % 2:
        return ()
    return tuple(SetPartition(n, tuple(ps)) for ps in _pairings_of(tuple(range(1, n + 1))))


def enumerate_pairings(n: int) -> tuple[SetPartition, ...]:
    """Pair partitions of {1..n}: empty for odd n, (n-1)!! of them otherwise."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    cost = 1
    for j in range(n - 1, 0, -2):
        cost *= j
    _check_cap(n, CAPS.pairings, "enumerating pair partitions", f"({n}-1)!! = {cost}")
    return _pairings(n)


# ---------------------------------------------------------------------------
# crossing statistics

def is_noncrossing(p: SetPartition) -> bool:
    """True iff no i < j < k < l has i, k in one block and j, l in another."""
    for b in p.blocks:
        for c in p.blocks:
            if b is c:
                continue
            lo, hi = b[0], c[-1]
            for j in c:
                if j > lo and any(j < k < hi for k in b):
                    return False
    return True


def _arcs(block: Block) -> list[tuple[int, int]]:
    """Pairs (p(i), i) joining each non-first element to its predecessor."""
    return list(zip(block, block[1:]))


def restricted_crossings(p: SetPartition) -> int:
    """Count quadruples p(i) < p(j) < i < j with i, j in different blocks."""
    arcs = [(x, arc) for x, b in enumerate(p.blocks) for arc in _arcs(b)]
    count = 0
    for bx, (pi, i) in arcs:
        for by, (pj, j) in arcs:
            if bx != by and pi < pj < i < j:
                count += 1
    return count


# ---------------------------------------------------------------------------
# first-block decomposition

def first_return(p: SetPartition, k: int) -> int | None:
    """Smallest element of the first block exceeding k, or None."""
    for x in p.blocks[0]:
        if x > k:
            return x
    return None


def split_first_block(p: SetPartition, k: int) -> tuple[int, SetPartition, SetPartition]:
    """Cut ``p`` in NC^k(m) at the first element j > k of its first block.

    Returns ``(j, inner, outer)`` where ``inner`` is the partition of
    {k+1..j-1} relabelled into NC(j-k-1) and ``outer`` is the partition of
    {1..k, j..m} relabelled into NC^{k+1}(m+k-j+1).
    """
    j = first_return(p, k)
    if j is None:
        raise ArgumentError(f"{p} has {{1..{k}}} as a standalone block")
    inner = [tuple(x - k for x in b) for b in p.blocks if k < b[0] < j]
    outer_pts = list(range(1, k + 1)) + list(range(j, p.n + 1))
    relabel = {x: i + 1 for i, x in enumerate(outer_pts)}
    outer = [tuple(relabel[x] for x in b) for b in p.blocks if not (k < b[0] < j)]
    return (
        j,
        SetPartition(j - k - 1, tuple(inner)),
        SetPartition(len(outer_pts), tuple(outer)),
    )


def join_first_block(k: int, j: int, inner: SetPartition, outer: SetPartition) -> SetPartition:
    """Inverse of :func:`split_first_block`."""
    outer_pts = list(range(1, k + 1)) + list(range(j, j + outer.n - k))
    blocks = [tuple(x + k for x in b) for b in inner.blocks]
    blocks += [tuple(outer_pts[x - 1] for x in b) for b in outer.blocks]
    return SetPartition(outer_pts[-1], tuple(blocks))
