"""Partitions, Young diagram corners, column moves and border-strip operators.

A Young diagram with ``n`` outside corners is stored as the list of corner
points ``(x_i, y_i)`` with ``x_1 > ... > x_n`` (column counts) and
``y_1 < ... < y_n`` (row counts).  Border strips are added (``push``) or
removed (``pull``) by shifting corner coordinates; nested chains of strips are
applied on the coordinates only and converted back to a partition at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class NoSuchColumn(ValueError):
    """Raised when a column of the requested height cannot be removed."""


class InvalidCorners(ValueError):
    """Corner coordinates do not describe a Young diagram."""


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros trimmed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"``; ``"0"`` and ``""`` give the empty partition."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded(self, m: int) -> tuple[int, ...]:
        if m < len(self.parts):
            raise ValueError(f"cannot pad {self} to {m} parts")
        return self.parts + (0,) * (m - len(self.parts))

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.width)))

    def column_multiplicities(self) -> tuple[int, ...]:
        """Entry ``h-1`` counts the columns of height ``h``."""
        padded = self.parts + (0,)
        return tuple(padded[i] - padded[i + 1] for i in range(len(self.parts)))

    def has_distinct_columns(self) -> bool:
        return all(c <= 1 for c in self.column_multiplicities())

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))


def as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return Partition.parse(p)
    return Partition(tuple(p))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def partitions_up_to(max_boxes: int) -> Iterator[Partition]:
    for n in range(max_boxes + 1):
        yield from partitions_of(n)


# ---------------------------------------------------------------------------
# corners


@dataclass(frozen=True)
class CornerCoords:
    """Outside corners ``(x_i, y_i)``; strictness is relaxed after strip moves."""

    corners: tuple[tuple[int, int], ...] = ()

    @property
    def n(self) -> int:
        return len(self.corners)

    @property
    def xs(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.corners)

    @property
    def ys(self) -> tuple[int, ...]:
        return tuple(y for _, y in self.corners)

    def inside_corner(self, i: int) -> tuple[int, int]:
        """Inside corner ``i`` (0..n) sits at ``(x_{i+1}, y_i)`` with ``y_0 = x_{n+1} = 0``."""
        if not 0 <= i <= self.n:
            raise IndexError(f"inside corner {i} out of range 0..{self.n}")
        x = self.corners[i][0] if i < self.n else 0
        y = self.corners[i - 1][1] if i > 0 else 0
        return (x, y)

    def validate(self) -> None:
        xs, ys = self.xs, self.ys
        if any(x < 0 for x in xs) or any(y < 0 for y in ys):
            raise InvalidCorners(f"negative coordinate in {self.corners}")
        if any(a < b for a, b in zip(xs, xs[1:])) or any(a > b for a, b in zip(ys, ys[1:])):
            raise InvalidCorners(f"corners out of order: {self.corners}")

    def padded_parts(self) -> tuple[int, ...]:
        """Parts ``x_1^{y_1} x_2^{y_2-y_1} ...`` keeping any zero parts."""
        self.validate()
        parts: list[int] = []
        prev = 0
        for x, y in self.corners:
            parts.extend([x] * (y - prev))
            prev = y
        return tuple(parts)

    def to_partition(self) -> Partition:
        return Partition(self.padded_parts())


def to_corners(p) -> CornerCoords:
    p = as_partition(p)
    parts = p.parts + (0,)
    return CornerCoords(
        tuple((parts[i], i + 1) for i in range(len(p)) if parts[i] > parts[i + 1])
    )


def from_corners(c: CornerCoords) -> Partition:
    return c.to_partition()


# ---------------------------------------------------------------------------
# columns


def add_column(p, ell: int) -> Partition:
    """``p + omega_ell``: lengthen the first ``ell`` rows by one."""
    p = as_partition(p)
    if ell < 1:
        raise ValueError("column height must be positive")
    parts = list(p.padded(max(ell, len(p))))
    for i in range(ell):
        parts[i] += 1
    return Partition(tuple(parts))


def remove_column(p, ell: int) -> Partition:
    """``p - omega_ell``; only defined when ``p`` has a column of height ``ell``."""
    p = as_partition(p)
    if ell < 1 or p.part(ell) == p.part(ell + 1):
        raise NoSuchColumn(f"partition {p} has no column of height {ell}")
    parts = list(p.parts)
    for i in range(ell):
        parts[i] -= 1
    return Partition(tuple(parts))


def pivot_height(p, k: int) -> int:
    """Height ``y_k`` of the ``k``-th shortest column height among the corners."""
    c = to_corners(p)
    if not 1 <= k <= c.n:
        raise IndexError(f"corner index {k} out of range 1..{c.n}")
    return c.corners[k - 1][1]


# ---------------------------------------------------------------------------
# border strips


@dataclass(frozen=True)
class IntervalChain:
    """Nested intervals ``[i_1,j_1] > ... > [i_r,j_r]``, all containing ``k``."""

    k: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ivs = tuple((int(i), int(j)) for i, j in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        if not ivs:
            raise ValueError("empty interval chain")
        for i, j in ivs:
            if not 1 <= i <= self.k <= j:
                raise ValueError(f"interval [{i},{j}] does not contain {self.k}")
        for (i1, j1), (i2, j2) in zip(ivs, ivs[1:]):
            if not (i1 < i2 and j2 < j1):
                raise ValueError(f"intervals not properly nested: {ivs}")

    @property
    def r(self) -> int:
        return len(self.intervals)

    @property
    def sign(self) -> int:
        return -1 if self.r % 2 == 0 else 1

    @property
    def outer(self) -> tuple[int, int]:
        return self.intervals[0]

    def __str__(self) -> str:
        return "{" + ">".join(f"[{i},{j}]" for i, j in self.intervals) + "}"


def _chain_order_key(chain: IntervalChain):
    return (chain.r, tuple((j, -i) for i, j in chain.intervals))


def nested_chains(n: int, k: int) -> list[IntervalChain]:
    """All properly nested chains through ``k`` in ``[1, n]``.

    Ordered by chain length, then by ``(j_s, -i_s)`` from the outermost
    interval inward; for one interval this lists ``[k,k], [k-1,k], ...``
    before moving the right end.
    """
    if not 1 <= k <= n:
        raise IndexError(f"corner index {k} out of range 1..{n}")
    chains = []
    for r in range(1, min(k, n - k + 1) + 1):
        for lefts in combinations(range(1, k + 1), r):
            for rights in combinations(range(k, n + 1), r):
                chains.append(IntervalChain(k, tuple(zip(lefts, reversed(rights)))))
    chains.sort(key=_chain_order_key)
    return chains


def enumerate_chains(p, k: int) -> list[IntervalChain]:
    return nested_chains(to_corners(p).n, k)


def _shift(coords: CornerCoords, intervals: Iterable[tuple[int, int]], delta: int) -> CornerCoords:
    n = coords.n
    xs = list(coords.xs)
    ys = list(coords.ys)
    for i, j in intervals:
        if not 1 <= i <= j <= n:
            raise IndexError(f"strip [{i},{j}] out of range for {n} corners")
        for t in range(i + 1, j + 1):
            xs[t - 1] += delta
        for t in range(i, j + 1):
            ys[t - 1] += delta
    return CornerCoords(tuple(zip(xs, ys)))


def push_coords(p, intervals: Iterable[tuple[int, int]]) -> CornerCoords:
    """Add the border strips of ``intervals`` to ``p`` (coordinates only)."""
    out = _shift(to_corners(p), intervals, +1)
    out.validate()
    return out


def pull_coords(p, intervals: Iterable[tuple[int, int]]) -> CornerCoords:
    """Remove the border strips of ``intervals`` from ``p`` (coordinates only)."""
    out = _shift(to_corners(p), intervals, -1)
    out.validate()
    return out


def push(p, i: int, j: int) -> Partition:
    return push_coords(p, [(i, j)]).to_partition()


def pull(p, i: int, j: int) -> Partition:
    return pull_coords(p, [(i, j)]).to_partition()


def push_chain(p, chain: IntervalChain | Sequence[tuple[int, int]]) -> CornerCoords:
    intervals = chain.intervals if isinstance(chain, IntervalChain) else chain
    return push_coords(p, intervals)


def pull_chain(p, chain: IntervalChain | Sequence[tuple[int, int]]) -> CornerCoords:
    intervals = chain.intervals if isinstance(chain, IntervalChain) else chain
    return pull_coords(p, intervals)
