"""Quadratic Plücker relations between maximal minors.

For two ordered row lists ``P`` and ``Q`` of an ``n``-column matrix and
positions ``r_1 < ... < r_k`` in ``P``,

    [P][Q] = sum over s_1 < ... < s_k of [P with r_i <- Q_{s_i}][Q with s_i <- P_{r_i}]

with rows exchanged in place.  Terms are kept exactly as exchanged; a term's
``sign`` only changes when its row lists are reordered.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .jt_box import BoxMatrix, Flavor, MinorReading, hirota_box, read_minor, reading_value
from .partitions import as_partition, pivot_height
from .symfunc import Mode, Polynomial, SymMatrix, determinant


class LabelMismatch(KeyError):
    pass


def permutation_parity(seq: Sequence, order: Sequence) -> int:
    """``+1``/``-1``: parity of the permutation sorting ``seq`` by its position in ``order``."""
    rank = {lab: i for i, lab in enumerate(order)}
    keys = [rank[x] for x in seq]
    inv = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    return -1 if inv & 1 else 1


@dataclass(frozen=True)
class PluckerTerm:
    left: tuple[str, ...]
    right: tuple[str, ...]
    sign: int = 1

    def canonical(self, order: Sequence[str]) -> "PluckerTerm":
        rank = {lab: i for i, lab in enumerate(order)}
        sign = self.sign * permutation_parity(self.left, order) * permutation_parity(self.right, order)
        return PluckerTerm(
            tuple(sorted(self.left, key=rank.__getitem__)),
            tuple(sorted(self.right, key=rank.__getitem__)),
            sign,
        )

    def swap_within(self, side: str, a: int, b: int) -> "PluckerTerm":
        """Transpose two rows inside one minor; the recorded sign flips."""
        rows = list(self.left if side == "left" else self.right)
        rows[a], rows[b] = rows[b], rows[a]
        if side == "left":
            return PluckerTerm(tuple(rows), self.right, -self.sign)
        return PluckerTerm(self.left, tuple(rows), -self.sign)

    def value(self, m: SymMatrix) -> Polynomial:
        return determinant(m, self.left) * determinant(m, self.right) * self.sign

    def __str__(self) -> str:
        def fmt(rows):
            sep = " " if any(len(r) > 1 for r in rows) else ""
            return "[" + sep.join(rows) + "]"

        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}{fmt(self.left)}{fmt(self.right)}"

    def to_json(self) -> dict:
        return {"rows_left": list(self.left), "rows_right": list(self.right), "sign": self.sign}


@dataclass
class PluckerRelation:
    """``lhs = sum(rhs)``; ``swap`` holds 1-based positions in ``lhs.left``."""

    lhs: PluckerTerm
    rhs: list[PluckerTerm]
    swap: tuple[int, ...]
    order: tuple[str, ...] = ()

    @property
    def fixed(self) -> tuple[str, ...]:
        """Rows of the left minor that never move."""
        return tuple(lab for i, lab in enumerate(self.lhs.left, 1) if i not in self.swap)

    def labels(self) -> set[str]:
        return set(self.lhs.left) | set(self.lhs.right)

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs.to_json(),
            "rhs": [t.to_json() for t in self.rhs],
            "swap": list(self.swap),
        }

    def __str__(self) -> str:
        return f"{self.lhs} = " + " + ".join(str(t) for t in self.rhs)


def exchange(left: Sequence[str], right: Sequence[str], swap: Sequence[int]) -> list[PluckerTerm]:
    """All in-place exchanges of ``left`` positions ``swap`` with ``right`` positions."""
    left, right = tuple(left), tuple(right)
    k = len(swap)
    terms = []
    for picks in combinations(range(1, len(right) + 1), k):
        new_left = list(left)
        new_right = list(right)
        for r, s in zip(swap, picks):
            new_left[r - 1], new_right[s - 1] = right[s - 1], left[r - 1]
        terms.append(PluckerTerm(tuple(new_left), tuple(new_right), 1))
    return terms


def generate(n: int, swap: Sequence[int], left_labels: Sequence[str] | None = None,
             right_labels: Sequence[str] | None = None) -> PluckerRelation:
    """The relation ``[1..n][1'..n'] = sum`` exchanging rows ``swap`` of the first minor."""
    swap = tuple(sorted(set(int(s) for s in swap)))
    if not swap:
        raise ValueError("swap set must be nonempty")
    if swap[0] < 1 or swap[-1] > n:
        raise ValueError(f"swap positions must lie in 1..{n}")
    left = tuple(left_labels) if left_labels is not None else tuple(str(i) for i in range(1, n + 1))
    right = tuple(right_labels) if right_labels is not None else tuple(f"{i}'" for i in range(1, n + 1))
    if len(left) != n or len(right) != n:
        raise ValueError("label lists must have n entries")
    return PluckerRelation(PluckerTerm(left, right, 1), exchange(left, right, swap), swap, left + right)


@dataclass
class VerifyReport:
    ok: bool
    lhs: Polynomial
    rhs: list[Polynomial]
    difference: Polynomial

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "lhs": self.lhs.to_json(),
            "rhs": [p.to_json() for p in self.rhs],
            "difference": self.difference.to_json(),
        }


def verify(rel: PluckerRelation, m: SymMatrix) -> VerifyReport:
    """Expand every minor exactly and check ``lhs - sum(rhs) == 0``."""
    missing = [lab for lab in rel.labels() if not m.has_label(lab)]
    if missing:
        raise LabelMismatch(f"matrix has no rows {sorted(missing)}")
    lhs = rel.lhs.value(m)
    rhs = [t.value(m) for t in rel.rhs]
    diff = lhs
    for p in rhs:
        diff = diff - p
    return VerifyReport(diff.is_zero(), lhs, rhs, diff)


# ---------------------------------------------------------------------------
# relations on the box matrix


@dataclass(frozen=True)
class SchurTerm:
    """A Plücker term read as ``coeff * s_left * s_right``."""

    coeff: int
    left: MinorReading
    right: MinorReading
    raw: PluckerTerm

    def key(self, normalize: bool):
        def one(r: MinorReading):
            if normalize:
                return r.normalized()
            return (r.shape, r.shift)

        return (self.coeff, tuple(sorted([one(self.left), one(self.right)], key=repr)))

    def to_json(self) -> dict:
        def side(r: MinorReading):
            return {"shape": list(r.shape), "shift": r.shift}

        return {"coeff": self.coeff, "left": side(self.left), "right": side(self.right)}


@dataclass
class BoxRelation:
    """Plücker relation on ``M_{lam - w} [] M_{lam + w}`` fixing rows ``1'..ell'``."""

    lam: tuple[int, ...]
    ell: int
    flavor: Flavor
    box: BoxMatrix
    relation: PluckerRelation
    square: PluckerTerm
    mode: Mode
    readings: list[SchurTerm | None] = field(default_factory=list)

    def schur_form(self) -> list[SchurTerm]:
        """Nonvanishing terms, rearranged so that ``s_lam * s_lam`` is alone on the left.

        The first entry is the ``s_{lam+w} s_{lam-w}`` term; the rest follow the
        order of the exchange sum.
        """
        lhs_l = read_minor(self.box, self.relation.lhs.left, self.mode)
        lhs_r = read_minor(self.box, self.relation.lhs.right, self.mode)
        sq_coeff = None
        for term, reading in zip(self.relation.rhs, self.readings):
            if term == self.square:
                sq_coeff = reading.coeff
        if sq_coeff is None:
            raise AssertionError("square term vanished")  # pragma: no cover
        out = [SchurTerm(sq_coeff * lhs_l.sign * lhs_r.sign, lhs_l, lhs_r, self.relation.lhs)]
        for term, reading in zip(self.relation.rhs, self.readings):
            if term == self.square or reading is None:
                continue
            out.append(SchurTerm(-sq_coeff * reading.coeff, reading.left, reading.right, term))
        return out

    def square_reading(self) -> SchurTerm:
        for term, reading in zip(self.relation.rhs, self.readings):
            if term == self.square:
                return reading
        raise AssertionError("square term missing")  # pragma: no cover

    def nonzero_count(self) -> int:
        return sum(1 for r in self.readings if r is not None)


def box_relation(lam, ell: int, flavor: Flavor | str = Flavor.PLAIN, mode: Mode | str | None = None) -> BoxRelation:
    """The relation behind the identity for ``lam`` and column height ``ell``.

    Left minor ``[L 1' .. m']`` exchanges every row except ``1'..ell'`` with
    rows of the right minor ``[R 1 .. m]``.
    """
    flavor = Flavor(flavor)
    lam = as_partition(lam)
    bm = hirota_box(lam, ell, flavor)
    mode = Mode(mode) if mode is not None else (Mode.FORMAL if flavor is Flavor.FORMAL else Mode.SPECIALIZED)
    m = len(lam)
    left = ("L",) + tuple(f"{i}'" for i in range(1, m + 1))
    right = ("R",) + tuple(str(i) for i in range(1, m + 1))
    swap = (1,) + tuple(range(ell + 2, m + 2))
    rel = PluckerRelation(PluckerTerm(left, right, 1), exchange(left, right, swap), swap, bm.labels)
    square = PluckerTerm(
        ("R",) + tuple(f"{i}'" for i in range(1, ell + 1)) + tuple(str(i) for i in range(ell + 1, m + 1)),
        ("L",) + tuple(str(i) for i in range(1, ell + 1)) + tuple(f"{i}'" for i in range(ell + 1, m + 1)),
        1,
    )
    readings: list[SchurTerm | None] = []
    for term in rel.rhs:
        a = read_minor(bm, term.left, mode)
        b = read_minor(bm, term.right, mode)
        if a.is_zero or b.is_zero:
            readings.append(None)
        else:
            readings.append(SchurTerm(term.sign * a.sign * b.sign, a, b, term))
    return BoxRelation(tuple(lam.parts), ell, flavor, bm, rel, square, mode, readings)


def box_relation_for_corner(lam, k: int, flavor: Flavor | str = Flavor.PLAIN, mode=None) -> BoxRelation:
    return box_relation(lam, pivot_height(lam, k), flavor, mode)


def schur_form_value(terms: Sequence[SchurTerm], flavor: Flavor, mode: Mode) -> Polynomial:
    out = Polynomial()
    for st in terms:
        out = out + reading_value(st.left, flavor, mode) * reading_value(st.right, flavor, mode) * st.coeff
    return out


def term_multiset(terms: Sequence[SchurTerm], normalize: bool) -> Counter:
    return Counter(st.key(normalize) for st in terms)
