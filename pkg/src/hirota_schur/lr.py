"""Littlewood-Richardson products by column words acting on Young diagrams.

A tableau ``T`` of shape ``mu`` acts on a diagram ``Y`` letter by letter
through its column word (columns right to left, each read top to bottom):
letter ``k`` adds a box to row ``k`` and is legal only if row ``k`` is
strictly shorter than row ``k-1``.  The multiset of final diagrams over all
legal tableaux is the Schur expansion of ``s_Y * s_mu``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .hirota import main_identity
from .partitions import Partition, as_partition


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def is_semistandard(self) -> bool:
        rows = self.rows
        if any(a < b for a, b in zip(map(len, rows), map(len, rows[1:]))):
            return False
        for r in rows:
            if any(x < 1 for x in r) or any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(rows, rows[1:]):
            if any(lower[c] <= upper[c] for c in range(len(lower))):
                return False
        return True

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(r[c] for r in self.rows if len(r) > c) for c in range(width)]

    def column_word(self) -> tuple[int, ...]:
        return tuple(x for col in reversed(self.columns()) for x in col)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "Tableau":
        height = max((len(c) for c in cols), default=0)
        return cls(tuple(tuple(c[r] for c in cols if len(c) > r) for r in range(height)))

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows) or "(empty)"


def enumerate_ssyt(shape, max_entry: int) -> list[Tableau]:
    """Every semistandard tableau of ``shape`` with entries in ``1..max_entry``."""
    shape = as_partition(shape)
    cells = [(r, c) for r, length in enumerate(shape.parts) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def rec(idx: int):
        if idx == len(cells):
            out.append(Tableau(tuple(tuple(grid[(r, c)] for c in range(length))
                                     for r, length in enumerate(shape.parts))))
            return
        r, c = cells[idx]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        for v in range(lo, max_entry + 1):
            grid[(r, c)] = v
            rec(idx + 1)
        grid.pop((r, c), None)

    rec(0)
    return out


@dataclass(frozen=True)
class ActionTrace:
    start: Partition
    word: tuple[int, ...]
    shapes: tuple[Partition, ...]
    illegal_at: int | None = None

    @property
    def legal(self) -> bool:
        return self.illegal_at is None

    @property
    def final(self) -> Partition | None:
        return self.shapes[-1] if self.legal else None


def act(y, word: Sequence[int]) -> ActionTrace:
    """Apply ``word`` to ``y`` letter by letter; stops at the first illegal letter."""
    start = as_partition(y)
    rows = list(start.parts)
    shapes = [start]
    for idx, k in enumerate(word):
        while len(rows) < k:
            rows.append(0)
        if k < 1 or (k > 1 and rows[k - 1] >= rows[k - 2]):
            return ActionTrace(start, tuple(word), tuple(shapes), idx)
        rows[k - 1] += 1
        shapes.append(Partition(tuple(rows)))
    return ActionTrace(start, tuple(word), tuple(shapes), None)


def legal_actions(y, mu, max_entry: int | None = None) -> Iterator[tuple[Tableau, tuple[int, ...], Partition]]:
    """Tableaux of shape ``mu`` acting legally on ``y``, with their words and final shapes.

    Cells are filled in column-word order so every prefix is checked as soon
    as it is placed; the output equals filtering :func:`enumerate_ssyt`
    through :func:`act`.
    """
    y = as_partition(y)
    mu = as_partition(mu)
    if max_entry is None:
        max_entry = len(y) + len(mu)
    width = mu.width
    heights = mu.conjugate().parts
    order = [(r, c) for c in range(width - 1, -1, -1) for r in range(heights[c])]
    grid: dict[tuple[int, int], int] = {}
    rows = list(y.padded(max(len(y), max_entry)))
    word: list[int] = []

    def rec(idx: int):
        if idx == len(order):
            cols = [tuple(grid[(r, c)] for r in range(heights[c])) for c in range(width)]
            yield Tableau.from_columns(cols), tuple(word), Partition(tuple(rows))
            return
        r, c = order[idx]
        lo = grid.get((r - 1, c), 0) + 1
        hi = grid.get((r, c + 1), max_entry)
        for v in range(lo, hi + 1):
            if v > 1 and rows[v - 1] >= rows[v - 2]:
                continue
            grid[(r, c)] = v
            rows[v - 1] += 1
            word.append(v)
            yield from rec(idx + 1)
            word.pop()
            rows[v - 1] -= 1
        grid.pop((r, c), None)

    yield from rec(0)


def lr_multiply(lam, mu, max_entry: int | None = None) -> Counter:
    """Multiset of final shapes: ``s_lam * s_mu = sum(s_nu for nu in result)``."""
    return Counter(final for _, _, final in legal_actions(lam, mu, max_entry))


# ---------------------------------------------------------------------------
# rectangles


def rectangle(m: int, ell: int) -> Partition:
    return Partition((m,) * ell)


def rectangle_bijection(m: int, ell: int, tableau: Tableau) -> tuple[str, Tableau, Partition]:
    """Send a legal ``T`` on ``Y(m^ell)`` to one of the two right-hand products.

    Case ``"A"`` (first column is ``1..ell``): drop that column, giving a
    tableau of shape ``(m-1)^ell`` acting on ``Y((m+1)^ell)``.  Case ``"B"``:
    delete the ``ell+1`` from every column and close the gap, giving shape
    ``m^(ell-1)`` acting on ``Y(m^(ell+1))``.  Returns the case, the new
    tableau and the diagram it acts on.
    """
    rect = rectangle(m, ell)
    if tableau.shape != rect:
        raise ValueError(f"tableau shape {tableau.shape} is not {rect}")
    trace = act(rect, tableau.column_word())
    if not trace.legal:
        raise ValueError("tableau does not act legally on the rectangle")
    cols = tableau.columns()
    if cols[0] == tuple(range(1, ell + 1)):
        return "A", Tableau.from_columns(cols[1:]), rectangle(m + 1, ell)
    new_cols = []
    for col in cols:
        above = [x for x in col if x > ell]
        if not above or min(above) != ell + 1:
            raise AssertionError(f"column {col} has no {ell + 1} as its smallest entry above {ell}")
        new_cols.append(tuple(x for x in col if x != ell + 1))
    return "B", Tableau.from_columns(new_cols), Partition((m,) * (ell + 1))


@dataclass
class RectangleReport:
    m: int
    ell: int
    legal: int
    case_a: int
    case_b: int
    injective: bool
    surjective: bool
    shape_preserving: bool

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective and self.shape_preserving


def check_rectangle(m: int, ell: int) -> RectangleReport:
    """Exhaustive check of both case maps for ``s_(m^ell)^2``."""
    rect = rectangle(m, ell)
    max_entry = 2 * ell + 1
    images = {"A": [], "B": []}
    preserving = True
    total = 0
    for tab, _, final in legal_actions(rect, rect, max_entry):
        total += 1
        case, image, target = rectangle_bijection(m, ell, tab)
        images[case].append(image)
        out = act(target, image.column_word())
        preserving &= out.legal and out.final == final
    domain_a = {t for t, _, _ in legal_actions(rectangle(m + 1, ell), rectangle(m - 1, ell), max_entry)}
    domain_b = {t for t, _, _ in legal_actions(Partition((m,) * (ell + 1)), Partition((m,) * (ell - 1)), max_entry)}
    injective = all(len(set(v)) == len(v) for v in images.values())
    surjective = set(images["A"]) == domain_a and set(images["B"]) == domain_b
    return RectangleReport(m, ell, total, len(images["A"]), len(images["B"]), injective, surjective, preserving)


# ---------------------------------------------------------------------------
# shape-level inclusion-exclusion


@dataclass
class ChainContribution:
    label: str
    sign: int
    acting_on: Partition
    tableau_shape: Partition
    shapes: Counter
    words: dict[Partition, list[tuple[int, ...]]] = field(default_factory=dict)


@dataclass
class ConjectureReport:
    lam: Partition
    k: int
    square: Counter
    contributions: list[ChainContribution]

    def signed_total(self) -> Counter:
        total: Counter = Counter()
        for c in self.contributions:
            for shape, mult in c.shapes.items():
                total[shape] += c.sign * mult
        return total

    @property
    def ok(self) -> bool:
        total = self.signed_total()
        keys = set(total) | set(self.square)
        return all(total.get(s, 0) == self.square.get(s, 0) for s in keys)

    def occurrences(self, shape) -> list[tuple[str, int, list[tuple[int, ...]]]]:
        shape = as_partition(shape)
        return [
            (c.label, c.sign * c.shapes[shape], c.words.get(shape, []))
            for c in self.contributions
            if c.shapes.get(shape)
        ]

    def to_json(self) -> dict:
        def ms(counter):
            return [{"shape": list(s.parts), "multiplicity": m} for s, m in sorted(counter.items())]

        return {
            "lambda": list(self.lam.parts),
            "k": self.k,
            "ok": self.ok,
            "square": ms(self.square),
            "terms": [
                {
                    "term": c.label,
                    "sign": c.sign,
                    "acting_on": list(c.acting_on.parts),
                    "tableau_shape": list(c.tableau_shape.parts),
                    "shapes": ms(c.shapes),
                }
                for c in self.contributions
            ],
        }


def _contribution(label, sign, y, mu, max_entry) -> ChainContribution:
    shapes: Counter = Counter()
    words: dict[Partition, list[tuple[int, ...]]] = defaultdict(list)
    for _, word, final in legal_actions(y, mu, max_entry):
        shapes[final] += 1
        words[final].append(word)
    return ChainContribution(label, sign, as_partition(y), as_partition(mu), shapes, dict(words))


def conjecture_check(lam, k: int) -> ConjectureReport:
    """Compare ``SSYT(lam)`` on ``Y(lam)`` with the signed union of the chain sets.

    This checks the conjectured decomposition at the level of shape counts
    only; it does not construct bijections.
    """
    lam = as_partition(lam)
    ident = main_identity(lam, k)
    max_entry = 2 * len(lam) + 2
    square = lr_multiply(lam, lam, max_entry)
    fund = ident.rhs[0]
    contributions = [
        _contribution("column", 1, Partition(fund.alpha), Partition(fund.beta), max_entry)
    ]
    for t in ident.rhs[1:]:
        contributions.append(_contribution(str(t.chain), t.sign, Partition(t.alpha), Partition(t.beta), max_entry))
    return ConjectureReport(lam, k, square, contributions)


__all__ = [
    "ActionTrace",
    "ConjectureReport",
    "Tableau",
    "act",
    "check_rectangle",
    "conjecture_check",
    "enumerate_ssyt",
    "legal_actions",
    "lr_multiply",
    "rectangle_bijection",
]
