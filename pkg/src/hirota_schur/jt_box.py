"""Jacobi-Trudi style matrix families and the ``A [] B`` box construction.

Four families are supported:

* ``plain``   -- ``(h_{l_i - i + j})`` with ``h_0 = 1`` and ``h_{k<0} = 0``;
* ``formal``  -- the same matrices with every ``h_k`` a free symbol;
* ``skew``    -- ``(h_{l_i - m_j - i + j})`` for an inner shape ``m``;
* ``quantum`` -- ``(t_{l_i - i + j}(u + c + l_1 - l_i + i + j - n - 1))``.

Matrices are always built with formal symbols.  Whether ``h_0``/``t_0`` are
set to 1 is decided when determinants are taken, so the same matrix serves
both evaluation modes and rows can be read back symbol by symbol.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .partitions import Partition, as_partition, partitions_of
from .symfunc import (
    Mode,
    Polynomial,
    SymMatrix,
    Symbol,
    det_rows,
    specialize_entry,
)


class Flavor(str, enum.Enum):
    PLAIN = "plain"
    FORMAL = "formal"
    SKEW = "skew"
    QUANTUM = "quantum"


class IncompatibleMatrices(ValueError):
    """The two matrices of a box product lie in incompatible row classes."""


class NotContained(ValueError):
    """Skew shape with an inner partition not contained in the outer one."""


def default_mode(flavor: Flavor | str) -> Mode:
    return Mode.FORMAL if Flavor(flavor) is Flavor.FORMAL else Mode.SPECIALIZED


@dataclass(frozen=True)
class JTSpec:
    """One family member: shape padded to ``size`` rows, inner shape, spectral shift."""

    shape: tuple[int, ...]
    flavor: Flavor = Flavor.PLAIN
    inner: tuple[int, ...] = ()
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        object.__setattr__(self, "shape", tuple(self.shape))
        inner = tuple(self.inner)
        if self.flavor is Flavor.SKEW:
            inner = inner + (0,) * (len(self.shape) - len(inner))
            if len(inner) != len(self.shape):
                raise ValueError("inner shape longer than the outer shape")
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return len(self.shape)

    @classmethod
    def of(cls, shape, flavor=Flavor.PLAIN, size: int | None = None, inner=(), shift: int = 0) -> "JTSpec":
        p = as_partition(shape)
        return cls(p.padded(len(p) if size is None else size), flavor, tuple(inner), shift)


# ---------------------------------------------------------------------------
# rows as symbol lists


def spec_rows(spec: JTSpec) -> list[tuple[Symbol, ...]]:
    n = spec.size
    lam = spec.shape
    if spec.flavor in (Flavor.PLAIN, Flavor.FORMAL):
        return [tuple(Symbol("h", lam[i] - i + j, 0) for j in range(n)) for i in range(n)]
    if spec.flavor is Flavor.SKEW:
        mu = spec.inner
        return [tuple(Symbol("h", lam[i] - mu[j] - i + j, 0) for j in range(n)) for i in range(n)]
    # 0-based i, j: argument u + c + l_1 - l_i + (i+1) + (j+1) - n - 1
    l1 = lam[0] if n else 0
    return [
        tuple(Symbol("t", lam[i] - i + j, spec.shift + l1 - lam[i] + i + j + 1 - n) for j in range(n))
        for i in range(n)
    ]


def _entries(row: Sequence[Symbol], mode: Mode) -> tuple[Polynomial, ...]:
    if mode is Mode.SPECIALIZED:
        return tuple(specialize_entry(s) for s in row)
    return tuple(Polynomial.from_symbol(s) for s in row)


def jt_matrix(shape, rows: int | None = None, flavor: Flavor | str = Flavor.PLAIN, *,
              inner=(), shift: int = 0, mode: Mode | str | None = None) -> SymMatrix:
    """The family matrix for ``shape`` padded to ``rows`` rows.

    With ``mode="formal"`` the entries are bare symbols; ``"specialized"``
    replaces ``h_0`` by 1 and negative subscripts by 0.  The default mode is
    specialized except for the formal family.
    """
    flavor = Flavor(flavor)
    p = as_partition(shape)
    if flavor is Flavor.SKEW:
        q = as_partition(inner)
        if not p.contains(q):
            raise NotContained(f"{q} is not contained in {p}")
    spec = JTSpec.of(p, flavor, rows, inner, shift)
    mode = default_mode(flavor) if mode is None else Mode(mode)
    return SymMatrix([str(i + 1) for i in range(spec.size)], [_entries(r, mode) for r in spec_rows(spec)])


@lru_cache(maxsize=None)
def _schur_cached(shape: tuple[int, ...], flavor: Flavor, inner: tuple[int, ...], shift: int, mode: Mode) -> Polynomial:
    spec = JTSpec(shape, flavor, inner, shift)
    return det_rows([_entries(r, mode) for r in spec_rows(spec)])


def schur(shape, flavor: Flavor | str = Flavor.PLAIN, *, size: int | None = None, inner=(),
          shift: int = 0, mode: Mode | str | None = None) -> Polynomial:
    """Determinant of the family matrix; padded ``shape`` tuples may carry zero parts.

    Values are cached per argument tuple (they are immutable polynomials).
    """
    flavor = Flavor(flavor)
    if isinstance(shape, Partition):
        parts = shape.padded(len(shape) if size is None else size)
    else:
        parts = tuple(shape)
        if size is not None:
            parts = parts + (0,) * (size - len(parts))
    mode = default_mode(flavor) if mode is None else Mode(mode)
    if flavor is Flavor.SKEW:
        inner = tuple(inner) + (0,) * (len(parts) - len(tuple(inner)))
    return _schur_cached(parts, flavor, tuple(inner), int(shift), mode)


# ---------------------------------------------------------------------------
# row classes


def row_class(row: Sequence[Symbol], flavor: Flavor):
    """Invariant identifying the equivalence class of a family row.

    plain/formal: the row length; skew: successive inner-shape differences;
    quantum: ``a + b`` for a row starting with ``t_a(u+b)``.
    """
    if flavor in (Flavor.PLAIN, Flavor.FORMAL):
        return len(row)
    if flavor is Flavor.SKEW:
        return tuple(b.k - a.k - 1 for a, b in zip(row, row[1:]))
    first = row[0]
    return first.k + first.shift


def _extension_gap(a_class, b_class, flavor: Flavor, n: int) -> tuple[int, int]:
    """Index gaps used to extend A rows on the right and B rows on the left."""
    if flavor in (Flavor.PLAIN, Flavor.FORMAL):
        if a_class != b_class:
            raise IncompatibleMatrices(f"sizes differ: {a_class} vs {b_class}")
        return 1, 1
    if flavor is Flavor.QUANTUM:
        # dropping the left entry raises a + b by 2
        if b_class != a_class + 2:
            raise IncompatibleMatrices(f"quantum classes {a_class} and {b_class} are not adjacent")
        return 1, 1
    if a_class[1:] != b_class[:-1]:
        raise IncompatibleMatrices(f"skew classes {a_class} and {b_class} do not overlap")
    if n >= 2:
        # full difference vector of the joint class
        diffs = tuple(a_class) + (b_class[-1],)
    else:
        # a single-entry row carries no class data; take the plain gap
        diffs = (0,)
    return diffs[-1] + 1, diffs[0] + 1


@dataclass
class BoxMatrix:
    """``(n+1) x (2n+2)`` matrix with rows ``L, R, 1..n, 1'..n'``."""

    matrix: SymMatrix
    symbol_rows: dict[str, tuple[Symbol, ...]]
    a: JTSpec
    b: JTSpec
    flavor: Flavor
    n: int
    formal_matrix: SymMatrix = field(repr=False, default=None)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.matrix.labels

    def minor(self, labels: Sequence[str], mode: Mode | str | None = None) -> Polynomial:
        """``[labels]`` evaluated in ``mode`` (default: the family's own mode)."""
        if mode is None:
            return self.matrix.determinant(labels)
        if Mode(mode) is Mode.FORMAL:
            return self.formal_matrix.determinant(labels)
        rows = [
            _entries(self.symbol_rows[lab], Mode.SPECIALIZED) if lab in self.symbol_rows
            else self.formal_matrix.row(lab)
            for lab in labels
        ]
        return det_rows(rows)

    def to_json(self) -> dict:
        return {
            "family": self.flavor.value,
            "n": self.n,
            "a": {"shape": list(self.a.shape), "inner": list(self.a.inner), "shift": self.a.shift},
            "b": {"shape": list(self.b.shape), "inner": list(self.b.inner), "shift": self.b.shift},
            "rows": [
                {
                    "label": lab,
                    "entries": (
                        [{"kind": s.kind, "k": s.k, "shift": s.shift} for s in self.symbol_rows[lab]]
                        if lab in self.symbol_rows
                        else [e.terms.get((), 0) for e in self.formal_matrix.row(lab)]
                    ),
                }
                for lab in self.labels
            ],
        }


def box(a: JTSpec, b: JTSpec, mode: Mode | str | None = None) -> BoxMatrix:
    """Build ``A [] B`` for two compatible members of the same family."""
    if a.flavor is not b.flavor:
        raise IncompatibleMatrices("matrices from different families")
    flavor = a.flavor
    n = a.size
    if b.size != n:
        raise IncompatibleMatrices(f"sizes differ: {a.size} vs {b.size}")
    a_rows = spec_rows(a)
    b_rows = spec_rows(b)
    if n:
        a_class = {row_class(r, flavor) for r in a_rows}
        b_class = {row_class(r, flavor) for r in b_rows}
        if len(a_class) != 1 or len(b_class) != 1:
            raise IncompatibleMatrices("rows of a family matrix must share one class")
        right_gap, left_gap = _extension_gap(a_class.pop(), b_class.pop(), flavor, n)
    else:
        right_gap = left_gap = 1
    step = 1 if flavor is Flavor.QUANTUM else 0
    sym_rows: dict[str, tuple[Symbol, ...]] = {}
    kind = "t" if flavor is Flavor.QUANTUM else "h"
    for i, r in enumerate(a_rows):
        last = r[-1]
        sym_rows[str(i + 1)] = r + (Symbol(kind, last.k + right_gap, last.shift + step),)
    for i, r in enumerate(b_rows):
        first = r[0]
        sym_rows[f"{i + 1}'"] = (Symbol(kind, first.k - left_gap, first.shift - step),) + r
    labels = ["L", "R"] + [str(i + 1) for i in range(n)] + [f"{i + 1}'" for i in range(n)]
    l_row = tuple(Polynomial.constant(1 if j == 0 else 0) for j in range(n + 1))
    r_row = tuple(Polynomial.constant((-1) ** n if j == n else 0) for j in range(n + 1))
    formal_rows = [l_row, r_row] + [
        tuple(Polynomial.from_symbol(s) for s in sym_rows[lab]) for lab in labels[2:]
    ]
    formal = SymMatrix(labels, formal_rows)
    mode = default_mode(flavor) if mode is None else Mode(mode)
    shown = [l_row, r_row] + [_entries(sym_rows[lab], mode) for lab in labels[2:]]
    return BoxMatrix(SymMatrix(labels, shown), sym_rows, a, b, flavor, n, formal)


def hirota_box(lam, ell: int, flavor: Flavor | str = Flavor.PLAIN) -> BoxMatrix:
    """``M_{lam - omega_ell} [] M_{lam + omega_ell}`` padded to ``len(lam)`` rows.

    For the quantum family both factors sit at spectral parameter ``u``.
    """
    from .partitions import add_column, remove_column

    flavor = Flavor(flavor)
    lam = as_partition(lam)
    m = len(lam)
    minus = remove_column(lam, ell)
    plus = add_column(lam, ell)
    return box(JTSpec.of(minus, flavor, m), JTSpec.of(plus, flavor, m))


# ---------------------------------------------------------------------------
# reading minors back as family members


@dataclass(frozen=True)
class MinorReading:
    """A box minor expressed as ``sign * det(member)``; ``sign == 0`` for a vanishing minor."""

    labels: tuple[str, ...]
    sign: int
    shape: tuple[int, ...] | None = None
    shift: int | None = None
    inner: tuple[int, ...] | None = None
    reason: str = ""

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def partition(self) -> Partition:
        return Partition(self.shape)

    def normalized(self) -> tuple[tuple[int, ...], int | None]:
        """Zero parts dropped; each dropped zero lowers the spectral shift by one."""
        parts = list(self.shape)
        shift = self.shift
        while parts and parts[-1] == 0:
            parts.pop()
            if shift is not None:
                shift -= 1
        return tuple(parts), shift


def _perm_sign_sorting(keys: Sequence) -> int:
    """Sign of the permutation that sorts ``keys`` into decreasing order."""
    inv = 0
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] < keys[j]:
                inv += 1
    return -1 if inv & 1 else 1


def read_minor(bm: BoxMatrix, labels: Sequence[str], mode: Mode | str | None = None) -> MinorReading:
    """Identify the ``(n+1)``-row minor ``[labels]`` as ``+-det`` of a family member.

    Rows ``L`` and ``R`` are expanded away (dropping the first/last column),
    the remaining rows are sorted by their leading subscript, and the sorted
    matrix is rebuilt from the recovered shape and compared entrywise.
    """
    labels = tuple(labels)
    mode = default_mode(bm.flavor) if mode is None else Mode(mode)
    n = bm.n
    if len(labels) != n + 1:
        raise ValueError(f"need {n + 1} rows, got {len(labels)}")
    if len(set(labels)) != len(labels):
        return MinorReading(labels, 0, reason="repeated label")
    rows = list(labels)
    sign = 1
    lo, hi = 0, n + 1
    if "L" in rows:
        pos = rows.index("L")
        sign *= (-1) ** pos
        rows.pop(pos)
        lo = 1
    if "R" in rows:
        pos = rows.index("R")
        sign *= (-1) ** (len(rows) - 1 - pos)
        sign *= (-1) ** n
        rows.pop(pos)
        hi = n
    windows = [bm.symbol_rows[lab][lo:hi] for lab in rows]
    size = len(windows)
    if size == 0:
        return MinorReading(labels, sign, (), 0 if bm.flavor is Flavor.QUANTUM else None,
                            () if bm.flavor is Flavor.SKEW else None)
    if len({w for w in windows}) != size:
        return MinorReading(labels, 0, reason="repeated row")
    leads = [w[0].k for w in windows]
    sign *= _perm_sign_sorting(leads)
    order = sorted(range(size), key=lambda i: -leads[i])
    ordered = [windows[i] for i in order]
    if len({w[0].k for w in ordered}) != size:
        raise AssertionError("rows with equal leading subscript differ")  # pragma: no cover
    inner = None
    base = 0
    if bm.flavor is Flavor.SKEW:
        diffs = [b.k - a.k - 1 for a, b in zip(ordered[0], ordered[0][1:])]
        inner_l = [0] * size
        for j in range(size - 2, -1, -1):
            inner_l[j] = inner_l[j + 1] + diffs[j]
        inner = tuple(inner_l)
        base = inner[0]
    shape = tuple(r[0].k + base + i for i, r in enumerate(ordered))
    shift = ordered[0][-1].shift if bm.flavor is Flavor.QUANTUM else None
    spec = JTSpec(shape, bm.flavor, inner or (), shift or 0)
    if [tuple(r) for r in spec_rows(spec)] != ordered:
        raise AssertionError(f"minor {labels} is not a family member")  # pragma: no cover
    if mode is Mode.SPECIALIZED:
        if shape[-1] < 0:
            return MinorReading(labels, 0, shape, shift, inner, reason="negative part")
        if bm.flavor is Flavor.SKEW and any(a < b for a, b in zip(shape, inner)):
            return MinorReading(labels, 0, shape, shift, inner, reason="inner not contained")
    return MinorReading(labels, sign, shape, shift, inner)


def reading_value(reading: MinorReading, flavor: Flavor | str, mode: Mode | str | None = None) -> Polynomial:
    """``sign * det`` of the member named by ``reading``."""
    if reading.is_zero:
        return Polynomial()
    flavor = Flavor(flavor)
    mode = default_mode(flavor) if mode is None else Mode(mode)
    value = _schur_cached(reading.shape, flavor, reading.inner or (), reading.shift or 0, mode)
    return value * reading.sign


def duplicate_rows(bm: BoxMatrix) -> list[tuple[str, str]]:
    """Pairs ``(i, j')`` of unprimed/primed rows that coincide entrywise."""
    out = []
    for i in range(1, bm.n + 1):
        for j in range(1, bm.n + 1):
            if bm.symbol_rows[str(i)] == bm.symbol_rows[f"{j}'"]:
                out.append((str(i), f"{j}'"))
    return out


# ---------------------------------------------------------------------------
# Schur-basis re-expansion (oracle for Littlewood-Richardson products)


def schur_expand(p: Polynomial) -> dict[Partition, int]:
    """Coefficients of ``p`` (a specialized ``h`` polynomial) in the Schur basis.

    ``s_nu`` equals ``h_nu`` plus ``h``-monomials indexed by partitions that
    are lexicographically larger, so peeling off the lexicographically
    smallest monomial repeatedly is a unitriangular change of basis.
    """
    from .symfunc import decode

    out: dict[Partition, int] = {}
    rest = p
    while rest.terms:
        def key(mono):
            parts = sorted((decode(c).k for c in mono), reverse=True)
            return (sum(parts), parts)

        mono = min(rest.terms, key=key)
        coeff = rest.terms[mono]
        ks = sorted((decode(c).k for c in mono), reverse=True)
        if any(s.kind != "h" for s in map(decode, mono)) or any(k <= 0 for k in ks):
            raise ValueError("expected a specialized polynomial in h_k, k >= 1")
        nu = Partition(tuple(ks))
        out[nu] = out.get(nu, 0) + coeff
        rest = rest - schur(nu) * coeff
    return out


__all__ = [
    "BoxMatrix",
    "Flavor",
    "IncompatibleMatrices",
    "JTSpec",
    "MinorReading",
    "NotContained",
    "box",
    "default_mode",
    "duplicate_rows",
    "hirota_box",
    "jt_matrix",
    "partitions_of",
    "read_minor",
    "reading_value",
    "row_class",
    "schur",
    "schur_expand",
    "spec_rows",
]
