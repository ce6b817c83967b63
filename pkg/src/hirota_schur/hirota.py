"""Multi-time discrete Hirota identities for Schur functions and their recurrence.

For a partition ``lam`` with ``n`` outside corners and a pivot corner ``k``
(column height ``ell = y_k``)::

    s_lam s_lam = s_{lam+w} s_{lam-w} + sum over nested chains (-1)^(r-1) s_push(lam) s_pull(lam)

and the spectral version shifts every factor by the rule in
:func:`quantum_identity`.  Solving for ``s_{lam+w}`` gives a recurrence that
:class:`Evolver` runs by exact polynomial division.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Mapping, Sequence

from .jt_box import Flavor, schur
from .partitions import (
    IntervalChain,
    Partition,
    add_column,
    as_partition,
    nested_chains,
    partitions_up_to,
    pivot_height,
    pull_chain,
    push_chain,
    remove_column,
    to_corners,
)
from .plucker import box_relation, term_multiset
from .symfunc import InexactDivision, Mode, Polynomial, det_rows, shift_spectral


class MissingSeed(KeyError):
    pass


@dataclass(frozen=True)
class HirotaTerm:
    """``sign * s_alpha^(u + shift_left) * s_beta^(u + shift_right)``.

    ``alpha``/``beta`` are padded part tuples; zero parts are meaningful for
    the unspecialized spectral identity.  Shifts are ``None`` for the plain
    identity.
    """

    kind: str
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    sign: int = 1
    chain: IntervalChain | None = None
    shift_left: int | None = None
    shift_right: int | None = None

    @property
    def alpha_partition(self) -> Partition:
        return Partition(self.alpha)

    @property
    def beta_partition(self) -> Partition:
        return Partition(self.beta)

    def normalized(self) -> "HirotaTerm":
        """Drop zero parts; under ``t_0 = 1`` each dropped zero lowers the shift by one."""

        def trim(parts, shift):
            parts = list(parts)
            while parts and parts[-1] == 0:
                parts.pop()
                if shift is not None:
                    shift -= 1
            return tuple(parts), shift

        a, sa = trim(self.alpha, self.shift_left)
        b, sb = trim(self.beta, self.shift_right)
        return replace(self, alpha=a, beta=b, shift_left=sa, shift_right=sb)

    def plain(self) -> "HirotaTerm":
        return replace(self, shift_left=None, shift_right=None)

    def key(self):
        pair = sorted([(self.alpha, self.shift_left), (self.beta, self.shift_right)], key=repr)
        return (self.sign, tuple(pair))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "chain": [list(iv) for iv in self.chain.intervals] if self.chain else None,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "sign": self.sign,
            "shift_left": self.shift_left,
            "shift_right": self.shift_right,
        }

    @classmethod
    def from_json(cls, data: Mapping, k: int | None = None) -> "HirotaTerm":
        chain = None
        if data.get("chain"):
            ivs = tuple(tuple(iv) for iv in data["chain"])
            chain = IntervalChain(ivs[-1][0] if k is None else k, ivs)
        return cls(
            data["kind"],
            tuple(data["alpha"]),
            tuple(data["beta"]),
            int(data["sign"]),
            chain,
            data.get("shift_left"),
            data.get("shift_right"),
        )

    def __str__(self) -> str:
        def s(parts, shift):
            body = "s[" + ",".join(map(str, parts)) + "]"
            if shift is None:
                return body
            return body + ("^(u)" if shift == 0 else f"^(u{shift:+d})")

        joiner = "*" if self.shift_left is None else " * "
        return ("+ " if self.sign > 0 else "- ") + s(self.alpha, self.shift_left) + joiner + s(self.beta, self.shift_right)


@dataclass
class HirotaIdentity:
    """``lhs = sum(rhs)`` for one partition and pivot corner."""

    lam: Partition
    k: int
    ell: int
    quantum: bool
    lhs: HirotaTerm
    rhs: list[HirotaTerm]

    @property
    def terms(self) -> list[HirotaTerm]:
        return [self.lhs] + self.rhs

    def normalized(self) -> "HirotaIdentity":
        return replace(self, lhs=self.lhs.normalized(), rhs=[t.normalized() for t in self.rhs])

    def plain(self) -> "HirotaIdentity":
        return replace(self, quantum=False, lhs=self.lhs.plain(), rhs=[t.plain() for t in self.rhs])

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "k": self.k,
            "ell": self.ell,
            "quantum": self.quantum,
            "lhs": self.lhs.to_json(),
            "rhs": [t.to_json() for t in self.rhs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HirotaIdentity":
        return cls(
            Partition(tuple(data["lambda"])),
            int(data["k"]),
            int(data["ell"]),
            bool(data["quantum"]),
            HirotaTerm.from_json(data["lhs"], int(data["k"])),
            [HirotaTerm.from_json(t, int(data["k"])) for t in data["rhs"]],
        )

    def render(self) -> str:
        lines = [str(self.lhs).replace("+ ", "", 1) + " ="]
        lines.extend(str(t) for t in self.rhs)
        return "\n".join(lines)


def _identity(lam, k: int, quantum: bool) -> HirotaIdentity:
    lam = as_partition(lam)
    corners = to_corners(lam)
    n = corners.n
    if not 1 <= k <= n:
        raise IndexError(f"corner index {k} out of range 1..{n}")
    ell = pivot_height(lam, k)
    m = len(lam)
    plus = add_column(lam, ell)
    minus = remove_column(lam, ell)
    lam1 = lam.part(1)
    q = (lambda v: v) if quantum else (lambda v: None)
    lhs = HirotaTerm("square", lam.parts, lam.parts, 1, None, q(-1), q(1))
    rhs = [HirotaTerm("fundamental", plus.padded(m), minus.padded(m), 1, None, q(0), q(0))]
    for chain in nested_chains(n, k):
        alpha = push_chain(lam, chain).padded_parts()
        beta = pull_chain(lam, chain).padded_parts()
        beta1 = beta[0] if beta else 0
        if chain.outer[1] == n:
            shifts = (0, lam1 - beta1)
        else:
            shifts = (-1, lam1 - beta1 + 1)
        rhs.append(HirotaTerm("chain", alpha, beta, chain.sign, chain, q(shifts[0]), q(shifts[1])))
    return HirotaIdentity(lam, k, ell, quantum, lhs, rhs)


def main_identity(lam, k: int) -> HirotaIdentity:
    """Terms of the plain identity for ``lam`` at pivot corner ``k``."""
    return _identity(lam, k, quantum=False)


def quantum_identity(lam, k: int) -> HirotaIdentity:
    """The identity with spectral parameters.

    Left side ``s_lam^(u-1) s_lam^(u+1)``; the column term sits at ``(u, u)``.
    A chain term with outermost interval ``[i_1, j_1]`` gets shifts
    ``(0, lam_1 - beta_1)`` when ``j_1 = n`` and ``(-1, lam_1 - beta_1 + 1)``
    otherwise, with ``beta_1`` read before zero parts are dropped.
    """
    return _identity(lam, k, quantum=True)


# ---------------------------------------------------------------------------
# verification


def term_value(term: HirotaTerm, mode: Mode | str = Mode.SPECIALIZED) -> Polynomial:
    mode = Mode(mode)
    if term.shift_left is None:
        flavor = Flavor.PLAIN if mode is Mode.SPECIALIZED else Flavor.FORMAL
        left = schur(term.alpha, flavor, mode=mode)
        right = schur(term.beta, flavor, mode=mode)
    else:
        left = schur(term.alpha, Flavor.QUANTUM, shift=term.shift_left, mode=mode)
        right = schur(term.beta, Flavor.QUANTUM, shift=term.shift_right, mode=mode)
    return left * right * term.sign


@dataclass
class IdentityReport:
    ok: bool
    identity: HirotaIdentity
    mode: Mode
    difference: Polynomial
    term_values: list[Polynomial]
    cross_check: bool | None = None
    mismatch: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "mode": self.mode.value,
            "identity": self.identity.to_json(),
            "difference": self.difference.to_json(),
            "cross_check": self.cross_check,
            "mismatch": self.mismatch,
        }


def verify_identity(identity: HirotaIdentity, mode: Mode | str = Mode.SPECIALIZED,
                    cross_check: bool = True) -> IdentityReport:
    """Expand every Schur factor by its Jacobi-Trudi determinant and check ``lhs - rhs == 0``.

    In specialized mode the terms are first normalized (zero parts dropped).
    With ``cross_check`` the term list is also compared with the Schur form of
    the Plücker relation on the box matrix.
    """
    mode = Mode(mode)
    work = identity.normalized() if mode is Mode.SPECIALIZED else identity
    values = [term_value(t, mode) for t in work.terms]
    diff = values[0]
    for v in values[1:]:
        diff = diff - v
    mismatch: list[str] = []
    agreed = None
    if cross_check:
        agreed, mismatch = compare_with_plucker(identity, mode)
    ok = diff.is_zero() and agreed is not False
    return IdentityReport(ok, identity, mode, diff, values, agreed, mismatch)


def _canon_key(key):
    """The empty shape is 1 at every spectral parameter; forget its shift."""
    coeff, pair = key
    pair = tuple((shape, (0 if shift is not None else None) if shape == () else shift) for shape, shift in pair)
    return coeff, tuple(sorted(pair, key=repr))


def compare_with_plucker(identity: HirotaIdentity, mode: Mode | str = Mode.SPECIALIZED) -> tuple[bool, list[str]]:
    """Check that the identity's right side is the Plücker relation's Schur form."""
    mode = Mode(mode)
    if identity.quantum:
        flavor = Flavor.QUANTUM
    else:
        flavor = Flavor.PLAIN if mode is Mode.SPECIALIZED else Flavor.FORMAL
    rel = box_relation(identity.lam, identity.ell, flavor, mode)
    normalize = mode is Mode.SPECIALIZED
    from_plucker = Counter({_canon_key(k): c for k, c in term_multiset(rel.schur_form(), normalize).items()})
    ours = Counter()
    for t in identity.rhs:
        t = t.normalized() if normalize else t
        ours[_canon_key(t.key())] += 1
    sq = rel.square_reading()
    sq_key = tuple(sorted([sq.left.normalized() if normalize else (sq.left.shape, sq.left.shift),
                           sq.right.normalized() if normalize else (sq.right.shape, sq.right.shift)], key=repr))
    lhs = identity.lhs.normalized() if normalize else identity.lhs
    problems = []
    if _canon_key((1, sq_key))[1] != _canon_key(lhs.key())[1]:
        problems.append(f"square term {sq_key} != {lhs.key()[1]}")
    for key in (from_plucker - ours):
        problems.append(f"only in Plücker relation: {key}")
    for key in (ours - from_plucker):
        problems.append(f"only in identity: {key}")
    return (not problems, problems)


def check_structure(identity: HirotaIdentity) -> list[str]:
    """Corner and column bounds: no term has more corners than ``lam``;
    only ``lam + w`` has more columns."""
    lam = identity.lam
    n = to_corners(lam).n
    width = lam.width
    problems = []
    for t in identity.rhs:
        for parts, tag in ((t.alpha, "alpha"), (t.beta, "beta")):
            p = Partition(parts)
            if to_corners(p).n > n:
                problems.append(f"{tag} {p} has more corners than {lam}")
            if p.width > width and not (t.kind == "fundamental" and tag == "alpha"):
                problems.append(f"{tag} {p} has more columns than {lam}")
    return problems


def identities_up_to(max_boxes: int, max_corners: int | None = None, quantum: bool = False) -> Iterator[HirotaIdentity]:
    for lam in partitions_up_to(max_boxes):
        n = to_corners(lam).n
        if n == 0 or (max_corners is not None and n > max_corners):
            continue
        for k in range(1, n + 1):
            yield quantum_identity(lam, k) if quantum else main_identity(lam, k)


# ---------------------------------------------------------------------------
# recurrence


@dataclass(frozen=True)
class QState:
    partition: Partition
    lattice: tuple[int, ...]
    value: Polynomial
    provenance: str


class DualJacobiTrudiSeeds(Mapping):
    """Initial values for every partition with distinct column heights.

    Each value is the determinant ``det(e_{lam'_i - i + j})`` of single-column
    Schur functions ``e_r = s_(1^r)``; only those single-column values come
    from the Jacobi-Trudi matrices.
    """

    def __init__(self, quantum: bool = False):
        self.quantum = quantum
        self._single: dict[int, Polynomial] = {}
        self._lock = threading.Lock()

    def column(self, r: int) -> Polynomial:
        if r < 0:
            return Polynomial()
        if r == 0:
            return Polynomial.constant(1)
        with self._lock:
            if r not in self._single:
                flavor = Flavor.QUANTUM if self.quantum else Flavor.PLAIN
                self._single[r] = schur((1,) * r, flavor)
            return self._single[r]

    def __contains__(self, key) -> bool:
        try:
            return as_partition(key).has_distinct_columns()
        except (TypeError, ValueError):
            return False

    def __getitem__(self, key) -> Polynomial:
        p = as_partition(key)
        if not p.has_distinct_columns():
            raise MissingSeed(p)
        if self.quantum:
            # no dual determinant with spectral parameters; use the shape directly
            return schur(p, Flavor.QUANTUM)
        cols = p.conjugate().parts
        n = len(cols)
        return det_rows([[self.column(cols[i] - i + j) for j in range(n)] for i in range(n)])

    def __iter__(self):
        raise TypeError("seed family is infinite")

    def __len__(self) -> int:
        raise TypeError("seed family is infinite")


class Evolver:
    """Multi-time evolution of ``s_lam`` from distinct-column seeds.

    Values are memoized per partition at spectral parameter ``u``; other
    shifts are obtained by translating ``u``.  ``policy`` chooses which
    repeated column height to peel when several are available.
    """

    def __init__(self, seeds: Mapping, quantum: bool = False, policy: str = "smallest"):
        if policy not in ("smallest", "largest"):
            raise ValueError(f"unknown policy {policy!r}")
        self.seeds = seeds
        self.quantum = quantum
        self.policy = policy
        self._memo: dict[Partition, QState] = {}
        self._lock = threading.RLock()
        self.divisions = 0

    def _seed(self, p: Partition) -> Polynomial:
        if p in self.seeds:
            return self.seeds[p]
        raise MissingSeed(p)

    def value(self, p, shift: int = 0) -> Polynomial:
        return shift_spectral(self.state(p).value, shift) if shift else self.state(p).value

    def state(self, target) -> QState:
        target = as_partition(target)
        with self._lock:
            if target in self._memo:
                return self._memo[target]
        lattice = target.column_multiplicities()
        if target.has_distinct_columns():
            st = QState(target, lattice, self._seed(target), "seed")
        else:
            st = QState(target, lattice, self._step(target), "evolved")
        with self._lock:
            return self._memo.setdefault(target, st)

    def _step(self, target: Partition) -> Polynomial:
        heights = [h for h, c in enumerate(target.column_multiplicities(), 1) if c >= 2]
        ell = heights[0] if self.policy == "smallest" else heights[-1]
        base = remove_column(target, ell)
        corners = to_corners(base)
        k = corners.ys.index(ell) + 1
        ident = (quantum_identity(base, k) if self.quantum else main_identity(base, k)).normalized()
        acc = self._term(ident.lhs)
        fundamental = ident.rhs[0]
        for t in ident.rhs[1:]:
            acc = acc - self._term(t)
        divisor = self._factor(fundamental.beta, fundamental.shift_right)
        quotient = acc.divexact(divisor)
        self.divisions += 1
        # quotient is s_target at the fundamental term's left shift
        return shift_spectral(quotient, -(fundamental.shift_left or 0))

    def _factor(self, parts, shift) -> Polynomial:
        return self.value(Partition(parts), shift or 0)

    def _term(self, t: HirotaTerm) -> Polynomial:
        return self._factor(t.alpha, t.shift_left) * self._factor(t.beta, t.shift_right) * t.sign


def evolve(seeds: Mapping, target, quantum: bool = False, policy: str = "smallest") -> QState:
    return Evolver(seeds, quantum, policy).state(target)


def q_system(m: int, ell: int, seeds: Callable[[int], Polynomial] | None = None) -> Polynomial:
    """``Q_m^ell(u)`` from the rectangular recurrence

    ``Q_{m+1}^l(u) = (Q_m^l(u-1) Q_m^l(u+1) - Q_m^{l-1}(u) Q_m^{l+1}(u)) / Q_{m-1}^l(u)``

    with ``Q_0^l = Q_m^0 = 1`` and ``Q_1^l(u)`` given by ``seeds`` (default:
    the single-column values ``s_(1^l)^(u)``).
    """
    if seeds is None:
        def seeds(r):
            return schur((1,) * r, Flavor.QUANTUM)

    memo: dict[tuple[int, int], Polynomial] = {}

    def q(a: int, l: int) -> Polynomial:
        if a == 0 or l == 0:
            return Polynomial.constant(1)
        if a == 1:
            return seeds(l)
        if (a, l) not in memo:
            prev = q(a - 1, l)
            num = shift_spectral(prev, -1) * shift_spectral(prev, 1) - q(a - 1, l - 1) * q(a - 1, l + 1)
            memo[(a, l)] = num.divexact(q(a - 2, l))
        return memo[(a, l)]

    return q(m, ell)


__all__ = [
    "DualJacobiTrudiSeeds",
    "Evolver",
    "HirotaIdentity",
    "HirotaTerm",
    "IdentityReport",
    "InexactDivision",
    "MissingSeed",
    "QState",
    "check_structure",
    "compare_with_plucker",
    "evolve",
    "identities_up_to",
    "main_identity",
    "q_system",
    "quantum_identity",
    "term_value",
    "verify_identity",
]
