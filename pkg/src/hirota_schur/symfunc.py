"""Exact sparse polynomials over the symbols ``h_k`` and ``t_k(u+c)``.

Monomials are stored as sorted tuples of integer symbol codes, so the
symbol order (kind, then subscript, then shift) is the integer order and
multiplying two monomials is a merge of two sorted tuples.  Coefficients are
Python ints.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, NamedTuple, Sequence

_OFF = 1 << 20
_BITS = 21
_MASK = (1 << _BITS) - 1
_KINDS = ("h", "t")


class Mode(str, enum.Enum):
    FORMAL = "formal"
    SPECIALIZED = "specialized"


class InexactDivision(ArithmeticError):
    """The divisor does not divide the dividend in the polynomial ring."""


class MissingSymbol(KeyError):
    pass


class Symbol(NamedTuple):
    """``h_k`` (kind ``"h"``) or ``t_k(u + shift)`` (kind ``"t"``)."""

    kind: str
    k: int
    shift: int = 0

    @property
    def code(self) -> int:
        return encode(self)

    def __str__(self) -> str:
        sub = str(self.k) if self.k >= 0 else "{%d}" % self.k
        if self.kind == "h":
            return f"h{sub}"
        return f"t{sub}({_arg(self.shift)})"


def _arg(shift: int) -> str:
    if shift == 0:
        return "u"
    return f"u{shift:+d}"


def encode(sym: Symbol) -> int:
    kind = _KINDS.index(sym.kind)
    return (kind << (2 * _BITS)) | ((sym.k + _OFF) << _BITS) | (sym.shift + _OFF)


def decode(code: int) -> Symbol:
    return Symbol(
        _KINDS[code >> (2 * _BITS)],
        ((code >> _BITS) & _MASK) - _OFF,
        (code & _MASK) - _OFF,
    )


def h(k: int) -> Symbol:
    return Symbol("h", k, 0)


def t(k: int, shift: int = 0) -> Symbol:
    return Symbol("t", k, shift)


class Polynomial:
    """Immutable sparse polynomial ``{monomial: coefficient}`` with no zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms: dict[tuple[int, ...], int] = (
            {m: c for m, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def from_symbol(cls, sym: Symbol, coeff: int = 1) -> "Polynomial":
        return cls._raw({(encode(sym),): coeff} if coeff else {})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Symbol):
            return cls.from_symbol(value)
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot make a polynomial from {value!r}")

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = Polynomial.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self.terms.items()})
        other = Polynomial.coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for mb, cb in b.items():
            if not mb:
                for ma, ca in a.items():
                    out[ma] = get(ma, 0) + ca * cb
                continue
            for ma, ca in a.items():
                m = tuple(sorted(ma + mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def symbols(self) -> set[Symbol]:
        return {decode(c) for m in self.terms for c in m}

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    # -- ordering and division ------------------------------------------

    @staticmethod
    def _order_key(mono: tuple[int, ...]):
        # graded, then lexicographic on the descending factor list
        return (len(mono), mono[::-1])

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=self._order_key)
        return m, self.terms[m]

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises :class:`InexactDivision` otherwise."""
        divisor = Polynomial.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_m, lead_c = divisor.leading_term()
        lead_counts = _counts(lead_m)
        div_terms = list(divisor.terms.items())
        rest = dict(self.terms)
        quotient: dict[tuple[int, ...], int] = {}
        key = self._order_key
        while rest:
            m = max(rest, key=key)
            c = rest[m]
            q_mono = _monomial_quotient(m, lead_counts)
            if q_mono is None or c % lead_c:
                raise InexactDivision(
                    f"leading term {_render_term(m, c)} not divisible by "
                    f"{_render_term(lead_m, lead_c)}"
                )
            q_c = c // lead_c
            quotient[q_mono] = quotient.get(q_mono, 0) + q_c
            for dm, dc in div_terms:
                mono = tuple(sorted(q_mono + dm))
                v = rest.get(mono, 0) - q_c * dc
                if v:
                    rest[mono] = v
                else:
                    rest.pop(mono, None)
        return Polynomial(quotient)

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda mc: self._order_key(mc[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            body = _render_term(m, abs(c))
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [
            {
                "coeff": c,
                "factors": [
                    {"kind": s.kind, "k": s.k, "shift": s.shift}
                    for s in (decode(code) for code in reversed(m))
                ],
            }
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Polynomial":
        out = cls()
        for term in data:
            mono = tuple(sorted(encode(Symbol(f["kind"], f["k"], f.get("shift", 0))) for f in term["factors"]))
            out = out + cls._raw({mono: int(term["coeff"])})
        return out


def _counts(mono: tuple[int, ...]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for code in mono:
        counts[code] = counts.get(code, 0) + 1
    return counts


def _monomial_quotient(mono: tuple[int, ...], divisor_counts: dict[int, int]):
    need = dict(divisor_counts)
    out = []
    for code in mono:
        if need.get(code, 0):
            need[code] -= 1
        else:
            out.append(code)
    if any(need.values()):
        return None
    return tuple(out)


def _render_term(mono: tuple[int, ...], coeff: int) -> str:
    if not mono:
        return str(coeff)
    factors = []
    codes = list(reversed(mono))
    i = 0
    while i < len(codes):
        j = i
        while j < len(codes) and codes[j] == codes[i]:
            j += 1
        power = j - i
        factors.append(str(decode(codes[i])) + (f"^{power}" if power > 1 else ""))
        i = j
    body = "*".join(factors)
    return body if coeff == 1 else f"{coeff}*{body}"


def sym(kind: str, k: int, shift: int = 0) -> Polynomial:
    return Polynomial.from_symbol(Symbol(kind, k, shift))


def poly_add(a, b) -> Polynomial:
    return Polynomial.coerce(a) + Polynomial.coerce(b)


def poly_mul(a, b) -> Polynomial:
    return Polynomial.coerce(a) * Polynomial.coerce(b)


# ---------------------------------------------------------------------------
# substitutions


def _map_monomials(p: Polynomial, fn) -> Polynomial:
    out: dict[tuple[int, ...], int] = {}
    for m, c in p.terms.items():
        new = fn(m)
        if new is None:
            continue
        out[new] = out.get(new, 0) + c
    return Polynomial(out)


def _specialize_mono(m: tuple[int, ...]):
    kept = []
    for code in m:
        k = ((code >> _BITS) & _MASK) - _OFF
        if k < 0:
            return None
        if k:
            kept.append(code)
    return tuple(kept)


def specialize(p: Polynomial, mode: Mode | str = Mode.SPECIALIZED) -> Polynomial:
    """Set every ``h_0``/``t_0(.)`` to 1 and every negative subscript to 0."""
    if Mode(mode) is Mode.FORMAL:
        return p
    return _map_monomials(p, _specialize_mono)


def specialize_entry(sym_: Symbol) -> Polynomial:
    if sym_.k < 0:
        return Polynomial()
    if sym_.k == 0:
        return Polynomial.constant(1)
    return Polynomial.from_symbol(sym_)


def forget_shift(p: Polynomial) -> Polynomial:
    """Send ``t_k(u+c)`` to ``h_k``."""

    def fn(m):
        return tuple(sorted(encode(Symbol("h", s.k, 0)) for s in map(decode, m)))

    return _map_monomials(p, fn)


def shift_spectral(p: Polynomial, delta: int) -> Polynomial:
    """Replace ``u`` by ``u + delta`` in every ``t`` symbol."""
    if not delta:
        return p

    def fn(m):
        return tuple(
            sorted(encode(Symbol(s.kind, s.k, s.shift + delta)) if s.kind == "t" else encode(s) for s in map(decode, m))
        )

    return _map_monomials(p, fn)


def eval_numeric(p: Polynomial, assignment: Mapping[Symbol, int]) -> int:
    total = 0
    cache: dict[int, int] = {}
    for m, c in p.terms.items():
        v = c
        for code in m:
            if code not in cache:
                s = decode(code)
                if s not in assignment:
                    raise MissingSymbol(s)
                cache[code] = int(assignment[s])
            v *= cache[code]
        total += v
    return total


# ---------------------------------------------------------------------------
# matrices


class SymMatrix:
    """Rectangular matrix of polynomials with distinct string row labels."""

    def __init__(self, labels: Sequence[str], rows: Sequence[Sequence]):
        if len(labels) != len(rows):
            raise ValueError("one label per row required")
        if len(set(labels)) != len(labels):
            raise ValueError(f"row labels must be distinct: {labels}")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("matrix is not rectangular")
        self.labels: tuple[str, ...] = tuple(labels)
        self.rows: tuple[tuple[Polynomial, ...], ...] = tuple(
            tuple(Polynomial.coerce(e) for e in r) for r in rows
        )
        self.ncols = widths.pop() if widths else 0
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, label: str) -> tuple[Polynomial, ...]:
        return self.rows[self._index[label]]

    def has_label(self, label: str) -> bool:
        return label in self._index

    def map(self, fn) -> "SymMatrix":
        return SymMatrix(self.labels, [[fn(e) for e in r] for r in self.rows])

    def determinant(self, rows: Sequence[str] | None = None) -> Polynomial:
        return determinant(self, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        lines = [f"{lab:>4} | " + "  ".join(str(e) for e in r) for lab, r in zip(self.labels, self.rows)]
        return "SymMatrix(\n" + "\n".join(lines) + "\n)"

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "rows": [[e.to_json() for e in r] for r in self.rows],
        }


def det_rows(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square list of rows, by memoized expansion over column subsets."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square selection")
    if n == 0:
        return Polynomial.constant(1)
    # Rows are taken bottom-up (Jacobi-Trudi rows are sparse at the bottom).
    # A state is the set of columns used by the rows placed so far.
    layer: dict[int, Polynomial] = {0: Polynomial.constant(1)}
    for r in reversed(rows):
        nonzero = [(c, e) for c, e in enumerate(r) if e.terms]
        nxt: dict[int, Polynomial] = {}
        for mask, acc in layer.items():
            for c, e in nonzero:
                bit = 1 << c
                if mask & bit:
                    continue
                term = acc * e
                # rows already placed sit below this one: inversions are their columns left of c
                if bin(mask & (bit - 1)).count("1") & 1:
                    term = -term
                key = mask | bit
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        layer = {k: v for k, v in nxt.items() if v.terms}
        if not layer:
            return Polynomial()
    return layer.get((1 << n) - 1, Polynomial())


def determinant(m: SymMatrix, rows: Sequence[str] | None = None) -> Polynomial:
    """``[r_1 ... r_k]_M``: determinant of the rows listed, in the order listed."""
    labels = m.labels if rows is None else tuple(rows)
    if len(labels) != m.ncols:
        raise ValueError(f"need {m.ncols} rows for a square minor, got {len(labels)}")
    if len(set(labels)) != len(labels):
        return Polynomial()
    return det_rows([m.row(lab) for lab in labels])
