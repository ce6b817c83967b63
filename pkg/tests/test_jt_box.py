from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from hirota_schur.jt_box import (
    Flavor,
    IncompatibleMatrices,
    JTSpec,
    NotContained,
    box,
    duplicate_rows,
    hirota_box,
    jt_matrix,
    read_minor,
    reading_value,
    schur,
    schur_expand,
)
from hirota_schur.partitions import Partition, add_column, remove_column
from hirota_schur.symfunc import Mode, Polynomial, SymMatrix, forget_shift, sym, t


def H(k):
    return sym("h", k)


def test_plain_matrix():
    m = jt_matrix((2, 1))
    assert m.row("1") == (H(2), H(3))
    assert m.row("2") == (Polynomial.constant(1), H(1))
    assert schur((2, 1)) == H(2) * H(1) - H(3)


def test_formal_matrix_keeps_h0():
    m = jt_matrix((2, 1), flavor="formal")
    assert m.row("2") == (H(0), H(1))


def test_quantum_antidiagonal():
    m = jt_matrix((2, 1, 1), flavor="quantum", mode="formal")
    anti = [m.row(str(i))[3 - i] for i in (1, 2, 3)]
    shifts = [next(iter(p.symbols())).shift for p in anti]
    assert shifts == [0, 2 - 1, 2 - 1]


def test_quantum_forgets_to_plain():
    for shape in [(2, 1, 1), (3, 3), (4, 2, 1)]:
        assert forget_shift(schur(shape, "quantum", mode="formal")) == schur(shape, "formal")


def test_skew_requires_containment():
    with pytest.raises(NotContained):
        jt_matrix((2, 1), flavor="skew", inner=(3,))
    # s_(2,1)/(1) = h2 h1 - h3 + h3 ... = h1^2
    assert schur((2, 1), "skew", inner=(1,)) == H(1) * H(1)


def test_rectangle_is_initial_condition():
    # 2x2 rectangle: h2^2 - h1 h3
    assert schur((2, 2)) == H(2) * H(2) - H(1) * H(3)


def test_box_example_minors():
    bm = box(JTSpec.of((2, 1, 1)), JTSpec.of((4, 3, 1)))
    assert bm.minor(["R", "1", "2", "3"]) == schur((2, 1, 1))
    assert bm.minor(["L", "1'", "2'", "3'"]) == schur((4, 3, 1))
    assert bm.matrix.row("L")[0] == Polynomial.constant(1)
    assert bm.matrix.row("R")[-1] == Polynomial.constant(-1)


def test_degenerate_box():
    bm = box(JTSpec.of((), size=1), JTSpec.of((), size=1))
    assert len(bm.labels) == 4


def test_incompatible():
    with pytest.raises(IncompatibleMatrices):
        box(JTSpec.of((2, 1)), JTSpec.of((2, 1), size=3))
    with pytest.raises(IncompatibleMatrices):
        box(JTSpec.of((2, 1)), JTSpec.of((2, 1), "quantum"))
    with pytest.raises(IncompatibleMatrices):
        box(JTSpec.of((2, 1), "quantum", shift=0), JTSpec.of((2, 1), "quantum", shift=0))


def test_quantum_box_forgets_to_plain():
    q = hirota_box((3, 2, 1), 2, "quantum")
    p = hirota_box((3, 2, 1), 2, "formal")
    for lab in q.labels:
        qa = [forget_shift(e) for e in q.formal_matrix.row(lab)]
        assert tuple(qa) == p.formal_matrix.row(lab)


BOXES = [
    ("plain", (3, 2, 1), 2),
    ("formal", (3, 2, 1), 1),
    ("quantum", (3, 2, 1), 2),
    ("quantum", (2, 2, 1), 2),
    ("plain", (3, 3, 1), 3),
]


@pytest.mark.parametrize("flavor,lam,ell", BOXES)
def test_every_minor_is_a_family_member(flavor, lam, ell):
    bm = hirota_box(lam, ell, flavor)
    for mode in (Mode.FORMAL, Mode.SPECIALIZED):
        for labels in combinations(bm.labels, bm.n + 1):
            reading = read_minor(bm, labels, mode)
            assert bm.minor(labels, mode) == reading_value(reading, flavor, mode), labels


def test_skew_box_minors():
    a = JTSpec.of((3, 2), "skew", inner=(1,))
    b = JTSpec.of((4, 2), "skew", inner=(1,))
    bm = box(a, b)
    assert bm.minor(["R", "1", "2"]) == schur((3, 2), "skew", inner=(1,))
    assert bm.minor(["L", "1'", "2'"]) == schur((4, 2), "skew", inner=(1,))
    for labels in combinations(bm.labels, 3):
        reading = read_minor(bm, labels, Mode.FORMAL)
        assert bm.minor(labels, Mode.FORMAL) == reading_value(reading, "skew", Mode.FORMAL)


def test_duplicate_rows():
    assert duplicate_rows(hirota_box((2, 2), 2)) == [("1", "2'")]
    assert len(duplicate_rows(hirota_box((3, 3, 3), 3))) == 2
    assert duplicate_rows(hirota_box((3, 2, 1), 2)) == []


def test_box_json_lists_rows():
    data = hirota_box((2, 1), 1).to_json()
    assert [r["label"] for r in data["rows"]] == ["L", "R", "1", "2", "1'", "2'"]
    assert data["family"] == "plain"


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3).map(lambda xs: Partition(tuple(sorted(xs, reverse=True)))))
def test_schur_expand_inverts_schur(p):
    assert schur_expand(schur(p)) == {p: 1}


def test_schur_expand_product():
    got = schur_expand(schur((1,)) * schur((1,)))
    assert got == {Partition((2,)): 1, Partition((1, 1)): 1}
