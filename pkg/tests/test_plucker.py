import random
from itertools import combinations

import pytest

from hirota_schur.jt_box import Flavor
from hirota_schur.partitions import Partition
from hirota_schur.plucker import (
    LabelMismatch,
    PluckerTerm,
    box_relation,
    exchange,
    generate,
    permutation_parity,
    verify,
)
from hirota_schur.symfunc import SymMatrix


def random_matrix(labels, n, rng):
    return SymMatrix(labels, [[rng.randint(-5, 5) for _ in range(n)] for _ in labels])


def test_seven_term_verbatim():
    rel = generate(4, (1, 2), list("1234"), list("5678"))
    assert str(rel) == ("[1234][5678] = [5634][1278] + [5734][1628] + [5834][1672]"
                        " + [6734][5128] + [6834][5172] + [7834][5612]")
    assert rel.fixed == ("3", "4")


def test_three_term_shape():
    rel = generate(2, (1,), list("12"), list("34"))
    assert [(t.left, t.right) for t in rel.rhs] == [(("3", "2"), ("1", "4")), (("4", "2"), ("3", "1"))]


def test_full_swap_single_term():
    rel = generate(3, (1, 2, 3))
    assert len(rel.rhs) == 1


@pytest.mark.parametrize("bad", [(), (0,), (5,)])
def test_generate_rejects(bad):
    with pytest.raises(ValueError):
        generate(4, bad)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_random_integer_matrices(n):
    rng = random.Random(100 + n)
    for size in range(1, n + 1):
        for swap in combinations(range(1, n + 1), size):
            rel = generate(n, swap)
            for _ in range(3):
                assert verify(rel, random_matrix(rel.order, n, rng)).ok


def test_verify_missing_label():
    rel = generate(2, (1,))
    with pytest.raises(LabelMismatch):
        verify(rel, SymMatrix(["1", "2", "1'"], [[1, 0], [0, 1], [1, 1]]))


def test_canonical_sign():
    term = PluckerTerm(("2", "1"), ("3", "4"), 1)
    assert term.canonical(["1", "2", "3", "4"]) == PluckerTerm(("1", "2"), ("3", "4"), -1)
    assert permutation_parity(["b", "a", "c"], ["a", "b", "c"]) == -1
    assert term.swap_within("right", 0, 1).sign == -1


def test_exchange_counts():
    assert len(exchange("abc", "def", (1, 2))) == 3


def test_box_relation_example():
    br = box_relation((3, 2, 1), 2)
    assert len(br.relation.rhs) == 6
    assert br.nonzero_count() == 6
    shapes = [(st.left.normalized()[0], st.right.normalized()[0]) for st in br.schur_form()]
    assert ((4, 3, 1), (2, 1, 1)) in shapes
    assert verify(br.relation, br.box.formal_matrix).ok


@pytest.mark.parametrize("m,ell", [(1, 1), (2, 2), (3, 2), (2, 3)])
def test_rectangle_relation_has_three_terms(m, ell):
    br = box_relation((m,) * ell, ell)
    assert len(br.schur_form()) == 2  # square = fundamental + one strip


def test_corner_count_not_length():
    # (3,3,1) has length 3 but only 2 corners
    br = box_relation((3, 3, 1), 2)
    assert br.nonzero_count() == 3


@pytest.mark.parametrize("flavor", [Flavor.PLAIN, Flavor.FORMAL, Flavor.QUANTUM])
def test_box_relation_holds_symbolically(flavor):
    br = box_relation((3, 2, 1), 2, flavor)
    assert verify(br.relation, br.box.formal_matrix).ok
