import json

import pytest

from hirota_schur.hirota import (
    DualJacobiTrudiSeeds,
    Evolver,
    HirotaIdentity,
    MissingSeed,
    check_structure,
    evolve,
    identities_up_to,
    main_identity,
    q_system,
    quantum_identity,
    verify_identity,
)
from hirota_schur.jt_box import schur
from hirota_schur.partitions import Partition, partitions_up_to
from hirota_schur.symfunc import Mode, sym

# frozen from the worked example for (3,2,1) at the middle corner
EXAMPLE_PLAIN = [
    ((4, 3, 1), (2, 1, 1), 1),
    ((3, 2, 2), (3, 1, 1), 1),
    ((3, 3, 3), (1, 1, 1), 1),
    ((3, 2, 2, 2), (3, 0), 1),
    ((3, 3, 3, 2), (1, 0), 1),
    ((3, 3, 3, 3), (0, 0), -1),
]
EXAMPLE_SHIFTS = [(0, 0), (-1, 1), (-1, 3), (0, 0), (0, 2), (0, 3)]


def test_plain_example_terms():
    ident = main_identity((3, 2, 1), 2)
    assert [(t.alpha, t.beta, t.sign) for t in ident.rhs] == EXAMPLE_PLAIN
    assert ident.ell == 2


def test_quantum_example_shifts():
    ident = quantum_identity((3, 2, 1), 2)
    assert (ident.lhs.shift_left, ident.lhs.shift_right) == (-1, 1)
    assert [(t.shift_left, t.shift_right) for t in ident.rhs] == EXAMPLE_SHIFTS


def test_quantum_projects_to_plain():
    for lam, k in [((3, 2, 1), 1), ((3, 2, 1), 2), ((4, 2, 2, 1), 3)]:
        assert [t.key() for t in quantum_identity(lam, k).plain().rhs] == [t.key() for t in main_identity(lam, k).rhs]


def test_rendering():
    plain = main_identity((3, 2, 1), 2).render().splitlines()
    assert plain[1] == "+ s[4,3,1]*s[2,1,1]"
    assert plain[-1] == "- s[3,3,3,3]*s[0,0]"
    quantum = quantum_identity((3, 2, 1), 2).render().splitlines()
    assert quantum[3] == "+ s[3,3,3]^(u-1) * s[1,1,1]^(u+3)"


def test_normalized_drops_zero_parts():
    last = quantum_identity((3, 2, 1), 2).normalized().rhs[-1]
    assert last.beta == () and last.shift_right == 1
    assert str(main_identity((3, 2, 1), 2).normalized().rhs[-1]) == "- s[3,3,3,3]*s[]"


def test_rectangle_is_three_term():
    ident = main_identity((2, 2), 1)
    assert [(t.alpha, t.beta, t.sign) for t in ident.rhs] == [((3, 3), (1, 1), 1), ((2, 2, 2), (2,), 1)]


def test_two_one():
    ident = main_identity((2, 1), 1)
    assert [str(t.chain) for t in ident.rhs[1:]] == ["{[1,1]}", "{[1,2]}"]
    assert verify_identity(ident).ok


@pytest.mark.parametrize("mode", [Mode.SPECIALIZED, Mode.FORMAL])
def test_example_verifies(mode):
    assert verify_identity(main_identity((3, 2, 1), 2), mode).ok
    assert verify_identity(quantum_identity((3, 2, 1), 2), mode).ok


def test_verify_detects_a_wrong_sign():
    ident = main_identity((3, 2, 1), 2)
    broken = HirotaIdentity(ident.lam, ident.k, ident.ell, False, ident.lhs,
                            ident.rhs[:-1] + [ident.rhs[-1].__class__(**{**ident.rhs[-1].__dict__, "sign": 1})])
    rep = verify_identity(broken)
    assert not rep.ok and not rep.difference.is_zero()


def test_sweep_ten_boxes():
    for ident in identities_up_to(10):
        assert verify_identity(ident).ok, ident.lam
        assert check_structure(ident) == []


def test_quantum_sweep_small():
    for ident in identities_up_to(7, quantum=True):
        # the unspecialized ring grows factorially with the number of rows
        if len(ident.lam) <= 4:
            assert verify_identity(ident, Mode.FORMAL, cross_check=False).ok
        assert verify_identity(ident, Mode.SPECIALIZED).ok


def test_identity_json_round_trip():
    for ident in (main_identity((3, 2, 1), 2), quantum_identity((4, 2, 1), 1)):
        data = json.loads(json.dumps(ident.to_json()))
        assert HirotaIdentity.from_json(data) == ident


def test_bad_corner_index():
    with pytest.raises(IndexError):
        main_identity((2, 2), 2)


def test_evolve_seed_and_targets():
    seeds = DualJacobiTrudiSeeds()
    assert evolve(seeds, (2, 1)).provenance == "seed"
    st = evolve(seeds, (2, 2))
    assert st.provenance == "evolved" and st.value == schur((2, 2))
    with pytest.raises(MissingSeed):
        seeds[Partition((2, 2))]


@pytest.mark.parametrize("policy", ["smallest", "largest"])
def test_evolve_matches_determinant(policy):
    ev = Evolver(DualJacobiTrudiSeeds(), policy=policy)
    for lam in partitions_up_to(8):
        if lam.parts:
            assert ev.value(lam) == schur(lam), lam


def test_evolve_order_independent():
    a = Evolver(DualJacobiTrudiSeeds(), policy="smallest")
    b = Evolver(DualJacobiTrudiSeeds(), policy="largest")
    for lam in [(3, 3, 2, 2), (2, 2, 2, 1, 1), (4, 4, 4)]:
        assert a.value(lam) == b.value(lam)


def test_quantum_evolve():
    ev = Evolver(DualJacobiTrudiSeeds(quantum=True), quantum=True)
    for lam in partitions_up_to(6):
        if lam.parts:
            assert ev.value(lam) == schur(lam, "quantum"), lam


def test_q_system():
    for m in range(1, 4):
        for ell in range(1, 4):
            assert q_system(m, ell) == schur((m,) * ell, "quantum")


def test_generic_seeds_stay_polynomial():
    # free symbols as Q_1^l: every division in the ladder is still exact
    ladder = q_system(3, 2, seeds=lambda r: sym("h", 10 + r))
    assert not ladder.is_zero()


def test_unknown_policy():
    with pytest.raises(ValueError):
        Evolver(DualJacobiTrudiSeeds(), policy="middle")
