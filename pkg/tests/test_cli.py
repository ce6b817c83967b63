import json

import pytest

from hirota_schur.cli import main
from hirota_schur.hirota import HirotaIdentity, main_identity


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_identity_verify(capsys):
    code, out, _ = run(capsys, "hirota", "identity", "--lambda", "3,2,1", "--k", "2", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "+ s[4,3,1]*s[2,1,1]"
    assert sum(1 for line in lines if line.startswith(("+ ", "- "))) == 6
    assert lines[-1].startswith("verified: ok")


def test_identity_json_round_trip(capsys):
    code, out, _ = run(capsys, "hirota", "identity", "--lambda", "3,2,1", "--k", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "hirota-schur/1"
    assert HirotaIdentity.from_json(data["identity"]) == main_identity((3, 2, 1), 2)


def test_quantum_identity_text(capsys):
    code, out, _ = run(capsys, "hirota", "identity", "--lambda", "3,2,1", "--k", "2", "--quantum", "--verify",
                       "--mode", "formal")
    assert code == 0 and "+ s[3,3,3]^(u-1) * s[1,1,1]^(u+3)" in out


def test_deterministic(capsys):
    argv = ("lr", "conjecture", "--lambda", "3,2,1", "--k", "2", "--report", "json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("argv", [
    ("hirota", "identity", "--lambda", "2,2", "--k", "2"),
    ("hirota", "identity", "--lambda", "1,2", "--k", "1"),
    ("plucker", "generate", "--n", "3", "--swap", "4"),
    ("plucker", "generate", "--n", "3", "--swap", "x"),
    ("box", "--a", "2,1", "--b", "2,1", "--family", "quantum"),
    ("hirota", "bogus"),
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_evolve_json(capsys):
    code, out, _ = run(capsys, "hirota", "evolve", "--target", "3,3,2", "--report", "json")
    data = json.loads(out)
    assert code == 0 and data["matches_determinant"] and data["provenance"] == "evolved"


def test_plucker_commands(capsys):
    code, out, _ = run(capsys, "plucker", "generate", "--n", "4", "--swap", "1,2")
    assert code == 0 and out.count(" + ") == 5
    code, out, _ = run(capsys, "plucker", "verify", "--box", "3,2,1", "--k", "2", "--family", "quantum",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["rhs"]) == 6


def test_box_command(capsys):
    code, out, _ = run(capsys, "box", "--a", "2,1", "--b", "3,2", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 2


def test_lr_multiply(capsys):
    code, out, _ = run(capsys, "lr", "multiply", "--lambda", "2,1", "--mu", "2,1")
    assert code == 0 and "2*s[3,2,1]" in out
    code, out, _ = run(capsys, "lr", "multiply", "--lambda", "1", "--mu", "1", "--format", "json")
    assert json.loads(out)["product"] == [{"shape": [1, 1], "multiplicity": 1}, {"shape": [2], "multiplicity": 1}]


def test_sweeps(capsys):
    code, out, _ = run(capsys, "sweep", "--max-boxes", "6", "--what", "main-identity")
    assert code == 0 and "0 failures" in out
    code, out, _ = run(capsys, "sweep", "--max-boxes", "2", "--what", "rectangle", "--format", "json")
    assert json.loads(out)["failures"] == []


def test_sweep_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv("HIROTA_SWEEP_JOBS", "nope")
    assert run(capsys, "sweep", "--max-boxes", "3")[0] == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "rel.json"
    code, out, _ = run(capsys, "plucker", "generate", "--n", "2", "--swap", "1", "--format", "json",
                       "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["swap"] == [1]
    assert run(capsys, "plucker", "generate", "--n", "2", "--swap", "1", "--output", str(tmp_path / "no" / "x"))[0] == 2


def test_square_with_single_corner(capsys):
    # (2,2) has one corner of height 2, so k=1 removes a column legally
    assert run(capsys, "hirota", "identity", "--lambda", "2,2", "--k", "1", "--verify")[0] == 0


def test_missing_column_exits_two(capsys):
    assert run(capsys, "hirota", "identity", "--lambda", "2,2", "--k", "0")[0] == 2
