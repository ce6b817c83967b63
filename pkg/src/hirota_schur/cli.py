"""Command-line frontend.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import __version__
from .hirota import (
    DualJacobiTrudiSeeds,
    Evolver,
    check_structure,
    identities_up_to,
    main_identity,
    quantum_identity,
    verify_identity,
)
from .jt_box import Flavor, IncompatibleMatrices, JTSpec, NotContained, box, schur
from .lr import check_rectangle, conjecture_check, lr_multiply
from .partitions import InvalidCorners, NoSuchColumn, Partition, partitions_up_to, to_corners
from .plucker import LabelMismatch, box_relation_for_corner, generate, verify
from .symfunc import InexactDivision, Mode

SCHEMA = "hirota-schur/1"


class UsageError(Exception):
    pass


def _partition(text: str, flag: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _brackets(p: Partition) -> str:
    return "[" + ",".join(map(str, p.parts)) + "]"


def multiset_json(counter) -> list[dict]:
    return [{"shape": list(s.parts), "multiplicity": m} for s, m in sorted(counter.items())]


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        out = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    path = getattr(args, "output", None)
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            raise UsageError(f"--output: cannot write {path}: {exc}") from None
    else:
        sys.stdout.write(out)


# ---------------------------------------------------------------------------
# hirota


def cmd_identity(args) -> int:
    lam = _partition(args.lam, "--lambda")
    n = to_corners(lam).n
    if not 1 <= args.k <= n:
        raise UsageError(f"--k: corner index must lie in 1..{n} for {lam}")
    ident = quantum_identity(lam, args.k) if args.quantum else main_identity(lam, args.k)
    payload = {"identity": ident.to_json()}
    lines = [ident.render()]
    status = 0
    if args.verify:
        rep = verify_identity(ident, args.mode)
        payload["verification"] = {
            "ok": rep.ok,
            "mode": rep.mode.value,
            "cross_check": rep.cross_check,
            "difference": rep.difference.to_json(),
            "mismatch": rep.mismatch,
        }
        lines.append(f"verified: {'ok' if rep.ok else 'FAILED'} ({rep.mode.value})")
        if not rep.ok:
            lines.append(f"lhs - rhs = {rep.difference}")
            lines.extend(rep.mismatch)
            status = 1
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_evolve(args) -> int:
    target = _partition(args.target, "--target")
    ev = Evolver(DualJacobiTrudiSeeds(args.quantum), args.quantum, args.policy)
    st = ev.state(target)
    flavor = Flavor.QUANTUM if args.quantum else Flavor.PLAIN
    ok = st.value == schur(target, flavor)
    payload = {
        "target": list(target.parts),
        "lattice": list(st.lattice),
        "provenance": st.provenance,
        "divisions": ev.divisions,
        "matches_determinant": ok,
        "value": st.value.to_json(),
    }
    text = f"s{_brackets(target)} = {st.value}\n({st.provenance}, {ev.divisions} divisions, determinant {'agrees' if ok else 'DISAGREES'})"
    if args.report == "json":
        args.format = "json"
    _emit(args, payload, text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# plucker / box


def cmd_plucker_generate(args) -> int:
    swap = _int_list(args.swap, "--swap")
    try:
        rel = generate(args.n, swap)
    except ValueError as exc:
        raise UsageError(f"--swap: {exc}") from None
    _emit(args, rel.to_json(), str(rel))
    return 0


def cmd_plucker_verify(args) -> int:
    lam = _partition(args.box, "--box")
    n = to_corners(lam).n
    if not 1 <= args.k <= n:
        raise UsageError(f"--k: corner index must lie in 1..{n} for {lam}")
    flavor = Flavor(args.family)
    if flavor is Flavor.SKEW:
        raise UsageError("--family: skew boxes are not tied to an identity; use the box command")
    br = box_relation_for_corner(lam, args.k, flavor)
    rep = verify(br.relation, br.box.formal_matrix)
    schur_terms = br.schur_form()
    payload = {
        "lhs": br.relation.lhs.to_json(),
        "rhs": [
            {**t.to_json(), "schur_form": (r.to_json() if r is not None else None)}
            for t, r in zip(br.relation.rhs, br.readings)
        ],
        "swap": list(br.relation.swap),
        "ok": rep.ok,
        "schur_form": [st.to_json() for st in schur_terms],
    }
    lines = [str(br.relation), f"nonvanishing terms: {br.nonzero_count()}",
             f"verified: {'ok' if rep.ok else 'FAILED'}"]
    if not rep.ok:
        lines.append(f"lhs - rhs = {rep.difference}")
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.ok else 1


def cmd_box(args) -> int:
    flavor = Flavor(args.family)
    a = _partition(args.a, "--a")
    b = _partition(args.b, "--b")
    size = args.size or max(len(a), len(b))
    try:
        spec_a = JTSpec.of(a, flavor, size, _int_list(args.inner_a or "", "--inner-a"), args.shift_a)
        spec_b = JTSpec.of(b, flavor, size, _int_list(args.inner_b or "", "--inner-b"), args.shift_b)
        bm = box(spec_a, spec_b, args.mode)
    except (IncompatibleMatrices, NotContained) as exc:
        raise UsageError(f"incompatible matrices: {exc}") from None
    lines = [f"{lab}: " + "  ".join(str(e) for e in bm.matrix.row(lab)) for lab in bm.labels]
    _emit(args, bm.to_json(), "\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# lr


def cmd_lr_multiply(args) -> int:
    lam = _partition(args.lam, "--lambda")
    mu = _partition(args.mu, "--mu")
    result = lr_multiply(lam, mu, args.max_entry)
    text = " + ".join(
        (f"{m}*" if m > 1 else "") + "s" + _brackets(s) for s, m in sorted(result.items())
    ) or "0"
    _emit(args, {"lambda": list(lam.parts), "mu": list(mu.parts), "product": multiset_json(result)}, text)
    return 0


def cmd_lr_conjecture(args) -> int:
    lam = _partition(args.lam, "--lambda")
    n = to_corners(lam).n
    if not 1 <= args.k <= n:
        raise UsageError(f"--k: corner index must lie in 1..{n} for {lam}")
    rep = conjecture_check(lam, args.k)
    if args.report == "json":
        args.format = "json"
    lines = [f"{c.label} ({'+' if c.sign > 0 else '-'}): {sum(c.shapes.values())} tableaux on Y" + _brackets(c.acting_on)
             for c in rep.contributions]
    lines.append(f"shape multisets {'agree' if rep.ok else 'DISAGREE'}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# sweep


def _case_main(ident) -> tuple[str, bool, list[str]]:
    rep = verify_identity(ident)
    problems = list(rep.mismatch) + check_structure(ident)
    if not rep.difference.is_zero():
        problems.append(f"lhs - rhs = {rep.difference}")
    return f"{ident.lam} k={ident.k}", rep.ok and not problems, problems


FORMAL_MAX_ROWS = 4


def _case_quantum(ident) -> tuple[str, bool, list[str]]:
    problems = []
    # the unspecialized ring grows factorially with the number of rows
    modes = (Mode.FORMAL, Mode.SPECIALIZED) if len(ident.lam) <= FORMAL_MAX_ROWS else (Mode.SPECIALIZED,)
    for mode in modes:
        rep = verify_identity(ident, mode, cross_check=mode is Mode.SPECIALIZED)
        if not rep.ok:
            problems.append(f"{mode.value}: lhs - rhs = {rep.difference}")
    return f"{ident.lam} k={ident.k}", not problems, problems


def _case_evolve(lam) -> tuple[str, bool, list[str]]:
    try:
        value = Evolver(DualJacobiTrudiSeeds()).value(lam)
    except InexactDivision as exc:
        return str(lam), False, [str(exc)]
    ok = value == schur(lam)
    return str(lam), ok, [] if ok else ["evolved value differs from determinant"]


def _case_conjecture(pair) -> tuple[str, bool, list[str]]:
    lam, k = pair
    rep = conjecture_check(lam, k)
    return f"{lam} k={k}", rep.ok, [] if rep.ok else ["signed shape multisets differ"]


def _case_rectangle(pair) -> tuple[str, bool, list[str]]:
    m, ell = pair
    rep = check_rectangle(m, ell)
    return f"m={m} l={ell}", rep.ok, [] if rep.ok else [repr(rep)]


def _sweep_cases(what: str, max_boxes: int, max_corners: int) -> tuple[Callable, Iterable]:
    if what == "main-identity":
        return _case_main, identities_up_to(max_boxes, max_corners)
    if what == "quantum-identity":
        return _case_quantum, identities_up_to(max_boxes, max_corners, quantum=True)
    if what == "evolve":
        return _case_evolve, (p for p in partitions_up_to(max_boxes) if p.parts)
    if what == "conjecture":
        pairs = ((p, k) for p in partitions_up_to(max_boxes)
                 if 0 < to_corners(p).n <= max_corners for k in range(1, to_corners(p).n + 1))
        return _case_conjecture, pairs
    if what == "rectangle":
        side = max(1, max_boxes)
        return _case_rectangle, ((m, l) for m in range(1, side + 1) for l in range(1, side + 1))
    raise UsageError(f"--what: unknown sweep {what!r}")


def sweep_jobs() -> int:
    raw = os.environ.get("HIROTA_SWEEP_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"HIROTA_SWEEP_JOBS: expected an integer, got {raw!r}") from None


def cmd_sweep(args) -> int:
    fn, cases = _sweep_cases(args.what, args.max_boxes, args.max_corners)
    jobs = sweep_jobs()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(fn, cases, chunksize=8))
    else:
        results = [fn(c) for c in cases]
    failures = [(name, probs) for name, ok, probs in results if not ok]
    payload = {
        "what": args.what,
        "max_boxes": args.max_boxes,
        "max_corners": args.max_corners,
        "cases": len(results),
        "failures": [{"case": name, "problems": probs} for name, probs in failures],
        "ok": not failures,
    }
    lines = [f"{args.what}: {len(results)} cases, {len(failures)} failures"]
    for name, probs in failures:
        lines.append(f"FAIL {name}: " + "; ".join(probs))
    _emit(args, payload, "\n".join(lines))
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hirota-schur", description="Schur function identities and recurrences.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    hir = sub.add_parser("hirota", help="identities and their recurrence").add_subparsers(dest="action", required=True)
    p = hir.add_parser("identity", help="print (and verify) the identity for a partition and corner")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--quantum", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.SPECIALIZED.value)
    _common(p)
    p.set_defaults(func=cmd_identity)

    p = hir.add_parser("evolve", help="compute s_target by the recurrence from distinct-column seeds")
    p.add_argument("--target", required=True)
    p.add_argument("--quantum", action="store_true")
    p.add_argument("--policy", choices=("smallest", "largest"), default="smallest")
    p.add_argument("--report", choices=("text", "json"), default="text")
    _common(p)
    p.set_defaults(func=cmd_evolve)

    plu = sub.add_parser("plucker", help="Plücker relations").add_subparsers(dest="action", required=True)
    p = plu.add_parser("generate", help="the exchange relation [1..n][1'..n']")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--swap", required=True, help="1-based positions, e.g. 1,2")
    _common(p)
    p.set_defaults(func=cmd_plucker_generate)

    p = plu.add_parser("verify", help="expand the box relation for a partition and corner")
    p.add_argument("--box", required=True, help="partition, e.g. 3,2,1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", choices=[f.value for f in Flavor], default=Flavor.PLAIN.value)
    _common(p)
    p.set_defaults(func=cmd_plucker_verify)

    p = sub.add_parser("box", help="dump the box matrix of two family members")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--family", choices=[f.value for f in Flavor], default=Flavor.PLAIN.value)
    p.add_argument("--size", type=int)
    p.add_argument("--inner-a", dest="inner_a")
    p.add_argument("--inner-b", dest="inner_b")
    p.add_argument("--shift-a", dest="shift_a", type=int, default=0)
    p.add_argument("--shift-b", dest="shift_b", type=int, default=0)
    p.add_argument("--mode", choices=[m.value for m in Mode])
    _common(p)
    p.set_defaults(func=cmd_box)

    lr = sub.add_parser("lr", help="Littlewood-Richardson products").add_subparsers(dest="action", required=True)
    p = lr.add_parser("multiply")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--max-entry", dest="max_entry", type=int)
    _common(p)
    p.set_defaults(func=cmd_lr_multiply)

    p = lr.add_parser("conjecture")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--report", choices=("text", "json"), default="text")
    _common(p)
    p.set_defaults(func=cmd_lr_conjecture)

    p = sub.add_parser("sweep", help="exhaustive verification over small partitions")
    p.add_argument("--what", choices=("main-identity", "quantum-identity", "evolve", "conjecture", "rectangle"),
                   default="main-identity")
    p.add_argument("--max-boxes", dest="max_boxes", type=int, default=12)
    p.add_argument("--max-corners", dest="max_corners", type=int, default=4)
    _common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoSuchColumn, InvalidCorners, LabelMismatch, ValueError, IndexError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
