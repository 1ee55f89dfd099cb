"""Command-line front end.

Exit codes: 0 and 1 are the verdicts of each command (equivalent/separable
and inequivalent/entangled), 2 is a usage or parse error, 3 an inconclusive
or boundary verdict and 4 an internal property failure. Reports go to
standard output as JSON; warnings go to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .entanglement import (
    is_entangled_bargmann,
    is_entangled_makhlin,
    is_entangled_ppt,
)
from .invariants import bargmann_direct, makhlin_I, makhlin_L
from .luequiv import PermutationTuple, Verdict, lu_equivalent, parse_permutation, permutation_trace
from .selftest import run_selftest
from .states import (
    apply_lu,
    bell_diagonal,
    is_psd,
    params_from_state,
    random_density,
    random_local_unitary,
    werner,
)
from .stateio import DocumentError, StateDocument, complex_to_json, load_documents

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNSURE, EXIT_PROPERTY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def _read(path: str) -> list[StateDocument]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    docs = load_documents(text)
    for d in docs:
        if not is_psd(d.rho):
            _warn(f"{d.label or path}: matrix is not positive semidefinite")
    return docs


def _read_one(path: str) -> StateDocument:
    docs = _read(path)
    if len(docs) != 1:
        raise UsageError(f"{path}: expected a single state document")
    return docs[0]


def cmd_invariants(args) -> int:
    doc = _read_one(args.input)
    fams = ("B", "L", "I") if args.family == "all" else (args.family,)
    report: dict = {"label": doc.label}
    for fam in fams:
        if fam == "B":
            report["B"] = [complex_to_json(z) for z in bargmann_direct(doc.rho).values]
        else:
            p = params_from_state(doc.rho)
            vec = makhlin_L(p) if fam == "L" else makhlin_I(p)
            report[fam] = [float(x) for x in vec.values]
    _emit(report)
    return EXIT_OK


def cmd_check_lu(args) -> int:
    docs = [d for path in args.inputs for d in _read(path)]
    if len(docs) != 2:
        raise UsageError("check-lu needs exactly two states (two files, or one file holding a pair)")
    r = lu_equivalent(docs[0].rho, docs[1].rho, args.tol)
    _emit({"labels": [docs[0].label, docs[1].label], "tol": args.tol, **r.as_dict()})
    return {
        Verdict.EQUIVALENT: EXIT_OK,
        Verdict.INEQUIVALENT: EXIT_NO,
        Verdict.INCONCLUSIVE: EXIT_UNSURE,
    }[r.verdict]


def cmd_check_ent(args) -> int:
    doc = _read_one(args.input)
    rho = doc.rho
    methods = ("ppt", "makhlin", "bargmann") if args.method == "all" else (args.method,)
    verdicts = []
    for m in methods:
        if m == "ppt":
            verdicts.append(is_entangled_ppt(rho, validate=False))
        elif m == "makhlin":
            verdicts.append(is_entangled_makhlin(params_from_state(rho)))
        else:
            verdicts.append(is_entangled_bargmann(bargmann_direct(rho)))

    if any(v.boundary for v in verdicts):
        verdict, code = "boundary", EXIT_UNSURE
    elif len({v.entangled for v in verdicts}) > 1:
        verdict, code = "disagreement", EXIT_PROPERTY
        _warn("detectors disagree outside the boundary band")
    elif verdicts[0].entangled:
        verdict, code = "entangled", EXIT_NO
    else:
        verdict, code = "separable", EXIT_OK
    _emit({"label": doc.label, "verdict": verdict, "detectors": [v.as_dict() for v in verdicts]})
    return code


def _floats(text: str, n: int, name: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"{name}: expected {n} comma-separated numbers") from exc
    if len(vals) != n:
        raise UsageError(f"{name}: expected {n} comma-separated numbers")
    return vals


def cmd_gen(args) -> int:
    if args.kind == "werner":
        w = args.w
        rho, label = werner(w), f"werner w={w!r}"
        _emit(StateDocument(rho, label).to_json())
    elif args.kind == "bell-diagonal":
        t = _floats(args.t, 3, "--t")
        _emit(StateDocument(bell_diagonal(*t), "bell-diagonal t=" + ",".join(map(repr, t))).to_json())
    elif args.kind == "random":
        rng = np.random.default_rng(args.seed)
        rho = random_density(rng, rank=args.rank)
        _emit(StateDocument(rho, f"random seed={args.seed} rank={args.rank}").to_json())
    else:
        if args.input is None:
            raise UsageError("gen lu-orbit needs --input")
        src = _read_one(args.input)
        g = random_local_unitary(np.random.default_rng(args.seed))
        rot = StateDocument(apply_lu(src.rho, g), f"lu-orbit seed={args.seed} of {src.label}")
        print(json.dumps([src.to_json(), rot.to_json()], indent=2))
    return EXIT_OK


def cmd_perm_trace(args) -> int:
    doc = _read_one(args.input)
    ident = tuple(range(args.n))
    pa = parse_permutation(args.pi_a) if args.pi_a else ident
    pb = parse_permutation(args.pi_b) if args.pi_b else ident
    if len(pa) != args.n or len(pb) != args.n:
        raise UsageError(f"permutations must act on n={args.n} copies")
    val = permutation_trace(doc.rho, PermutationTuple((pa, pb)))
    _emit(
        {
            "label": doc.label,
            "n": args.n,
            "pi_a": ",".join(str(k + 1) for k in pa),
            "pi_b": ",".join(str(k + 1) for k in pb),
            "value": complex_to_json(val),
        }
    )
    return EXIT_OK


def cmd_selftest(args) -> int:
    rep = run_selftest(args.profile, args.seed, args.tol)
    _emit(rep.as_dict())
    for r in rep.results:
        if not r.passed:
            _warn(f"suite '{r.name}' failed (worst {r.worst:.3e})")
    return EXIT_OK if rep.passed else EXIT_PROPERTY


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _tol(text: str) -> float:
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_tol, default=1e-8, help="numerical tolerance (default 1e-8)")
    common.add_argument("--seed", type=_seed, default=0, help="RNG seed (unsigned 64-bit)")
    common.add_argument("--format", choices=["json"], default="json", help="output format")

    ap = argparse.ArgumentParser(prog="lubargmann", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="report invariant vectors")
    p.add_argument("input", help="state document, or - for stdin")
    p.add_argument("--family", choices=["B", "L", "I", "all"], default="all")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("check-lu", parents=[common], help="decide LU equivalence")
    p.add_argument("inputs", nargs="+", help="two documents, or one file holding a pair")
    p.set_defaults(func=cmd_check_lu)

    p = sub.add_parser("check-ent", parents=[common], help="entanglement verdict")
    p.add_argument("input")
    p.add_argument("--method", choices=["ppt", "makhlin", "bargmann", "all"], default="all")
    p.set_defaults(func=cmd_check_ent)

    p = sub.add_parser("gen", parents=[common], help="generate state documents")
    p.add_argument("kind", choices=["werner", "bell-diagonal", "random", "lu-orbit"])
    p.add_argument("--w", type=float, default=0.5, help="Werner weight in [0, 1]")
    p.add_argument("--t", default="0,0,0", help="Bell-diagonal t1,t2,t3")
    p.add_argument("--rank", type=int, choices=[1, 2, 3, 4], default=4)
    p.add_argument("--input", help="source document for lu-orbit")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("perm-trace", parents=[common], help="Tr[rho^n P(pi_a, pi_b)]")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--pi-a", help="1-based one-line permutation, e.g. 2,1")
    p.add_argument("--pi-b", help="1-based one-line permutation")
    p.set_defaults(func=cmd_perm_trace)

    p = sub.add_parser("selftest", parents=[common], help="run the property suites")
    p.add_argument("--profile", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
