"""Command-line entry point ``qca``.

Exit codes: 0 on success, 1 when a verification or check fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bases, verify
from .ccmap import CompatibilityError, cc, cc_report
from .finrep.ar import CCObject
from .finrep.rep import BudgetExceeded
from .formats import FormatError, check_lambda, lattice_from_json, module_from_json, parse_shift, quiver_from_json
from .lattice import Lattice, QuiverError, matrices_from_quiver, solve_lambda
from .qtorus import render, to_json
from .scalars import FORMAL, SqrtRing, is_prime
from .seeds import MutationError, QuantumSeed, mutate_sequence


class UsageError(ValueError):
    pass


def _emit(args, text: str, data):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _matrix_text(name, a) -> str:
    rows = [" ".join(f"{int(v):3d}" for v in row) for row in np.asarray(a)]
    return f"{name}:\n" + "\n".join("  " + r for r in rows)


def _lattice(args) -> Lattice:
    return lattice_from_json(args.quiver)


def _field(args) -> int:
    if not is_prime(args.q):
        raise UsageError(f"--q {args.q} is not prime")
    return args.q


def _module(path, lattice: Lattice, p: int):
    return module_from_json(path, lattice.quiver, p)


# ------------------------------------------------------------------ commands

def cmd_matrices(args) -> int:
    q, _ = quiver_from_json(args.quiver)
    bt, rt, it, euler = matrices_from_quiver(q)
    text = "\n".join(_matrix_text(k, v) for k, v in
                     (("btilde", bt), ("rtilde", rt), ("itilde", it), ("euler", euler)))
    _emit(args, text, {"btilde": bt.tolist(), "rtilde": rt.tolist(), "itilde": it.tolist(),
                       "euler": euler.tolist()})
    return 0


def cmd_lambda(args) -> int:
    q, lam = quiver_from_json(args.quiver)
    if args.check:
        if lam is None:
            raise UsageError("the quiver file has no lambda to check")
        msg = check_lambda(Lattice(q, lam))
        _emit(args, msg, {"compatible": msg.startswith("compatible"), "message": msg})
        return 0 if msg.startswith("compatible") else 1
    bt, _, it, _ = matrices_from_quiver(q)
    sol = solve_lambda(bt, it)
    if sol is None:
        _emit(args, "no integer lambda exists", {"lambda": None})
        return 1
    _emit(args, _matrix_text("lambda", sol), {"lambda": np.asarray(sol).tolist()})
    return 0


def _parse_seq(text: str, n: int) -> list:
    try:
        seq = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --seq {text!r}") from exc
    if any(not 1 <= k <= n for k in seq):
        raise UsageError(f"--seq entries must lie in 1..{n}")
    return seq


def cmd_mutate(args) -> int:
    lattice = _lattice(args)
    ring = FORMAL if args.formal else SqrtRing(_field(args))
    seq = _parse_seq(args.seq, lattice.n)
    seed = mutate_sequence(QuantumSeed.initial(lattice, ring), seq)
    _emit(args, seed.to_text(), seed.to_json())
    return 0


def cmd_ccmap(args) -> int:
    lattice = _lattice(args)
    p = _field(args)
    M = _module(args.module, lattice, p)
    obj = CCObject(M, parse_shift(args.shift, lattice.m))
    x = cc(obj, lattice)
    rows = cc_report(obj, lattice)
    text = [f"object: {obj.describe()}", f"X = {render(x)}", "terms (e, |Gr_e|, exponent, coefficient):"]
    text += [f"  {r['e']}  {r['count']}  {r['exponent']}  {r['coefficient']}" for r in rows]
    _emit(args, "\n".join(text), {"object": obj.describe(), "value": to_json(x), "terms": rows})
    return 0


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.identity} needs {' '.join(missing)} or --exhaustive")


def _reports(args):
    name = args.identity
    lattice = _lattice(args)
    p = _field(args)
    bound = args.exhaustive
    if name in ("lemma31", "cor32"):
        wanted = "pairing" if name == "lemma31" else "exponent_pairing"
        reps = verify.sample_lattice_identities(lattice, args.count, args.seed)
        return [r for r in reps if r.name == wanted]
    if bound is not None and bound < 0:
        raise UsageError("--exhaustive needs a nonnegative bound")
    mod = lambda attr: _module(getattr(args, attr), lattice, p)
    if name == "green":
        if bound is not None:
            return verify.sample_green(lattice, p, bound, args.count, args.seed)
        _need(args, "M", "N", "X", "Y")
        return [verify.verify_green(mod("M"), mod("N"), mod("X"), mod("Y"))]
    if name == "hall":
        if bound is not None:
            return verify.scan_hall(lattice, p, bound)
        _need(args, "M", "N")
        return [verify.verify_hall_multi(mod("M"), mod("N"), lattice)]
    if name in ("onedim", "qin"):
        if bound is not None:
            return verify.scan_onedim(lattice, p, bound, "onedim" if name == "onedim" else "rigid_pair")
        _need(args, "M", "N")
        fn = verify.verify_onedim if name == "onedim" else verify.verify_rigid_pair
        return [fn(mod("M"), mod("N"), lattice)]
    if name == "exchange":
        if bound is not None:
            return verify.scan_exchange(lattice, p, bound)
        _need(args, "M", "vertex")
        return [verify.verify_exchange(mod("M"), args.vertex, lattice)]
    if name == "reflection":
        if bound is not None:
            return verify.scan_reflection(lattice, p, bound)
        _need(args, "M", "vertex")
        obj = CCObject(mod("M").on(lattice.quiver), parse_shift(args.shift, lattice.m))
        return [verify.verify_reflection(args.vertex, obj, lattice)]
    raise UsageError(f"unknown identity {name}")


def cmd_verify(args) -> int:
    reps = _reports(args)
    summary = verify.summarize(reps)
    shown = reps if args.verbose else [r for r in reps if r.status == verify.FAIL] or reps[:1]
    text = [r.line() for r in shown]
    for r in shown:
        if r.status == verify.FAIL:
            text += [f"    at {list(e) if e else '-'}: lhs {a}, rhs {b}" for e, a, b in r.diff()]
    text.append(f"{args.identity}: {summary['PASS']} pass, {summary['FAIL']} fail, "
                f"{summary['INAPPLICABLE']} inapplicable")
    _emit(args, "\n".join(text), {"summary": summary, "reports": [r.to_json() for r in reps]})
    return 1 if summary["FAIL"] else 0


def cmd_basis(args) -> int:
    lattice = _lattice(args)
    p = _field(args)
    if args.family == "monomials":
        elements = bases.standard_monomials(lattice, p, args.bound)
    elif args.family == "finite":
        elements = bases.finite_type_basis(lattice, p, args.bound)
    else:
        elements = bases.kronecker_basis(lattice, p, args.bound)
    rows = bases.basis_table(elements, lattice, full=args.full)
    check = bases.triangularity_check(elements, lattice)
    text = []
    for r in rows:
        line = f"{r['label']:<24} {r.get('extremal')}  {r.get('coefficient', '')}"
        if args.full:
            line += f"\n    {r['value']}"
        text.append(line)
    if check.grading is None:
        text.append("triangularity: not checked (no grading found)")
    else:
        text.append(f"triangularity under eps={list(check.grading)}: {'pass' if check.ok else 'FAIL'}")
        text += ["  " + msg for msg in check.problems]
    data = {"elements": rows, "grading": list(check.grading) if check.grading else None,
            "triangular": check.ok, "problems": check.problems}
    _emit(args, "\n".join(text), data)
    if check.grading is None:
        return 0
    return 0 if check.ok else 1


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qca", description="Quantum cluster characters over small finite fields.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, field=True):
        sp.add_argument("--quiver", required=True, help="quiver JSON file or bundled name (kronecker, a2, a3)")
        if field:
            sp.add_argument("--q", type=int, default=2, help="field size, a prime (default 2)")
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    sp = sub.add_parser("matrices", help="print btilde, rtilde, itilde and the Euler matrix")
    common(sp, field=False)
    sp.set_defaults(func=cmd_matrices)

    sp = sub.add_parser("lambda", help="solve for lambda, or check the file's lambda")
    common(sp, field=False)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_lambda)

    sp = sub.add_parser("mutate", help="mutate the initial seed along a sequence")
    common(sp)
    sp.add_argument("--seq", required=True, help="comma-separated directions, e.g. 1,2,1")
    sp.add_argument("--formal", action="store_true", help="keep v formal instead of specializing")
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("ccmap", help="character of a module plus shifted projectives")
    common(sp)
    sp.add_argument("--module", required=True)
    sp.add_argument("--shift", default=None, help="shifted projectives, e.g. 1:2,2:1")
    sp.set_defaults(func=cmd_ccmap)

    sp = sub.add_parser("verify", help="check one of the multiplication identities")
    sp.add_argument("identity", choices=("lemma31", "cor32", "green", "hall", "onedim", "qin", "exchange",
                                         "reflection"))
    common(sp)
    for name in ("M", "N", "X", "Y"):
        sp.add_argument(f"--{name}", default=None, help=f"module file for {name}")
    sp.add_argument("--vertex", type=int, default=None, help="projective / reflection vertex")
    sp.add_argument("--shift", default=None)
    sp.add_argument("--exhaustive", type=int, default=None, metavar="BOUND",
                    help="scan all modules of total dimension <= BOUND")
    sp.add_argument("--count", type=int, default=100, help="samples for lemma31, cor32, green")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verbose", action="store_true", help="print every report")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("basis", help="basis table with leading terms")
    sp.add_argument("family", choices=("monomials", "finite", "kronecker"))
    common(sp)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--full", action="store_true", help="print full expansions")
    sp.set_defaults(func=cmd_basis)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FormatError, UsageError, QuiverError, CompatibilityError, MutationError, BudgetExceeded,
            ValueError, KeyError) as exc:
        print(f"qca: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
