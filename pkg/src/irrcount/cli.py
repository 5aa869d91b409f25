"""Command-line interface.

Subcommands: brute, gauss, zeta, derive, eval, verify, table, kloosterman.
Every command accepts --json for machine-readable output; exit code 1 for
domain/validity errors, 2 for verification mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .errors import IrrcountError, ValidityError, DomainError


def _parse_traces(q: int, text: str):
    """e.g. "1=0,2=1,4=*" -> TraceSpec (starred positions are wildcards)."""
    from .trace_lab import TraceSpec

    values = {}
    if text.strip():
        for part in text.split(","):
            pos, _, val = part.partition("=")
            if not _:
                raise DomainError(f"bad trace spec {part!r}, want pos=value")
            if val.strip() != "*":
                values[int(pos)] = int(val) % q
    return TraceSpec(q, values)


def _parse_tuple(text: str):
    return tuple(None if x.strip() == "*" else int(x) for x in text.split(",")) if text else ()


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_brute(args):
    from .ff_core import tower_for_q
    from . import oracle

    if args.kind == "F":
        spec = _parse_traces(args.q, args.traces or "")
        tw = tower_for_q(args.q, args.n)
        cnt = oracle.count_F_brute(tw, spec, jobs=args.jobs)
        _emit(args, {"count": cnt, "q": args.q, "n": args.n}, cnt)
    else:
        t = _parse_tuple(args.coeffs or "")
        if any(x is None for x in t):
            raise DomainError("I counts need fully prescribed coefficients")
        cnt = oracle.count_I_brute(args.q, args.n, t, jobs=args.jobs)
        _emit(args, {"count": cnt, "q": args.q, "n": args.n}, cnt)
    return 0


def cmd_gauss(args):
    from .oracle import gauss_count

    cnt = gauss_count(args.q, args.n)
    _emit(args, {"count": cnt}, cnt)
    return 0


def cmd_zeta(args):
    from .artin_schreier import ASCurve, frobenius_charpoly

    coeffs = [int(x) for x in args.curve.split(",")]
    from .ff_core import tower_for_q

    tw = tower_for_q(args.q, 1)
    curve = ASCurve(tw.p, tw.r, tuple(coeffs), "p")
    poly = frobenius_charpoly(curve)
    payload = {"q": poly.q, "genus": poly.genus, "coeffs": [str(c) for c in poly.coeffs]}
    _emit(args, payload, json.dumps(payload))
    return 0


def cmd_derive(args):
    from .engine_main import derive_formula_set
    from .formula import serialize_set

    fs = derive_formula_set(args.q, args.l, args.nbar)
    text = serialize_set(fs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(args, {"written": args.out, "formulas": len(fs.formulas)},
              f"wrote {len(fs.formulas)} formulas to {args.out}")
    else:
        print(text)
    return 0


def cmd_eval(args):
    from .formula import parse_set

    with open(args.formula, encoding="utf-8") as fh:
        fs = parse_set(fh.read())
    t = _parse_tuple(args.t)
    val = fs.eval(t, args.n)
    _emit(args, {"count": str(val)}, val)
    return 0


def cmd_verify(args):
    from .engine_main import verify_formula_set
    from .formula import parse_set

    with open(args.formula, encoding="utf-8") as fh:
        fs = parse_set(fh.read())
    lo, _, hi = args.n_range.partition("..")
    ns = [n for n in range(int(lo), int(hi) + 1) if n % fs.p == fs.nbar % fs.p and n >= fs.l]
    report = verify_formula_set(fs, ns)
    payload = {
        "checked": report.checked,
        "mismatches": [
            {"t": list(t), "n": n, "formula": str(got), "oracle": str(want)}
            for t, n, got, want in report.mismatches
        ],
    }
    _emit(args, payload,
          f"checked {report.checked} values at n in {ns}: "
          + ("all match" if report.ok else f"{len(report.mismatches)} MISMATCHES"))
    return 0 if report.ok else 2


def cmd_table(args):
    from .engine_smallchar import eval_paper_formula, paper_table, table_names

    if args.list:
        names = table_names()
        _emit(args, {"tables": names}, "\n".join(names))
        return 0
    tab = paper_table(args.name)
    t = _parse_tuple(args.t)
    val = eval_paper_formula(tab, t, args.n)
    _emit(args, {"count": str(val)}, val)
    return 0


def cmd_kloosterman(args):
    from .engine_smallchar import count_kloosterman_zero_mod32, kloosterman_distribution

    if args.zeros_mod is not None:
        if args.zeros_mod != 32:
            raise DomainError("only --zeros-mod 32 is supported")
        val = count_kloosterman_zero_mod32(args.n)
        _emit(args, {"count": val}, val)
        return 0
    row = kloosterman_distribution(args.n)
    payload = {"n": args.n, "T": row}
    human = "\n".join(f"T({args.n},{k + 1}) = {v}" for k, v in enumerate(row))
    _emit(args, payload, human)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="irrcount", description=__doc__)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--budget", type=int, default=None, help="enumeration budget override")
    ap.add_argument("--jobs", type=int, default=1, help="worker count for counting")
    sub = ap.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("brute", help="brute-force count F or I")
    b.add_argument("kind", choices=["F", "I"])
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--traces", help='e.g. "1=0,2=1,4=*"')
    b.add_argument("--coeffs", help='e.g. "0,1,2"')
    b.set_defaults(func=cmd_brute)

    g = sub.add_parser("gauss", help="number of monic irreducibles of degree n")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.set_defaults(func=cmd_gauss)

    z = sub.add_parser("zeta", help="Weil polynomial of y^p - y = f(x)")
    z.add_argument("--q", type=int, required=True)
    z.add_argument("--curve", required=True, help="coefficients of f, constant first")
    z.set_defaults(func=cmd_zeta)

    d = sub.add_parser("derive", help="derive all q^l formulas for one residue class")
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--nbar", type=int, required=True)
    d.add_argument("--out")
    d.set_defaults(func=cmd_derive)

    e = sub.add_parser("eval", help="evaluate a stored formula set")
    e.add_argument("--formula", required=True)
    e.add_argument("--t", required=True)
    e.add_argument("--n", type=int, required=True)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="compare a formula set with the oracle")
    v.add_argument("--formula", required=True)
    v.add_argument("--n-range", required=True, help="e.g. 4..16")
    v.add_argument("--against", default="oracle", choices=["oracle"])
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="evaluate a built-in published table")
    t.add_argument("--name")
    t.add_argument("--t")
    t.add_argument("--n", type=int)
    t.add_argument("--list", action="store_true")
    t.set_defaults(func=cmd_table)

    k = sub.add_parser("kloosterman", help="Kloosterman distribution / zero counts")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--zeros-mod", type=int, default=None)
    k.set_defaults(func=cmd_kloosterman)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.budget is not None:
        config.set_budget(args.budget)
    try:
        return args.func(args)
    except IrrcountError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if args.json:
            print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.budget is not None:
            config.set_budget(None)


if __name__ == "__main__":
    sys.exit(main())
