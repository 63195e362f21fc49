"""
Command-line front end.

Exit codes: 0 on success, 1 when a verification fails (a JSON error object
goes to stdout), 2 on usage errors (bad flags, unparsable element
expressions, oversized enumerations).

Examples::

    monohecke rpoly --n 3 --b 2 --x "d(1,0,0)" --y s1
    monohecke rpoly --n 3 --b 2 --all --method cross-check --out r.csv
    monohecke order --n 3 --b 2 --hasse g213.dot --components
    monohecke kl --n 3 --b 2 --y "s1*s2*s1" --out kl.json
    monohecke hecke-mul --n 2 --b 2 s1 s1
    monohecke verify-glnq --n 2 --q 7 --a 2
    monohecke selftest --n 3 --b 2
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .group import GroupElement, GroupParams, length
from .hecke import HeckeAlgebra
from .notation import ParseError, format_element, parse_element
from .rpoly import EnumerationBoundExceeded, hasse, r_star, r_star_direct, r_table, r_table_csv, to_dot

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "verification failed"))
        self.payload = payload


def _params(args) -> GroupParams:
    try:
        return GroupParams(args.n, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _elem(text: str, P: GroupParams) -> GroupElement:
    return parse_element(text, P)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _key(x: GroupElement):
    return (length(x), x.perm, x.exps)


# ---------------------------------------------------------------------------
# rpoly


def _closed_pair(x, y, P):
    from .subexpr import r_star_closed_all
    return r_star_closed_all(y, P).get(x, 0)


def _rpoly_table_json(table: dict) -> str:
    rows = [{"x": format_element(x), "y": format_element(y), "r_star": str(c), "terms": c.to_json()}
            for (x, y), c in sorted(table.items(), key=lambda kv: (_key(kv[0][1]), _key(kv[0][0])))]
    return _dump(rows)


def _cross_check_tables(P: GroupParams) -> dict:
    tables = {m: r_table(P, m) for m in ("recursive", "direct", "closed")}
    ref = tables["recursive"]
    for m in ("direct", "closed"):
        for key in sorted(set(ref) | set(tables[m]), key=lambda k: (_key(k[1]), _key(k[0]))):
            a, b = ref.get(key, 0), tables[m].get(key, 0)
            if a != b:
                raise VerificationFailure({
                    "error": "R* methods disagree", "method": m,
                    "x": format_element(key[0]), "y": format_element(key[1]),
                    "recursive": str(a), m: str(b)})
    return ref


def cmd_rpoly(args) -> int:
    P = _params(args)
    method = args.method
    if args.all:
        table = _cross_check_tables(P) if method == "cross-check" else r_table(P, method)
        out = args.out
        text = r_table_csv(table) if out and out.endswith(".csv") else _rpoly_table_json(table)
        _emit(text, out)
        return EXIT_OK
    if args.x is None or args.y is None:
        raise UsageError("rpoly needs --x and --y, or --all")
    x, y = _elem(args.x, P), _elem(args.y, P)
    vals = {
        "recursive": lambda: r_star(x, y, P),
        "direct": lambda: r_star_direct(y, P).get(x, 0),
        "closed": lambda: _closed_pair(x, y, P),
    }
    if method == "cross-check":
        got = {m: f() for m, f in vals.items()}
        if len({str(v) for v in got.values()}) != 1:
            raise VerificationFailure({"error": "R* methods disagree", "x": args.x, "y": args.y,
                                       **{m: str(v) for m, v in got.items()}})
        val = got["recursive"]
    else:
        val = vals[method]()
    row = {"x": format_element(x), "y": format_element(y), "r_star": str(val),
           "terms": val.to_json() if hasattr(val, "to_json") else []}
    if args.out and args.out.endswith(".csv"):
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["x", "y", "r_star"])
        wr.writerow([row["x"], row["y"], json.dumps(row["terms"])])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump(row), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# order


def cmd_order(args) -> int:
    P = _params(args)
    poset = hasse(P)
    if args.hasse:
        Path(args.hasse).write_text(to_dot(poset), encoding="utf-8")
    summary = {"n": P.n, "b": P.b, "elements": len(poset.elements),
               "covering_edges": len(poset.hasse_edges), "components": len(poset.components)}
    if args.components:
        summary["component_list"] = [
            {"size": len(c), "minimal": [format_element(x) for x in sorted(c, key=_key)
                                         if not poset.below[x]]}
            for c in poset.components]
    sys.stdout.write(_dump(summary))
    return EXIT_OK


# ---------------------------------------------------------------------------
# kl


def cmd_kl(args) -> int:
    from .kl import KLConsistencyError, kl_solver

    P = _params(args)
    solver = kl_solver(P)
    ys = [_elem(args.y, P)] if args.y else P.elements()
    rows = []
    try:
        for y in ys:
            for x, ps in sorted(solver.column(y).items(), key=lambda kv: _key(kv[0])):
                rows.append({"x": format_element(x), "y": format_element(y),
                             "p_star": str(ps), "p": str(solver.p(x, y)),
                             "p_terms": solver.p(x, y).to_json()})
    except KLConsistencyError as exc:
        raise VerificationFailure({"error": "KL consistency check failed", "detail": str(exc)})
    if args.out and args.out.endswith(".csv"):
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["x", "y", "p_star", "p"])
        for r in rows:
            wr.writerow([r["x"], r["y"], r["p_star"], r["p"]])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump(rows), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# hecke-mul


def cmd_hecke_mul(args) -> int:
    P = _params(args)
    alg = HeckeAlgebra(P)
    h = alg.T(_elem(args.x, P)) * alg.T(_elem(args.y, P))
    if args.json:
        sys.stdout.write(_dump(h.to_json()))
    else:
        sys.stdout.write(repr(h) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-glnq


def cmd_verify_glnq(args) -> int:
    from .glnq import FieldParams, verify_mult_theorem

    q, a = args.q, args.a
    if a < 1 or (q - 1) % a:
        raise UsageError(f"a = {a} does not divide q - 1 = {q - 1}")
    try:
        F = FieldParams(q, a, (q - 1) // a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = verify_mult_theorem(args.n, F, backend=args.backend, slow_ok=args.slow_ok)
    text = _dump(rep.to_json())
    _emit(text, args.out)
    if not rep.passed:
        raise VerificationFailure({"error": "GL oracle verification failed", **rep.to_json()})
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    rep = run_selftest(_params(args), trace=not args.no_trace)
    _emit(_dump(rep.to_json()), args.out)
    if not rep.passed:
        raise VerificationFailure({"error": "selftest failed", **rep.to_json()})
    return EXIT_OK


# ---------------------------------------------------------------------------


def _add_nb(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="rank (size of the permutations)")
    p.add_argument("--b", type=int, required=True, help="order of the roots of unity")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monohecke",
                                 description="Hecke algebras of the monomial groups G(b,1,n).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rpoly", help="R*-polynomials")
    _add_nb(p)
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--all", action="store_true", help="every nonzero pair")
    p.add_argument("--method", default="recursive",
                   choices=["recursive", "direct", "closed", "cross-check"])
    p.add_argument("--out", help="output file; .csv selects CSV, anything else JSON")
    p.set_defaults(func=cmd_rpoly)

    p = sub.add_parser("order", help="partial order, Hasse diagram and components")
    _add_nb(p)
    p.add_argument("--hasse", metavar="FILE.dot", help="write the Hasse diagram as DOT")
    p.add_argument("--components", action="store_true", help="list connected components")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials")
    _add_nb(p)
    p.add_argument("--y", help="single column; default is every y")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("hecke-mul", help="product T_x T_y in the T-basis")
    _add_nb(p)
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hecke_mul)

    p = sub.add_parser("verify-glnq", help="brute-force check inside GL_n(F_q)")
    p.add_argument("--n", type=int, choices=[2, 3], required=True)
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--a", type=int, required=True, help="a with a*b = q-1, gcd(a, b) = 1")
    p.add_argument("--slow-ok", action="store_true", help="allow n = 3")
    p.add_argument("--backend", choices=["python", "cython"], default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_glnq)

    p = sub.add_parser("selftest", help="run the invariant suite")
    _add_nb(p)
    p.add_argument("--no-trace", action="store_true", help="skip the quadratic trace-form check")
    p.add_argument("--out")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)  # exits with 2 on bad flags
    try:
        return args.func(args)
    except VerificationFailure as exc:
        sys.stdout.write(_dump(exc.payload))
        return EXIT_FAIL
    except (UsageError, ParseError, EnumerationBoundExceeded, ImportError) as exc:
        sys.stderr.write(_dump({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
