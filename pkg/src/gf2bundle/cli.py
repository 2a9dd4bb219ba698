"""Command-line front end.

Results go to stdout as JSON (``--format json``, the default) or as
aligned text.  Usage errors exit with status 2 and failed verifications
with status 1; either way a JSON error object is written to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import chow
from .acceptance import CHECKS, run_checks
from .bipoly import ParseError, parse_list
from .enriques import (
    DEFAULT_SEED,
    WVector,
    minimal_zeroscheme,
    random_w,
    reducible_model,
    surface_report,
)
from .sheafcoh import _gf2_points, cohomology_table, jumping_line, linear_form, monad_cohomology_dims, splitting_type

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pair(text: str) -> tuple[int, int]:
    try:
        m, n = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers 'm,n', got {text!r}") from None
    return m, n


def _point(text: str) -> tuple[int, int, int]:
    try:
        pt = tuple(int(t) % 2 for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a point 'a:b:c', got {text!r}") from None
    if len(pt) != 3 or not any(pt):
        raise argparse.ArgumentTypeError(f"expected a nonzero point 'a:b:c' over GF(2), got {text!r}")
    return pt


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# --------------------------------------------------------------- commands


def _table_text(name: str, rows: list[int], cols: list[int], values: list[list[int]]) -> str:
    cells = [[str(v) if v else "" for v in row] for row in values]
    width = max([len(str(c)) for c in cols] + [len(c) for row in cells for c in row] + [1])
    awidth = max(len(str(a)) for a in rows)
    lines = [name, " " * (awidth + 3) + " ".join(str(c).rjust(width) for c in cols)]
    lines.append("-" * (awidth + 2) + "+" + "-" * ((width + 1) * len(cols)))
    for a, row in zip(rows, cells):
        lines.append(f"{str(a).rjust(awidth)}  | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(line.rstrip() for line in lines)


def cmd_coh_table(args) -> tuple[dict, str]:
    if args.amin > args.amax or args.bmin > args.bmax:
        raise UsageError("empty range")
    T = cohomology_table(args.amin, args.amax, args.bmin, args.bmax)
    rows = list(range(args.amin, args.amax + 1))
    cols = list(range(args.bmin, args.bmax + 1))
    out = {"a": rows, "b": cols}
    for i in range(5):
        out[f"h{i}"] = [[T[(a, b)][i] for b in cols] for a in rows]
    text = "\n\n".join(_table_text(f"h^{i} E(a,b)   rows a, columns b", rows, cols, out[f"h{i}"]) for i in range(5))
    return out, text


def cmd_chern(args) -> tuple[dict, str]:
    m, n = args.twist
    c0 = chow.chern_E0()
    c1, c2 = chow.chern_twisted(m, n)
    out = {"c_E0": c0.to_json(), "twist": [m, n], "c1": c1.to_json(), "c2": c2.to_json()}
    text = f"c(E0) = {c0}\nc1(E({m},{n})) = {c1}\nc2(E({m},{n})) = {c2}"
    return out, text


def cmd_chi(args) -> tuple[dict, str]:
    a, b = args.twist
    monad, closed = chow.chi_E_monad(a, b), chow.chi_E_closed(a, b)
    out = {"twist": [a, b], "chi_monad": monad, "chi_closed": closed, "agree": monad == closed}
    if monad != closed:
        raise VerificationFailed("Euler characteristic routes disagree", out)
    return out, f"chi E({a},{b}) = {monad}"


def cmd_betti_hf(args) -> tuple[dict, str]:
    lo, hi = args.range
    rows = []
    bad = []
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            r, h = chow.resolution_hf(m, n), monad_cohomology_dims(m, n)[0]
            rows.append({"m": m, "n": n, "resolution": r, "h0": h})
            if r != h:
                bad.append([m, n])
    out = {"range": [lo, hi], "values": rows, "mismatches": bad}
    if bad:
        raise VerificationFailed("resolution Hilbert function differs from h^0 E", out)
    text = "\n".join(f"({e['m']},{e['n']}): {e['resolution']}" for e in rows)
    return out, text + f"\nall {len(rows)} values agree with h^0 E"


def cmd_surface(args) -> tuple[dict, str]:
    if args.random:
        if args.w is not None:
            raise UsageError("--w and --random are exclusive")
        w = random_w(*args.twist, random.Random(args.seed))
    elif args.w is None:
        raise UsageError("surface needs --w or --random")
    else:
        w = WVector.parse(args.w, args.twist)
    if w.is_zero():
        raise UsageError("w = 0 has no zero scheme")
    report = surface_report(w, with_half_fibers=not args.no_half_fibers).to_json()
    lines = [f"{k}: {report[k]}" for k in sorted(report)]
    return report, "\n".join(lines)


def cmd_jumping(args) -> tuple[dict, str]:
    pt = args.point
    types = {str(linear_form(form)): list(splitting_type(pt, form)) for form in _gf2_points()}
    line = jumping_line(pt)
    expected = linear_form(pt)
    out = {"point": list(pt), "splitting_types": types, "jumping_line": str(line), "expected": str(expected)}
    if line != expected:
        raise VerificationFailed("jumping line differs from f(., x)", out)
    text = "\n".join(f"{form}: {tuple(t)}" for form, t in sorted(types.items())) + f"\njumping line: {line}"
    return out, text


def cmd_reducible(args) -> tuple[dict, str]:
    fs = parse_list(args.f)
    if len(fs) != 3:
        raise UsageError("--f needs three linear forms in a, b, c")
    out = reducible_model(*fs).to_json()
    return out, "\n".join(f"{k}: {out[k]}" for k in sorted(out))


def cmd_minimal(args) -> tuple[dict, str]:
    try:
        cs = [int(t) % 2 for t in args.c.split(",")]
    except ValueError:
        raise UsageError("--c needs three integers") from None
    if len(cs) != 3 or not any(cs):
        raise UsageError("--c needs three constants, not all even")
    out = minimal_zeroscheme(*cs).to_json()
    return out, "\n".join(f"{k}: {out[k]}" for k in sorted(out))


def cmd_selftest(args) -> tuple[dict, str]:
    results = run_checks(args.only, seed=args.seed)
    out = {"seed": args.seed, "results": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    text = "\n".join(r.line() for r in results)
    if not out["passed"]:
        raise VerificationFailed("selftest failed", out)
    return out, text


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for sampling (default {DEFAULT_SEED})")

    p = _Parser(prog="gf2bundle", description="Exact computations with the rank-2 bundle E on P2 x P2 over GF(2).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coh-table", parents=[common], help="cohomology tables of E(a,b)")
    s.add_argument("--amin", type=int, default=-5)
    s.add_argument("--amax", type=int, default=4)
    s.add_argument("--bmin", type=int, default=-5)
    s.add_argument("--bmax", type=int, default=3)
    s.set_defaults(run=cmd_coh_table)

    s = sub.add_parser("chern", parents=[common], help="Chern classes of E0 and E(m,n)")
    s.add_argument("--twist", type=_pair, default=(0, 0), metavar="m,n")
    s.set_defaults(run=cmd_chern)

    s = sub.add_parser("chi", parents=[common], help="Euler characteristic of E(a,b) by two routes")
    s.add_argument("--twist", type=_pair, default=(0, 0), metavar="a,b")
    s.set_defaults(run=cmd_chi)

    s = sub.add_parser("betti-hf", parents=[common], help="Hilbert function of the resolution against h^0 E")
    s.add_argument("--range", type=_pair, default=(-2, 4), metavar="lo,hi")
    s.set_defaults(run=cmd_betti_hf)

    s = sub.add_parser("surface", parents=[common], help="report on the zero scheme of a section")
    s.add_argument("--w", help="seven comma-separated polynomials f1,f2,g1,f3,g2,g3,h")
    s.add_argument("--random", action="store_true", help="use a pseudorandom w drawn with --seed")
    s.add_argument("--twist", type=_pair, default=(0, 0), metavar="m,n")
    s.add_argument("--no-half-fibers", action="store_true")
    s.set_defaults(run=cmd_surface)

    s = sub.add_parser("jumping", parents=[common], help="splitting types on the lines through a point")
    s.add_argument("--point", type=_point, required=True, metavar="a:b:c")
    s.set_defaults(run=cmd_jumping)

    s = sub.add_parser("reducible", parents=[common], help="reducible zero scheme for w = (f1,f2,0,f3,0,0,0)")
    s.add_argument("--f", default="a,b,c", metavar="f1,f2,f3")
    s.set_defaults(run=cmd_reducible)

    s = sub.add_parser("minimal", parents=[common], help="minimal zero scheme of a section of E(-1,0)")
    s.add_argument("--c", default="1,0,0", metavar="c1,c2,c3")
    s.set_defaults(run=cmd_minimal)

    s = sub.add_parser("selftest", parents=[common], help="run the verification suite")
    s.add_argument("--only", type=int, nargs="+", choices=[c[0] for c in CHECKS], metavar="N")
    s.set_defaults(run=cmd_selftest)
    return p


def _emit(args, out: dict, text: str, stream) -> None:
    stream.write((text if args.format == "text" else _dump(out)) + "\n")


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out, text = args.run(args)
    except UsageError as exc:
        stderr.write(_dump({"error": "usage", "message": str(exc)}) + "\n")
        return EXIT_USAGE
    except (ParseError, ValueError) as exc:
        stderr.write(_dump({"error": "usage", "message": str(exc)}) + "\n")
        return EXIT_USAGE
    except VerificationFailed as exc:
        _emit(args, exc.payload, _dump(exc.payload), stdout)
        stderr.write(_dump({"error": "verification", "message": str(exc)}) + "\n")
        return EXIT_FAILED
    _emit(args, out, text, stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
