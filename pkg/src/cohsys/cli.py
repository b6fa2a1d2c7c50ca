"""Command-line interface.

Exit status: 0 on success, 2 on a usage error (argparse), 1 when the input
violates a precondition of the requested operation; in that case a single
line ``error: precondition: <reason>`` goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import schemas
from .classifier import classify
from .critical import enumerate_walls, flip_numbers, flip_outcome, flip_outcomes
from .exact import DomainError, format_rational, parse_rational
from .search import SearchWindow, search_nonpositive, stability_window_report
from .segre import (
    FieldSample,
    SegreParams,
    default_prime,
    one_sided_check,
    sample_delta_q,
    stability_bound_check,
    zero_plus_exists,
)
from .systems import SystemType, beta, decompose, necessary_range, necessary_upper_alt


def _table(headers: Sequence[str], rows: List[Sequence], text_last: bool = False) -> str:
    cells = [[str(h) for h in headers]] + [["-" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for row in cells:
        parts = [c.rjust(w) for c, w in zip(row, widths)]
        if text_last:
            parts[-1] = row[-1]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines)


def _emit_json(kind: str, obj) -> str:
    schemas.validate(kind, obj)
    return json.dumps(obj, sort_keys=True)


def _system(args) -> SystemType:
    return SystemType(args.N, args.D, args.K)


def cmd_dim(args) -> str:
    s = _system(args)
    out = {"system": s.to_json(), "beta": beta(s)}
    if args.json:
        return _emit_json("dim", out)
    return str(out["beta"])


def cmd_decompose(args) -> str:
    s = _system(args)
    c = decompose(s)
    if args.json:
        return _emit_json("decompose", {"system": s.to_json(), "coordinates": c.to_json()})
    return _table(["a", "t", "l", "m"], [[c.a, c.t, c.l, c.m]])


def cmd_range(args) -> str:
    s = _system(args)
    r = necessary_range(s)
    out = {"system": s.to_json(), "range": r.to_json(), "upper_alt": format_rational(necessary_upper_alt(s))}
    if args.json:
        return _emit_json("range", out)
    return str(r)


def cmd_classify(args) -> str:
    v = classify(_system(args))
    if args.json:
        return _emit_json("classify", v.to_json())
    lines = [v.status if v.range is None else f"{v.status} {v.range}", f"necessary {v.necessary}"]
    rows = [[e.label, None if e.alpha is None else format_rational(e.alpha), e.outcome] for e in v.evidence]
    lines.append(_table(["evidence", "alpha", "outcome"], rows))
    return "\n".join(lines)


def cmd_walls(args) -> str:
    s = _system(args)
    walls = enumerate_walls(s)
    if args.json:
        return _emit_json("walls", {"system": s.to_json(), "walls": [A.to_json() for A in walls]})
    rows = [[*A.shape, format_rational(A.alpha_c), A.e, A.f, *_flips(A)] for A in walls]
    return _table(["n1", "d1", "k1", "n2", "d2", "k2", "alpha_c", "e", "f", "c12", "c21"], rows)


def _flips(A):
    fl = flip_numbers(A)
    return fl.c12, fl.c21


def cmd_flips(args) -> str:
    s = _system(args)
    if args.at is not None:
        outcomes = [flip_outcome(s, parse_rational(args.at))]
    else:
        outcomes = flip_outcomes(s)
    if args.json:
        return _emit_json("flips", {"system": s.to_json(), "outcomes": [o.to_json() for o in outcomes]})
    rows = [[format_rational(o.alpha), o.outcome, o.min_c12, o.min_c21, len(o.walls)] for o in outcomes]
    return _table(["alpha", "outcome", "min_c12", "min_c21", "walls"], rows)


def cmd_search(args) -> str:
    w = SearchWindow(args.k, args.n_min, args.n_max, d_max=args.d_max,
                     l_max=None if args.d_max is not None else args.l_max)
    if args.report:
        rows = stability_window_report(w)
        if args.json:
            return "\n".join(_emit_json("search-report", r.to_json()) for r in rows)
        table = []
        for r in rows:
            walls = " ".join(f"{format_rational(o.alpha)}:{o.outcome}" for o in r.outcomes)
            rng = "-" if r.verdict.range is None else str(r.verdict.range)
            table.append([r.system.n, r.system.d, str(r.necessary), r.verdict.status, rng,
                          "*" if r.flagged else "", walls])
        return _table(["n", "d", "necessary", "status", "range", "flag", "walls"], table, text_last=True)
    found = search_nonpositive(w)
    if args.json:
        return "\n".join(_emit_json("search", x.to_json()) for x in found)
    rows = [[x.wall.parent.n, x.wall.parent.d, *x.wall.shape, format_rational(x.wall.alpha_c),
             x.flips.c12, x.flips.c21, x.flag] for x in found]
    return _table(["n", "d", "n1", "d1", "k1", "n2", "d2", "k2", "alpha_c", "c12", "c21", "flag"], rows)


def cmd_segre(args) -> str:
    n, a, k = args.n, args.a, args.k
    qs = [args.q] if args.q is not None else list(range(1, k + 1))
    ok, witnesses = stability_bound_check(n, a, k)
    by_q = {w.q: w for w in witnesses}
    field = None
    if args.oracle:
        field = FieldSample(args.prime if args.prime is not None else default_prime(), args.seed, args.trials)
    rows = []
    for q in qs:
        params = SegreParams(n, a, k, q)
        w = by_q[q]
        row = {"q": q, "bound": w.bound, "threshold": format_rational(w.threshold), "ok": w.ok}
        if field is not None:
            obs = sample_delta_q(params, field)
            chk = one_sided_check(obs)
            row["oracle"] = {
                "prime": field.prime, "seed": field.seed, "trials": field.trials, "mode": obs.mode,
                "histogram": {str(v): c for v, c in obs.histogram.items()},
                "delta_min": chk.threshold,
                "pass_fraction": format_rational(chk.pass_fraction),
                "passed": chk.passed,
            }
        rows.append(row)
    out = {"n": n, "a": a, "k": k, "zero_plus_exists": zero_plus_exists(n, a, k), "bound_check": ok, "rows": rows}
    if args.json:
        return _emit_json("segre", out)
    head = f"zero_plus_exists {out['zero_plus_exists']}  bound_check {ok}"
    headers = ["q", "bound", "threshold", "ok"]
    table = []
    for r in rows:
        line = [r["q"], r["bound"], r["threshold"], r["ok"]]
        if "oracle" in r:
            o = r["oracle"]
            hist = " ".join(f"{v}:{c}" for v, c in o["histogram"].items())
            line += [o["mode"], hist, o["delta_min"], o["pass_fraction"], o["passed"]]
        table.append(line)
    if field is not None:
        headers += ["mode", "delta_hist", "delta_min", "pass_frac", "passed"]
    return head + "\n" + _table(headers, table, text_last=field is None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cohsys", description="Walls, flips and existence ranges "
                                     "for coherent systems of type (n,d,k) on the projective line.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_type(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("N", type=int)
        p.add_argument("D", type=int)
        p.add_argument("K", type=int)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    with_type("dim", cmd_dim, "Brill-Noether number beta(n,d,k)")
    with_type("decompose", cmd_decompose, "coordinates (a,t,l,m)")
    with_type("range", cmd_range, "necessary alpha window")
    with_type("classify", cmd_classify, "existence verdict")
    with_type("walls", cmd_walls, "allowable critical data sets")
    p = with_type("flips", cmd_flips, "flip outcome per critical value")
    p.add_argument("--at", metavar="P/Q", help="only the critical value P/Q")

    p = sub.add_parser("search", help="sweep (n,d) for a fixed k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--d-max", type=int)
    g.add_argument("--l-max", type=int, default=6)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--nonpositive", action="store_true", help="walls with C12<=0 or C21<=0 (default)")
    mode.add_argument("--report", action="store_true", help="per-(n,d) verdict table")
    p.add_argument("--json", action="store_true", help="JSON lines")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("segre", help="bounds and finite-field oracle for the t=0 case")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--prime", type=int, help="field order (default $COHSYS_PRIME or 101)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_segre)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: precondition: {exc}", file=stderr)
        return 1
    if text:
        print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
