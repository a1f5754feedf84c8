"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 a size bound was hit, 4 two methods
(or a verification check) disagreed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .config import bounds, parse_bounds
from .errors import BoundExceeded, CombinatoricsError, ParseError
from .knapsack import build_V, census, is_knapsack
from .perms import beta, beta_witnesses, format_permutation
from .permutahedron import build_Q, r_poset, r_to_dot
from .pointed import (
    PointedComposition,
    PointedIntegerPartition,
    _parse_int_list,
    build_C,
    build_I,
    build_Pi,
    restrict_by_type,
    type_filter,
)
from .theorems import compare
from .verify import SUITES, run_suites

EXIT_OK, EXIT_PARSE, EXIT_BOUNDS, EXIT_DISAGREE = 0, 2, 3, 4


def _generators(values: list[str] | None) -> list[PointedIntegerPartition]:
    literals = [s.strip() for v in values or [] for s in v.split(";") if s.strip()]
    if not literals:
        raise ParseError("at least one generator literal such as '2,1|1' is required")
    return [PointedIntegerPartition.parse(s) for s in literals]


def _partition(text: str) -> tuple[int, ...]:
    parts = _parse_int_list(text)
    if not parts or any(x <= 0 for x in parts):
        raise ParseError(f"expected a list of positive integers, got {text!r}")
    return parts


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str, output: str | None = None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_mu(args) -> int:
    gens = _generators(args.generators)
    report = compare(args.n, gens)
    d = report.as_dict()
    if args.format == "json":
        out = json.dumps(d, indent=2)
    elif args.format == "csv":
        out = _csv([["method", "value"]] + [[k, d[k]] for k in ("bruteforce", "theorem1", "knapsack")])
    else:
        out = "\n".join(
            [f"n = {args.n}, F generated by {'; '.join(report.generators)}"]
            + [f"{k}: {'-' if d[k] is None else d[k]}" for k in ("bruteforce", "theorem1", "knapsack")]
            + [f"agree: {report.agree}"]
        )
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    _emit(out, args.output)
    return EXIT_OK if report.agree else EXIT_DISAGREE


def cmd_beta(args) -> int:
    c = PointedComposition.parse(args.composition)
    value = beta(c)
    d = {"composition": str(c), "beta": value}
    if args.witnesses:
        bounds.check("perm", c.n + 1)
        d["witnesses"] = [format_permutation(w) for w in beta_witnesses(c)]
    if args.format == "json":
        out = json.dumps(d, indent=2)
    else:
        out = "\n".join([str(value)] + d.get("witnesses", []))
    _emit(out, args.output)
    return EXIT_OK


def cmd_knapsack(args) -> int:
    if (args.census is None) == (args.lam is None):
        raise ParseError("give exactly one of --lambda or --census")
    if args.lam is not None:
        cert = is_knapsack(_partition(args.lam))
        d = cert.as_dict()
        if args.format == "json":
            out = json.dumps(d, indent=2)
        elif args.format == "csv":
            out = _csv([list(d), list(d.values())])
        else:
            verdict = "knapsack" if cert.is_knapsack else "not knapsack"
            out = f"{d['partition']}: {verdict} ({cert.distinct_sums}/{cert.capacity} distinct sums)"
        _emit(out, args.output)
        return EXIT_OK
    certs = census(args.census, include_all=args.all)
    rows = [c.as_dict() for c in certs]
    if args.format == "json":
        out = json.dumps({"n": args.census, "count": sum(c.is_knapsack for c in certs),
                          "partitions": rows}, indent=2)
    elif args.format == "csv":
        out = _csv([["partition", "distinct_sums", "capacity", "is_knapsack"]]
                   + [list(r.values()) for r in rows])
    else:
        lines = [f"{r['partition']}\t{r['distinct_sums']}/{r['capacity']}\t{r['is_knapsack']}" for r in rows]
        lines.append(f"{sum(c.is_knapsack for c in certs)} knapsack partitions of {args.census}")
        out = "\n".join(lines)
    _emit(out, args.output)
    return EXIT_OK


def cmd_vset(args) -> int:
    lam = _partition(args.lam)
    V = sorted(build_V(lam, args.m), key=lambda c: (c.num_parts, c.interior))
    if args.format == "json":
        out = json.dumps({"lambda": list(lam), "m": args.m, "compositions": [str(c) for c in V]}, indent=2)
    elif args.format == "csv":
        out = _csv([["composition", "beta"]] + [[str(c), beta(c)] for c in V])
    else:
        out = "\n".join(str(c) for c in V)
    _emit(out, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    only = [s.strip() for v in args.only or [] for s in v.split(",") if s.strip()]
    unknown = [s for s in only if s not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)}")
    results = run_suites(only or None, args.n_max, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out = json.dumps({"passed": ok, "checks": [r.as_dict() for r in results]}, indent=2)
    else:
        lines = []
        for r in results:
            lines.append(r.line())
            lines.extend(f"  failing: {json.dumps(f)}" for f in r.failures[:5])
        lines.append("all checks passed" if ok else "SOME CHECKS FAILED")
        out = "\n".join(lines)
    _emit(out, args.output)
    return EXIT_OK if ok else EXIT_DISAGREE


def _export_poset(args):
    need = {"I": "n", "Pi": "n", "C": "n", "Q": "p", "R": "lam"}[args.poset]
    if getattr(args, need) is None:
        flag = "--lambda" if need == "lam" else f"--{need}"
        raise ParseError(f"--poset {args.poset} needs {flag}")
    if args.poset == "I":
        return build_I(args.n)
    if args.poset in ("Pi", "C"):
        P = build_Pi(args.n) if args.poset == "Pi" else build_C(args.n)
        if args.generators:
            P = restrict_by_type(P, type_filter(args.n, _generators(args.generators)))
        return P
    if args.poset == "Q":
        return build_Q(args.p)
    return r_poset(_partition(args.lam))


def cmd_export(args) -> int:
    P = _export_poset(args)
    if args.format == "dot":
        if args.poset == "R":
            out = r_to_dot(_partition(args.lam))
        else:
            out = P.to_dot(args.poset)
    elif args.format == "csv":
        out = _csv([["lower", "upper"]] + [[str(x), str(y)] for x, y in P.covers()])
    elif args.format == "json":
        out = P.to_json()
    else:
        out = "\n".join(f"{x} < {y}" for x, y in P.covers())
    _emit(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointed-mobius",
        description="Möbius functions of pointed partition posets, knapsack partitions and descent statistics.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--bounds", help="override size bounds, e.g. 'Pi=10,C=18'")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("json", "text")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", help="write to this file instead of stdout")
        return p

    p = add("mu", cmd_mu, "Möbius value of Pi_n(F) plus a bottom, by every applicable method",
            ("json", "text", "csv"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--generators", action="append",
                   help="pointed partition literals 'a,b|m', repeat or separate with ';'")

    p = add("beta", cmd_beta, "count permutations with a given descent composition", ("text", "json"))
    p.add_argument("--composition", required=True, help="pointed composition 'c1,c2|ck'")
    p.add_argument("--witnesses", action="store_true", help="also list the permutations")

    p = add("knapsack", cmd_knapsack, "recognise knapsack partitions", ("json", "text", "csv"))
    p.add_argument("--lambda", dest="lam", help="partition such as '1,1,1,4'")
    p.add_argument("--census", type=int, metavar="N", help="all knapsack partitions of N")
    p.add_argument("--all", action="store_true", help="with --census, list non-knapsack partitions too")

    p = add("vset", cmd_vset, "list the composition set V for a knapsack partition",
            ("text", "json", "csv"))
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--m", type=int, default=0)

    p = add("verify", cmd_verify, "run the verification suites", ("text", "json"))
    p.add_argument("--only", action="append", help="suite names: " + ", ".join(SUITES))
    p.add_argument("--n-max", type=int, help="size used by each suite (clamped to its bound)")
    p.add_argument("--seed", type=int, default=0)

    p = add("export", cmd_export, "write a poset as DOT, JSON or CSV", ("dot", "json", "csv", "text"))
    p.add_argument("--poset", choices=["I", "Pi", "C", "Q", "R"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--generators", action="append", help="restrict Pi or C to this type filter")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.bounds:
            for name, value in parse_bounds(args.bounds).items():
                setattr(bounds, name, value)
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except (CombinatoricsError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
