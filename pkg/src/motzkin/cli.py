"""Command-line front door: enumeration, statistics, bijections, generating
functions, and the verification battery.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
input that fails to parse (the message names the offending token).  Data
goes to stdout, diagnostics to stderr.  JSON output is deterministic apart
from the wall-time field of verification reports.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Sequence

from . import bijections, oracle
from .catalog import catalog_series
from .paths import DYCK, MOTZKIN, parse_path
from .permutations import format_permutation, parse_pattern, parse_permutation, stats
from .series import Series

_MAPS = {
    "perm-to-dyck": (("perm",), bijections.perm_to_dyck),
    "dyck-to-perm": (("dyck",), bijections.dyck_to_perm),
    "dyck-to-motzkin": (("dyck",), bijections.collapse_blocks),
    "motzkin-to-dyck": (("motzkin",), bijections.expand_blocks),
    "perm-to-motzkin": (("perm",), bijections.perm_to_motzkin),
    "motzkin-to-perm": (("motzkin",), bijections.motzkin_to_perm),
}


def _parse_map_input(direction: str, text: str):
    source = _MAPS[direction][0][0]
    if source == "perm":
        return parse_permutation(text)
    return parse_path(text, DYCK if source == "dyck" else MOTZKIN)


def _emit(obj) -> None:
    sys.stdout.write(obj if isinstance(obj, str) else json.dumps(obj, indent=2))
    sys.stdout.write("\n")


def _series_table(s) -> str:
    if isinstance(s, Series):
        return str(s)
    lines = []
    for mono in sorted(s.terms, key=lambda m: (dict(m).get(s.size_var, 0), m)):
        name = " ".join(f"{v}^{e}" for v, e in mono) or "1"
        lines.append(f"{name}\t{s.terms[mono]}")
    return "\n".join(lines)


def _gf_params(args) -> dict:
    params = {}
    for key in ("k", "r", "max_j", "depth"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if getattr(args, "tau", None) is not None:
        params["tau"] = args.tau
    return params


def cmd_enumerate(args) -> int:
    perms = [format_permutation(p) for p in
             oracle.enumerate_universe(args.kind, args.n)]
    if args.format == "json":
        _emit({"kind": args.kind, "n": args.n, "count": len(perms), "items": perms})
    else:
        for line in perms:
            _emit(line)
        _emit(f"count {len(perms)}")
    return 0


def cmd_stats(args) -> int:
    p = parse_permutation(args.permutation)
    profile = stats(p)
    if args.format == "json":
        _emit(asdict(profile))
    else:
        for k, v in asdict(profile).items():
            _emit(f"{k} {v}")
    return 0


def cmd_map(args) -> int:
    value = _parse_map_input(args.direction, args.input)
    result = _MAPS[args.direction][1](value)
    out = format_permutation(result) if isinstance(result, tuple) else str(result)
    if args.format == "json":
        _emit({"direction": args.direction, "input": args.input, "output": out})
    else:
        _emit(out)
    return 0


def cmd_count(args) -> int:
    pat = parse_pattern(args.pattern)
    histogram: dict[int, int] = {}
    avoiders = 0
    from .permutations import occurrences

    for p in oracle.enumerate_universe(args.kind, args.n):
        c = occurrences(p, pat)
        histogram[c] = histogram.get(c, 0) + 1
        if c == 0:
            avoiders += 1
    if args.format == "json":
        _emit({"pattern": args.pattern, "kind": args.kind, "n": args.n,
               "avoiders": avoiders,
               "histogram": {str(k): v for k, v in sorted(histogram.items())}})
    else:
        _emit(f"avoiders {avoiders}")
        for k in sorted(histogram):
            _emit(f"occurrences {k}\t{histogram[k]}")
    return 0


def cmd_gf(args) -> int:
    series = catalog_series(args.id, _gf_params(args), args.order)
    if args.format == "json":
        _emit({"id": args.id, **series.to_json()})
    else:
        _emit(_series_table(series))
    return 0


def cmd_verify(args) -> int:
    if args.id == "all":
        reports = oracle.verify_all(args.order, args.cap)
    else:
        reports = [oracle.verify(args.id, _gf_params(args), args.order, args.cap)]
    if args.format == "json":
        _emit(json.loads(oracle.reports_to_json(reports)))
    else:
        for rep in reports:
            _emit(str(rep))
        bad = sum(1 for r in reports if not r.passed)
        _emit(f"{len(reports) - bad}/{len(reports)} passed")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin",
        description="Exact enumerative combinatorics of Motzkin permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("enumerate", help="list a permutation universe")
    p.add_argument("--kind", choices=oracle.UNIVERSES, default="motzkin")
    p.add_argument("-n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("stats", help="statistics of one permutation")
    p.add_argument("permutation", help="one-line notation, e.g. '2 1 3'")
    add_format(p)
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("--direction", choices=sorted(_MAPS), required=True)
    p.add_argument("input", help="permutation or path word, per the direction")
    add_format(p)
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("count", help="avoiders and occurrence histogram")
    p.add_argument("--pattern", required=True, help="dash notation, e.g. 12-3")
    p.add_argument("--kind", choices=oracle.UNIVERSES, default="motzkin")
    p.add_argument("-n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=cmd_count)

    def add_gf_params(p):
        p.add_argument("--order", "-N", type=int, default=12)
        p.add_argument("--k", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--tau")
        p.add_argument("--max-j", dest="max_j", type=int)
        p.add_argument("--depth", type=int)
        add_format(p)

    p = sub.add_parser("gf", help="coefficients of a catalog generating function")
    p.add_argument("--id", required=True)
    add_gf_params(p)
    p.set_defaults(fn=cmd_gf)

    p = sub.add_parser("verify", help="compare catalog series with brute force")
    p.add_argument("--id", required=True, help="a theorem id, or 'all'")
    add_gf_params(p)
    p.add_argument("--cap", type=int, help="largest n compared against the enumeration")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
