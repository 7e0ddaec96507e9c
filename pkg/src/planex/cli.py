"""Command-line entry point: ``planex {count,gen,enum,census,verify}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence

from .census import run_censuses, summary_table, triangulations
from .counting import PatternSpec, count_pattern, count_pattern_bruteforce
from .errors import DomainError, GraphError
from .families import FAMILIES, make_apollonian, make_fig1b, make_fig1c, make_fn, make_octahedron
from .formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from .graph import Graph
from .verify import verify_all

FORMATS = ("edgelist", "graph6")


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "graph6":
        return from_graph6(text.strip())
    return from_edgelist(text)


def _write_graph(g: Graph, fmt: str) -> str:
    return to_graph6(g) + "\n" if fmt == "graph6" else to_edgelist(g)


def _cmd_count(args: argparse.Namespace) -> int:
    pattern = PatternSpec.parse(args.pattern)
    g = _read_graph(args.input, args.format)
    value = count_pattern(g, pattern)
    print(value)
    if args.oracle:
        oracle = count_pattern_bruteforce(g, pattern)
        if oracle != value:
            print(f"oracle mismatch: closed form {value}, brute force {oracle}", file=sys.stderr)
            return 1
    return 0


def _parse_stacking(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise GraphError(f"--stacking must be comma-separated integers, got {raw!r}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    fixed = {"fig1b": (7, make_fig1b), "fig1c": (8, make_fig1c), "octahedron": (6, make_octahedron)}
    if args.stacking is not None and args.family != "apollonian":
        raise GraphError("--stacking only applies to --family apollonian")
    if args.family in fixed:
        order, build = fixed[args.family]
        if args.n is not None and args.n != order:
            raise GraphError(f"{args.family} has exactly {order} vertices")
        g = build()
    elif args.n is None:
        raise GraphError(f"--n is required for --family {args.family}")
    elif args.family == "fn":
        g = make_fn(args.n)
    else:
        g = make_apollonian(args.n, _parse_stacking(args.stacking)).graph
    sys.stdout.write(_write_graph(g, args.format))
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    tset = triangulations(args.n)
    lines = "".join(to_graph6(g) + "\n" for g in tset.graphs())
    if args.out:
        Path(args.out).write_text(lines)
    else:
        sys.stdout.write(lines)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    pattern = PatternSpec.parse(args.pattern)
    if args.n_min < 4 or args.n_max < args.n_min:
        raise GraphError("need 4 <= n-min <= n-max")
    records = run_censuses([(pattern, n) for n in range(args.n_min, args.n_max + 1)])
    rows = [r.to_json() for r in records]
    if args.json:
        Path(args.json).write_text("".join(json.dumps(row) + "\n" for row in rows))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["n", "pattern", "max", "formula", "matches", "expected_family", "extremal"])
            for row in rows:
                formula = "" if row["formula"] is None else row["formula"]
                writer.writerow([row["n"], row["pattern"], row["max"], formula, row["matches"],
                                 row["expected_family"], " ".join(row["extremal"])])
    if not args.json and not args.csv:
        for row in rows:
            print(json.dumps(row))
    print(summary_table(records), file=sys.stderr if not (args.json or args.csv) else sys.stdout)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_all(args.n_max)
    print(report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count copies of a pattern in one graph")
    p.add_argument("--pattern", required=True, help="p2 p3 p4 c3 c4 star:K k2:K")
    p.add_argument("--input", required=True, help="graph file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("gen", help="emit a named graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--stacking", help="comma-separated face indices, one per stacked vertex")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("enum", help="list all n-vertex triangulations as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("census", help="maximise a pattern count over triangulations")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", help="write one JSON object per row")
    p.add_argument("--csv", help="write a CSV table")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="run the full self-check")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, DomainError, ValueError, OSError) as exc:
        print(f"planex: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
