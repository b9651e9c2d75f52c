"""Command-line entry point: ``adjdim {dim2,dim,census,verify,family,explore}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .census import format_summary, run_census, write_jsonl
from .errors import (
    AdjDimError,
    DisconnectedGraph,
    EmptyGraph,
    InvalidParameters,
    MalformedGraph6,
    OrderOutOfRange,
    ScopeTooLarge,
)
from .families import FamilySpec, make_named
from .graph import diameter, is_connected
from .graph6 import graph6_decode, graph6_encode
from .solver import (
    adjacency_dimension,
    lower_bound_population,
    lower_bound_twins,
    metric_dimension,
    upper_bound_diameter,
)
from .verify import CHECKS, explore_open_question, run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class UsageError(Exception):
    pass


def _load_graph(args):
    if args.family:
        return make_named(FamilySpec.parse(args.family))
    if args.graph is None:
        raise UsageError("give a graph6 string or --family KIND:PARAMS")
    return graph6_decode(args.graph)


def _bounds(g) -> dict:
    out = {"population": lower_bound_population(g.order), "twins": lower_bound_twins(g)}
    if g.order >= 2 and is_connected(g):
        out["diameter"] = upper_bound_diameter(g)
    return out


def cmd_dim2(args, out) -> int:
    g = _load_graph(args)
    res = adjacency_dimension(g, mode=args.mode)
    info = {"graph6": graph6_encode(g), "n": g.order, "m": g.num_edges,
            "dim2": res.value, "basis2": list(res.basis), "bounds": _bounds(g)}
    if args.with_dim and is_connected(g):
        info["dim"] = metric_dimension(g).value
    if args.format == "json":
        print(json.dumps(info, sort_keys=True), file=out)
        return EXIT_OK
    print(f"dim2 = {res.value}", file=out)
    if args.show_basis:
        print(f"basis = {list(res.basis)}", file=out)
    b = info["bounds"]
    line = f"bounds: population >= {b['population']}, twins >= {b['twins']}"
    if "diameter" in b:
        line += f", diameter <= {b['diameter']}"
    print(line, file=out)
    if "dim" in info:
        print(f"dim = {info['dim']}", file=out)
    return EXIT_OK


def cmd_dim(args, out) -> int:
    g = _load_graph(args)
    res = metric_dimension(g)
    if args.format == "json":
        print(json.dumps({"graph6": graph6_encode(g), "dim": res.value,
                          "basis": list(res.basis)}, sort_keys=True), file=out)
        return EXIT_OK
    print(f"dim = {res.value}", file=out)
    if args.show_basis:
        print(f"basis = {list(res.basis)}", file=out)
    return EXIT_OK


def cmd_census(args, out) -> int:
    records = run_census(args.max_n, args.connected_only, args.workers)
    if args.out:
        write_jsonl(records, args.out)
    else:
        for r in records:
            r.validate()
    print(format_summary(records), file=out)
    print(f"{len(records)} records", file=out)
    return EXIT_OK


def _write_reports(reports, path: str) -> None:
    p = Path(path)
    p.write_text("\n\n".join(r.to_text() for r in reports) + "\n", encoding="utf-8")
    summary = [r.summary() for r in reports]
    p.with_suffix(".json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def cmd_verify(args, out) -> int:
    reports = run_checks(args.ids, args.max_n, args.workers, args.extended)
    if args.out:
        _write_reports(reports, args.out)
    for r in reports:
        print(f"{r.theorem_id:<16} {r.verdict.upper():<4}  checked={r.checked:<6} "
              f"counterexamples={len(r.counterexamples)}  {r.runtime:.2f}s", file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_family(args, out) -> int:
    g = make_named(FamilySpec.parse(args.spec))
    if args.format == "graph6":
        print(graph6_encode(g), file=out)
    elif args.format == "edges":
        print(f"{g.order} {g.num_edges}", file=out)
        for u, v in g.edges():
            print(f"{u} {v}", file=out)
    else:
        d = diameter(g)
        print(json.dumps({"spec": str(FamilySpec.parse(args.spec)), "graph6": graph6_encode(g),
                          "n": g.order, "edges": [list(e) for e in g.edges()],
                          "diameter": int(d) if is_connected(g) else -1}), file=out)
    return EXIT_OK


def cmd_explore(args, out) -> int:
    lo, _, hi = args.n_range.partition("..")
    try:
        n_range = range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise UsageError(f"bad --n-range {args.n_range!r}, expected LO..HI") from None
    rep = explore_open_question(args.diameter, n_range, args.workers)
    if args.out:
        _write_reports([rep], args.out)
    print(rep.to_text(), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adjdim", description="Adjacency dimension of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("dim2", "adjacency dimension of one graph"),
                           ("dim", "metric dimension of one connected graph")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph", nargs="?", help="graph6 string")
        s.add_argument("--family", help="family spec such as path:10 or extremal:8,5")
        s.add_argument("--show-basis", action="store_true")
        s.add_argument("--format", choices=("text", "json"), default="text")
        if name == "dim2":
            s.add_argument("--mode", choices=("pruned", "naive"), default="pruned")
            s.add_argument("--with-dim", action="store_true", help="also report dim for connected graphs")

    s = sub.add_parser("census", help="records for every graph up to --max-n")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--connected-only", action="store_true")
    s.add_argument("--out", help="JSON-lines output path")
    s.add_argument("--workers", type=int, default=1)

    s = sub.add_parser("verify", help="run exhaustive checks")
    s.add_argument("ids", nargs="+", help=f"'all' or any of: {', '.join(CHECKS)}")
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--out", help="text report path; a .json summary is written alongside")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--extended", action="store_true", help="add D = 10 to the extremal check")

    s = sub.add_parser("family", help="expand a family spec")
    s.add_argument("spec")
    s.add_argument("--format", choices=("graph6", "edges", "json"), default="graph6")

    s = sub.add_parser("explore", help="look for diameter-D graphs meeting the diameter bound")
    s.add_argument("--diameter", "-D", type=int, required=True)
    s.add_argument("--n-range", default="4..7", help="LO..HI")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1)
    return p


COMMANDS = {
    "dim2": cmd_dim2,
    "dim": cmd_dim,
    "census": cmd_census,
    "verify": cmd_verify,
    "family": cmd_family,
    "explore": cmd_explore,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "workers", 1) < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    started = time.perf_counter()
    try:
        code = COMMANDS[args.command](args, sys.stdout)
    except (EmptyGraph, DisconnectedGraph) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, MalformedGraph6, InvalidParameters, ScopeTooLarge, OrderOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AdjDimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.command in ("census", "verify"):
        print(f"runtime: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
