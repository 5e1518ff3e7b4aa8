"""Command line entry point: ``blockcodes {solve,gen,enumerate,construct,verify}``.

Exit codes: 0 success, 1 a check failed or the graph admits no code of the
requested kind, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .codes import Kind
from .construct import PreconditionError, construct_id_code
from .enumeration import FAST_LIMIT, enumerate_connected_block_graphs
from .families import FAMILIES, FamilyParameterError, FamilySpec
from .graph_core import GraphParseError, emit_graph, parse_graph
from . import harness
from .solver import InadmissibleGraphError, brute_force_gamma, gamma

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graphs(args) -> list:
    text = Path(args.input).read_text() if args.input else sys.stdin.read()
    if args.format == "edgelist":
        return [parse_graph(text, "edgelist")]
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphParseError("no graph on input")
    return [parse_graph(ln, "graph6") for ln in lines]


def cmd_solve(args) -> int:
    kind = Kind.parse(args.code)
    solve = brute_force_gamma if args.brute else gamma
    status = EXIT_OK
    for g in _read_graphs(args):
        try:
            res = solve(g, kind)
        except InadmissibleGraphError as exc:
            print(json.dumps({"kind": kind.value, "error": exc.reason, "witness": list(exc.witness)}))
            status = EXIT_FAIL
            continue
        print(res.dumps())
    return status


def cmd_gen(args) -> int:
    name = args.family
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    if name in ("path_power", "random_block"):
        if args.p is None:
            raise UsageError(f"family {name} needs --p")
        spec = FamilySpec(name, (args.k, args.p), args.seed)
    else:
        spec = FamilySpec(name, (args.k,))
    try:
        g = spec.build()
    except FamilyParameterError as exc:
        raise UsageError(str(exc)) from None
    out = emit_graph(g, args.format)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= FAST_LIMIT:
        raise UsageError(f"--n must be in [1, {FAST_LIMIT}]")
    lines = [emit_graph(g, "graph6") + "\n" for g in enumerate_connected_block_graphs(args.n)]
    if args.out:
        Path(args.out).write_text("".join(lines))
        print(f"{len(lines)} graphs written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write("".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    status = EXIT_OK
    for g in _read_graphs(args):
        try:
            result = construct_id_code(g)
        except PreconditionError as exc:
            print(json.dumps({"error": exc.reason, "witness": list(exc.witness)}))
            status = EXIT_FAIL
            continue
        print(json.dumps({
            "kind": "ID",
            "size": len(result.code),
            "code": result.code.sorted(),
            "trace": [step.to_json() for step in result.trace],
        }))
    return status


def cmd_verify(args) -> int:
    if args.max_n < 2 or args.max_n > FAST_LIMIT:
        raise UsageError(f"--max-n must be in [2, {FAST_LIMIT}]")
    reports = harness.run_sweep(args.max_n, families=args.families)
    if args.out:
        Path(args.out).write_text(harness.reports_to_json(reports))
    if args.csv:
        Path(args.csv).write_text(harness.reports_to_csv(reports))
    summary = harness.summarize(reports)
    print(f"{len(reports)} graphs checked", file=sys.stderr)
    for name, counts in summary.items():
        print(f"  {name:13s} " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    failed = [(r.label, r.canon, r.failed) for r in reports if r.failed]
    for label, canon, names in failed[:20]:
        print(f"FAIL {label} {canon}: {', '.join(names)}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blockcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="minimum code of one kind")
    s.add_argument("--code", choices=["id", "ld", "old", "ID", "LD", "OLD"], default="id")
    s.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    s.add_argument("--input", help="read from file instead of stdin")
    s.add_argument("--brute", action="store_true", help="use subset enumeration (n <= 20)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("gen", help="generate a family member")
    s.add_argument("--family", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("enumerate", help="connected block graphs on n vertices, one graph6 per line")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("construct", help="ID code of size at most n_Q with trace")
    s.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    s.add_argument("--input")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="run the bound checks over a sweep")
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--families", action="store_true")
    s.add_argument("--out")
    s.add_argument("--csv")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"blockcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
