"""Command-line interface.

    pancyclic check [--expr] INPUT
    pancyclic construct EXPR
    pancyclic tables [--json PATH]
    pancyclic search --n K --theorem {3.1,3.2,3.3,all} [--allow-n8] [--workers W] [--json PATH]

Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import graph as gr
from .certify import certify
from .config import RunConfig
from .expr import ExprSyntaxError, graph_from_expr
from .graph6 import Graph6Error, decode, encode
from .search import THEOREMS, search
from .tables import all_tables, cells_to_dicts

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2

GRAMMAR_HELP = (
    "expression grammar: atoms K<n>, K{a,b}, E<n> (n isolated vertices), C<n>, P<n>; "
    "k*<term> for k disjoint copies; '+' disjoint union binds tighter than 'v' join; "
    "both left associative; parentheses allowed. Example: 'K3 v (K2 + 3*K1)'"
)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol", type=float, default=1e-9, help="eigen/threshold tolerance")
    p.add_argument("--table-tol", type=float, default=5e-4, help="tolerance against published table values")
    p.add_argument("--oracle-max-n", type=int, default=16, help="largest order handed to the cycle oracle")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="pancyclic", description=__doc__.splitlines()[0], epilog=GRAMMAR_HELP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="certify one graph", epilog=GRAMMAR_HELP)
    p.add_argument("--expr", action="store_true", help="INPUT is an expression rather than graph6")
    p.add_argument("input")

    p = sub.add_parser("construct", parents=[common], help="build a graph from an expression", epilog=GRAMMAR_HELP)
    p.add_argument("expression")

    p = sub.add_parser("tables", parents=[common], help="recompute the published tables")
    p.add_argument("--json", metavar="PATH")

    p = sub.add_parser("search", parents=[common], help="exhaustive check of the theorems at order n")
    p.add_argument("--n", type=int, required=True, help="graph order, 5 to 7 (8 with --allow-n8)")
    p.add_argument(
        "--theorem", choices=[*THEOREMS, "all"], default="all",
        help="3.1 edge count, 3.2 adjacency radius, 3.3 signless radius",
    )
    p.add_argument("--allow-n8", action="store_true", help="permit n = 8 (2^28 graphs)")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--json", metavar="PATH")
    return parser


def _read_graph(args) -> gr.Graph:
    return graph_from_expr(args.input) if args.expr else decode(args.input)


def cmd_check(args, cfg: RunConfig, out) -> int:
    try:
        g = _read_graph(args)
    except (ExprSyntaxError, Graph6Error, gr.GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cert = certify(g, tol=cfg.tolerance, oracle_max_n=cfg.oracle_max_n)
    print(f"graph6: {encode(g) if g.n <= 62 else '-'}", file=out)
    print(f"verdict: {cert.verdict.value}", file=out)
    print(f"fired: {cert.fired_condition.value}", file=out)
    if cert.exceptional_name:
        print(f"exceptional: {cert.exceptional_name}", file=out)
    if cert.oracle_pancyclic is not None:
        print(f"oracle pancyclic: {cert.oracle_pancyclic}", file=out)
    print(cert.to_json(indent=2), file=out)
    return EXIT_OK


def cmd_construct(args, cfg: RunConfig, out) -> int:
    try:
        g = graph_from_expr(args.expression)
    except (ExprSyntaxError, gr.GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"graph6: {encode(g) if g.n <= 62 else '-'}", file=out)
    print(f"n: {g.n}", file=out)
    print(f"m: {g.m}", file=out)
    print(f"degrees: {' '.join(map(str, gr.degree_sequence(g).degrees))}", file=out)
    print(f"connected: {gr.is_connected(g)}", file=out)
    print(f"bipartite: {gr.is_bipartite(g)}", file=out)
    return EXIT_OK


def cmd_tables(args, cfg: RunConfig, out) -> int:
    cells = all_tables(cfg.table_tolerance)
    for cell in cells:
        print(cell.line(), file=out)
    failed = sum(not c.passed for c in cells)
    print(f"{len(cells) - failed}/{len(cells)} cells match", file=out)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(cells_to_dicts(cells), fh, indent=2)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_search(args, cfg: RunConfig, out) -> int:
    limit = 8 if args.allow_n8 else cfg.search_max_n
    if not 5 <= args.n <= limit:
        print(f"error: --n must lie in [5, {limit}]" + ("" if args.allow_n8 else "; n = 8 needs --allow-n8"),
              file=sys.stderr)
        return EXIT_INPUT
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    report = search(args.n, theorems, workers=max(1, args.workers), tol=cfg.tolerance, max_n=limit,
                    progress=args.n >= 8)
    for line in report.lines():
        print(line, file=out)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
    return EXIT_OK if report.verified else EXIT_FAILED


COMMANDS = {"check": cmd_check, "construct": cmd_construct, "tables": cmd_tables, "search": cmd_search}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        cfg = RunConfig(
            tolerance=args.tol,
            table_tolerance=args.table_tol,
            oracle_max_n=args.oracle_max_n,
            worker_count=getattr(args, "workers", 1) or 1,
            allow_n8=getattr(args, "allow_n8", False),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return COMMANDS[args.command](args, cfg, out)


if __name__ == "__main__":
    sys.exit(main())
