"""Command-line front end.

Exit codes: 0 success, 1 an identity failed to hold, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from dualnet import __version__
from dualnet.duality import dual
from dualnet.errors import CapExceeded, GraphError
from dualnet.exact import format_decimal, format_rational
from dualnet.kirchhoff import duality_report, effective_resistances, laplacian, tree_count, tree_weight_total
from dualnet.netfile import dumps_network, load_network
from dualnet.oracle import DEFAULT_CAP, enumerate_spanning_trees, oracle_report

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Emitter:
    """Formats rationals and tables the same way for every subcommand."""

    def __init__(self, args, out: TextIO):
        self.fmt = args.format
        self.digits = args.decimal
        self.out = out

    def num(self, x: Fraction) -> str:
        if self.digits is None:
            return format_rational(x)
        return format_decimal(x, self.digits)

    def table(self, columns: Sequence[str], rows: Sequence[Sequence], out: TextIO | None = None) -> None:
        out = self.out if out is None else out
        if self.fmt == "json":
            json.dump([dict(zip(columns, r)) for r in rows], out, indent=2)
            out.write("\n")
        else:
            out.write("\t".join(columns) + "\n")
            for r in rows:
                out.write("\t".join(_cell(c) for c in r) + "\n")


def _cell(c) -> str:
    if isinstance(c, bool):
        return "true" if c else "false"
    return str(c)


def cmd_resist(args, em: _Emitter) -> int:
    g = load_network(args.file)
    if args.edge is not None:
        g.edge(args.edge)
    r = effective_resistances(g)
    if args.edge is not None and em.fmt == "tsv":
        em.out.write(em.num(r[args.edge]) + "\n")
        return EXIT_OK
    ids = [args.edge] if args.edge is not None else list(r)
    em.table(["edge", "R", "r"], [[e, em.num(g.resistance(e)), em.num(r[e])] for e in ids])
    return EXIT_OK


def cmd_dual(args, em: _Emitter) -> int:
    g = load_network(args.file)
    gd, corr = dual(g)
    text = dumps_network(gd)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        table_out = em.out
    else:
        em.out.write(text)
        table_out = sys.stderr
    rows = [
        [e.id, corr.edge_map[e.id], em.num(e.resistance), em.num(gd.resistance(corr.edge_map[e.id]))]
        for e in g.edges
    ]
    em.table(["edge", "dual_edge", "R", "R_dual"], rows, out=table_out)
    return EXIT_OK


def cmd_check(args, em: _Emitter) -> int:
    g = load_network(args.file)
    records = duality_report(g)
    rows = [
        [rec.edge_id, rec.dual_edge_id, em.num(rec.R_e), em.num(rec.r_e), em.num(rec.R_dual),
         em.num(rec.r_dual), em.num(rec.sum), rec.bridge]
        for rec in records
    ]
    em.table(["edge", "dual_edge", "R", "r", "R_dual", "r_dual", "sum", "bridge"], rows)
    return EXIT_OK if all(rec.sum == 1 for rec in records) else EXIT_VIOLATED


def cmd_trees(args, em: _Emitter) -> int:
    g = load_network(args.file)
    by_det = tree_weight_total(g, laplacian(g))
    status = EXIT_OK
    count = tree_count(g)
    rows = [["determinant", str(count), em.num(by_det)]]
    if count > args.cap:
        rows.append(["enumeration", f">{args.cap}", "skipped"])
    else:
        trees = enumerate_spanning_trees(g, args.cap)
        total = trees.total_weight()
        rows.append(["enumeration", str(len(trees)), em.num(total)])
        if total != by_det or len(trees) != count:
            status = EXIT_VIOLATED
    em.table(["method", "count", "weight_sum"], rows)
    return status


def cmd_faces(args, em: _Emitter) -> int:
    g = load_network(args.file)
    fs = g.faces
    rows = [[f"f{k}", len(cyc), " ".join(map(str, cyc))] for k, cyc in enumerate(fs.faces)]
    em.table(["face", "length", "darts"], rows)
    euler = g.n_vertices - g.n_edges + len(fs)
    if em.fmt == "tsv":
        em.out.write(f"# V - E + F = {g.n_vertices} - {g.n_edges} + {len(fs)} = {euler}\n")
    return EXIT_OK if euler == 2 else EXIT_VIOLATED


def cmd_verify(args, em: _Emitter) -> int:
    g = load_network(args.file)
    try:
        report = oracle_report(g, args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    em.table(["check", "status", "detail"], [[c.name, c.status, c.detail] for c in report.checks])
    return EXIT_OK if report.ok else EXIT_VIOLATED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--decimal", type=int, metavar="N", help="print N-digit decimals instead of p/q")

    parser = _Parser(prog="dualnet", description="Exact analysis of planar resistor networks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("resist", parents=[common], help="effective resistance over each edge")
    p.add_argument("file")
    p.add_argument("--edge", metavar="ID")
    p.set_defaults(func=cmd_resist)

    p = sub.add_parser("dual", parents=[common], help="dual electrical network")
    p.add_argument("file")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("check", parents=[common], help="r_e/R_e + r_e'/R_e' per edge")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trees", parents=[common], help="spanning-tree count and weight sum")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("faces", parents=[common], help="face census and Euler check")
    p.add_argument("file")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("verify", parents=[common], help="full enumeration cross-check")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.decimal is not None and args.decimal < 0:
        print("error: --decimal must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    em = _Emitter(args, out if out is not None else sys.stdout)
    try:
        return args.func(args, em)
    except GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
