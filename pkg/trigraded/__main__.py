"""CLI entrypoint for python -m trigraded."""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import asdict
from typing import List, Optional

from sqlalchemy.engine import make_url

from trigraded.config import settings
from trigraded.context import generate_run_id
from trigraded.errors import TrigradedError, UsageError
from trigraded.jobs import bockstein, cache, chart, cta, degree, ext, point, regions, steenrod
from trigraded.logging import setup_logging

CONFIG_SENSITIVE_KEYS = {"database_url"}
NEGATIVE_VALUE = re.compile(r"^-\d[\d:,-]*$")


class Parser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with argparse's status 2.

    Values such as ``-6:4,-4:6`` or ``-3,1,0`` are option arguments, not flags.
    """

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = NEGATIVE_VALUE

    def error(self, message: str) -> None:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="trigraded", description="Tri-graded Artin-Tate R-motivic homotopy computations.")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", parser_class=Parser)

    deg = sub.add_parser("degree", help="Degrees of named elements and their realizations.")
    deg.add_argument("element", nargs="?", help="Name from the registry, e.g. rho or tau_1")
    deg.add_argument("--convert", help="p,q,w or p,q")
    deg.add_argument("--list", action="store_true", help="List every named element")

    pt = sub.add_parser("point", help="Coefficient rings of a point.")
    pt.add_argument("--ring", required=True, choices=["uF2", "uZ2", "MF2", "MZ2", "MFp"])
    pt.add_argument("--box", default=None, help="pmin:pmax,qmin:qmax[,wmin:wmax]")
    pt.add_argument("--prime", type=int, default=3, help="Odd prime for MFp")
    pt.add_argument("--format", dest="fmt", choices=["jsonl", "tsv"], default="jsonl")

    st = sub.add_parser("steenrod", help="Tri-graded dual Steenrod algebra.")
    st_sub = st.add_subparsers(dest="action", parser_class=Parser)
    st_rank = st_sub.add_parser("rank", help="Rank over F2 in a degree or a box.")
    st_rank.add_argument("--degree")
    st_rank.add_argument("--box")
    st_rank.add_argument("--basis", action="store_true", help="Also list the basis")
    st_basis = st_sub.add_parser("basis", help="Admissible basis in one degree.")
    st_basis.add_argument("--degree", required=True)
    st_mul = st_sub.add_parser("mul", help="Product of two expressions in normal form.")
    st_mul.add_argument("x")
    st_mul.add_argument("y")

    ex = sub.add_parser("ext", help="Ext over the truncated BP Hopf algebroid.")
    ex.add_argument("--s-max", type=int, default=settings.ext_s_max)
    ex.add_argument("--degree", type=int, default=settings.ext_degree, help="Internal degree cap D")
    ex.add_argument("--coeffs", choices=["Z", "F2", "both"], default="Z")
    ex.add_argument("--cocycles", action="store_true", help="Attach cobar representatives")
    ex.add_argument("--as-table", action="store_true", help="Emit group-table records in (t-s, s)")
    ex.add_argument("--check", action="store_true", help="Verify 2-Bockstein rank accounting")
    ex.add_argument("--no-cache", action="store_true")

    ct = sub.add_parser("cta", help="Homotopy of Cta and related fibers.")
    ct.add_argument("--object", dest="obj", choices=["Cta", "CaCta", "CtaAinv"], default="Cta")
    ct.add_argument("--box", default=None, help="pmin:pmax,qmin:qmax,wmin:wmax")
    ct.add_argument("--degree", type=int, default=None, help="Override the Ext degree cap")
    ct.add_argument("--explain", help="p,q,w: list the Ext summands of one degree")
    ct.add_argument("--format", dest="fmt", choices=["jsonl", "tsv"], default="jsonl")
    ct.add_argument("--no-cache", action="store_true")

    bs = sub.add_parser("bockstein", help="ta-Bockstein spectral sequences.")
    bs_sub = bs.add_subparsers(dest="action", parser_class=Parser)
    bs_run = bs_sub.add_parser("run", help="Compute pages and E_inf.")
    bs_run.add_argument("--input", required=True, help="JSON file or bundled dataset name (kq)")
    bs_run.add_argument("--pages", type=int, default=None)
    bs_run.add_argument("--box", default=None)
    bs_run.add_argument("--chart", default=None, help="Write an E_inf chart to this SVG file")
    bs_check = bs_sub.add_parser("check", help="Validate an input file.")
    bs_check.add_argument("--input", required=True)

    rg = sub.add_parser("regions", help="Vanishing regions.")
    rg_sub = rg.add_subparsers(dest="action", parser_class=Parser)
    rg_check = rg_sub.add_parser("check", help="List nonzero degrees outside a region.")
    rg_check.add_argument("--object", dest="obj", required=True, help="Region id 1..9 or object name")
    rg_check.add_argument("--table", required=True)
    rg_member = rg_sub.add_parser("member", help="Is a degree inside a region?")
    rg_member.add_argument("--object", dest="obj", required=True)
    rg_member.add_argument("--degree", required=True)
    rg_sub.add_parser("list", help="Describe every region.")

    ch = sub.add_parser("chart", help="Render a table file as SVG.")
    ch.add_argument("--table", required=True)
    ch.add_argument("--plane", choices=["pq", "qw", "pw", "ro"], default="pq")
    ch.add_argument("--fix", action="append", help="Value of the hidden coordinate, e.g. w=0")
    ch.add_argument("--edges", help="Comma-separated element names, e.g. a,u")
    ch.add_argument("--ring", choices=["uF2", "uZ2", "MF2", "MZ2"], help="Ring whose products draw edges")
    ch.add_argument("--products", help="JSON lines product table for edges")
    ch.add_argument("--box", help="xmin:xmax,ymin:ymax")
    ch.add_argument("--title", default="")
    ch.add_argument("--out", default=None)

    cc = sub.add_parser("cache", help="Ext cache maintenance.")
    cc_sub = cc.add_subparsers(dest="action", parser_class=Parser)
    cc_sub.add_parser("list")
    cc_sub.add_parser("clear")

    sub.add_parser("config", help="Print effective configuration (secrets redacted).")
    return parser


def print_config() -> None:
    """Display configuration with the database password hidden."""
    data = asdict(settings)
    for key in data:
        if key in CONFIG_SENSITIVE_KEYS and data[key]:
            data[key] = make_url(data[key]).render_as_string(hide_password=True)
    for key in sorted(data):
        print(f"{key}={data[key]}")


def dispatch(args: argparse.Namespace) -> int:
    command, action = args.command, getattr(args, "action", None)
    job_id = generate_run_id(command)

    if command == "degree":
        return degree.run(args.element, args.convert, args.list, job_id=job_id)
    if command == "point":
        return point.run(args.ring, args.box, args.prime, args.fmt, job_id=job_id)
    if command == "steenrod":
        if action == "rank":
            return steenrod.rank(args.degree, args.box, args.basis, job_id=job_id)
        if action == "basis":
            return steenrod.basis(args.degree, job_id=job_id)
        if action == "mul":
            return steenrod.mul(args.x, args.y, job_id=job_id)
    if command == "ext":
        return ext.run(
            args.s_max, args.degree, args.coeffs, args.cocycles, args.as_table, args.check,
            use_cache=not args.no_cache, job_id=job_id,
        )
    if command == "cta":
        return cta.run(args.obj, args.box, args.degree, args.explain, not args.no_cache, args.fmt, job_id=job_id)
    if command == "bockstein":
        if action == "run":
            return bockstein.run(args.input, args.pages, args.box, args.chart, job_id=job_id)
        if action == "check":
            return bockstein.check(args.input, job_id=job_id)
    if command == "regions":
        if action == "check":
            return regions.check(args.obj, args.table, job_id=job_id)
        if action == "member":
            return regions.member(args.obj, args.degree, job_id=job_id)
        if action == "list":
            return regions.show(job_id=job_id)
    if command == "chart":
        return chart.run(
            args.table, args.plane, args.fix, args.edges, args.ring, args.products, args.box,
            args.title, args.out, job_id=job_id,
        )
    if command == "cache":
        if action == "list":
            return cache.list_entries(job_id=job_id)
        if action == "clear":
            return cache.clear(job_id=job_id)
    if command == "config":
        print_config()
        return 0
    raise UsageError(f"missing subcommand for {command or 'trigraded'}; see --help")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        setup_logging(args.log_level or settings.log_level, service="trigraded")
        return dispatch(args)
    except TrigradedError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
