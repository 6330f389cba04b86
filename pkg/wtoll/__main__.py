import argparse
import asyncio
import logging
import os
import sys
from typing import List, Optional

from .bases import Command
from .commands import (
    BuildProduct,
    ComputeHull,
    ComputeInterval,
    ComputeInvariant,
    ExportGraph,
    RunVerification,
)
from .convexity.intervals import IntervalKind
from .core import Harness
from .graphs.products import ProductKind

LOG_FORMAT = "%(asctime)s.%(msecs)03d %(name)s %(levelname)s %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

GRAPH_HELP = (
    "graph6 string, graph6 or edge-list file, or expression like lex(path(3), star(2))"
)
KINDS = [kind.value for kind in IntervalKind]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wtoll", description="Weakly toll convexity on graphs and graph products."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    interval = subparsers.add_parser("interval", help="print a pair interval")
    interval.add_argument("--graph", required=True, help=GRAPH_HELP)
    interval.add_argument("--kind", choices=KINDS, default="wt")
    interval.add_argument("--u", type=int, required=True)
    interval.add_argument("--v", type=int, required=True)
    interval.add_argument("--report", action="store_true", help="add X, X_u and X_v")

    invariant = subparsers.add_parser("invariant", help="print wtn or wth")
    invariant.add_argument("--graph", required=True, help=GRAPH_HELP)
    invariant.add_argument("--what", choices=["wtn", "wth"], default="wtn")
    invariant.add_argument("--kind", choices=KINDS, default="wt")
    invariant.add_argument("--witness", action="store_true")

    hull = subparsers.add_parser("hull", help="print the convex hull of a vertex set")
    hull.add_argument("--graph", required=True, help=GRAPH_HELP)
    hull.add_argument("--set", dest="vertices", type=int, nargs="+", required=True)
    hull.add_argument("--kind", choices=KINDS, default="wt")

    product = subparsers.add_parser("product", help="build a graph product")
    product.add_argument(
        "--kind", choices=[kind.value for kind in ProductKind], required=True
    )
    product.add_argument("--g", required=True, help=GRAPH_HELP)
    product.add_argument("--h", required=True, nargs="+", help=GRAPH_HELP)
    product.add_argument("--out")
    product.add_argument("--format", choices=["g6", "edges", "dot"], default="g6")

    export = subparsers.add_parser("export", help="write a graph as DOT")
    export.add_argument("--graph", required=True, help=GRAPH_HELP)
    export.add_argument("--dot")

    verify = subparsers.add_parser("verify", help="run verification checks")
    verify.add_argument("--suite", default="all")
    verify.add_argument("--spec", help="YAML corpus spec")
    verify.add_argument(
        "--out", help="JSON-lines report; a CSV summary lands next to it"
    )
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--timing", action="store_true")
    return parser


def build_command(arguments: argparse.Namespace) -> Command:
    if arguments.command == "interval":
        return ComputeInterval(
            arguments.graph, arguments.kind, arguments.u, arguments.v, arguments.report
        )
    if arguments.command == "invariant":
        return ComputeInvariant(
            arguments.graph, arguments.what, arguments.kind, arguments.witness
        )
    if arguments.command == "hull":
        return ComputeHull(arguments.graph, tuple(arguments.vertices), arguments.kind)
    if arguments.command == "product":
        return BuildProduct(
            arguments.kind,
            arguments.g,
            tuple(arguments.h),
            arguments.out,
            arguments.format,
        )
    if arguments.command == "export":
        return ExportGraph(arguments.graph, arguments.dot)
    return RunVerification(
        arguments.suite,
        arguments.spec,
        arguments.out,
        arguments.workers,
        arguments.timing,
    )


def configure_logging() -> None:
    name = os.environ.get("WTOLL_LOG_LEVEL", "WARNING").upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)


async def run(arguments: argparse.Namespace) -> int:
    harness = Harness()
    task = asyncio.get_running_loop().create_task(harness.run())
    try:
        return await harness.submit(build_command(arguments))
    finally:
        await harness.exit()
        await task


def main(argv: Optional[List[str]] = None) -> int:
    arguments = build_parser().parse_args(argv)
    configure_logging()
    return asyncio.run(run(arguments))


if __name__ == "__main__":
    sys.exit(main())
