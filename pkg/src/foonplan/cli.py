"""``foon`` command line: merge, retrieve, validate, stats, export-dot.

Exit codes: 0 success, 1 retrieval or validation failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bench
from .dot import to_dot
from .graph import merge
from .model import ObjectNode
from .parser import FoonParseError, load_kitchen, load_subgraph, serialize_subgraph
from .retrieval import (
    DEFAULT_MAX_DEPTH,
    RetrievalError,
    RetrievalQuery,
    Strategy,
    TaskTree,
    retrieve,
    validate,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _err(msg):
    print(msg, file=sys.stderr)


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _load_units(paths):
    subgraphs = []
    for path in paths:
        try:
            subgraphs.append(load_subgraph(path))
        except OSError as exc:
            raise InputError("cannot read %s: %s" % (path, exc.strerror or exc))
    return subgraphs


def _load_kitchen(path):
    if path is None:
        return []
    try:
        return load_kitchen(path)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror or exc))


def _goal(args):
    if not args.goal:
        raise InputError("--goal is required")
    if not args.state:
        raise InputError("goal %r needs at least one --state" % args.goal)
    try:
        return ObjectNode(args.goal, args.state, args.ingredient or ())
    except ValueError as exc:
        raise InputError("bad goal: %s" % exc)


def _summary_stream(args):
    # keep stdout clean when the main result is written there
    return sys.stderr if getattr(args, "output", None) in (None, "-") else sys.stdout


def cmd_merge(args):
    subgraphs = _load_units(args.files)
    foon = merge(subgraphs)
    _write(serialize_subgraph(foon.units), args.output)
    n, d = len(foon), foon.duplicates_removed
    print("%d unit%s, %d duplicate%s removed" % (n, "" if n == 1 else "s", d, "" if d == 1 else "s"),
          file=_summary_stream(args))
    return EXIT_OK


def cmd_retrieve(args):
    foon = merge(_load_units(args.foon))
    kitchen = _load_kitchen(args.kitchen)
    query = RetrievalQuery(_goal(args), kitchen, Strategy.parse(args.algo), args.max_depth)
    try:
        tree = retrieve(foon, query, lenient=args.lenient)
    except RetrievalError as exc:
        _err("retrieval failed (%s): %s" % (query.strategy.value, exc))
        return EXIT_FAILED
    for warning in tree.warnings:
        _err("warning: " + warning)
    _write(serialize_subgraph(tree.units), args.output)
    n = len(tree)
    print("%d unit%s" % (n, "" if n == 1 else "s"), file=_summary_stream(args))
    return EXIT_OK if tree.executable else EXIT_FAILED


def cmd_validate(args):
    units = [u for sub in _load_units(args.foon) for u in sub]
    kitchen = _load_kitchen(args.kitchen)
    tree = TaskTree(tuple(units), _goal(args))
    report = validate(tree, kitchen)
    print(report.format())
    return EXIT_OK if report.valid else EXIT_FAILED


def _stats_goals(args):
    if args.goals:
        return [item.as_object() for item in _load_kitchen(args.goals)]
    return [_goal(args)]


def _use_color():
    mode = os.environ.get("FOON_COLOR", "auto").lower()
    return mode != "never" and sys.stdout.isatty()


def cmd_stats(args):
    foon = merge(_load_units(args.foon))
    kitchen = _load_kitchen(args.kitchen)
    goals = _stats_goals(args)
    rows = bench.run_table(foon, kitchen, goals, repeats=args.repeats,
                           max_depth=args.max_depth, lenient=args.lenient)
    sys.stdout.write(bench.render_table(rows, color=_use_color()))
    csv_text = bench.render_csv(rows)
    if args.output in (None, "-"):
        sys.stdout.write("\n" + csv_text)
    else:
        _write(csv_text, args.output)
    return EXIT_OK


def cmd_export_dot(args):
    foon = merge(_load_units(args.foon))
    _write(to_dot(foon.units), args.output)
    return EXIT_OK


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="foon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def goal_flags(p, required=True):
        p.add_argument("--goal", required=required, help="goal object name")
        p.add_argument("--state", action="append", default=[], help="goal state (repeatable)")
        p.add_argument("--ingredient", action="append", default=[], help="goal ingredient (repeatable)")

    def out_flag(p):
        p.add_argument("-o", "--output", metavar="PATH")

    p = sub.add_parser("merge", help="merge subgraph files into a universal FOON")
    p.add_argument("files", nargs="+")
    out_flag(p)
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("retrieve", help="retrieve a task tree for a goal")
    p.add_argument("--foon", action="append", required=True)
    p.add_argument("--kitchen")
    goal_flags(p)
    p.add_argument("--algo", choices=["iddfs", "h1", "h2"], default="iddfs")
    p.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--lenient", action="store_true",
                   help="assume missing base items are available (h1/h2)")
    out_flag(p)
    p.set_defaults(func=cmd_retrieve)

    p = sub.add_parser("validate", help="check a task tree file against a kitchen")
    p.add_argument("--foon", action="append", required=True, help="task tree file")
    p.add_argument("--kitchen")
    goal_flags(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="unit-count and timing table for all strategies")
    p.add_argument("--foon", action="append", required=True)
    p.add_argument("--kitchen")
    goal_flags(p, required=False)
    p.add_argument("--goals", metavar="FILE", help="goal list in kitchen format")
    p.add_argument("--repeats", type=_positive, default=5)
    p.add_argument("--max-depth", type=_positive, default=DEFAULT_MAX_DEPTH)
    p.add_argument("--lenient", action="store_true")
    out_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("export-dot", help="write the FOON as a Graphviz digraph")
    p.add_argument("--foon", action="append", required=True)
    out_flag(p)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FoonParseError as exc:
        _err(str(exc))
    except InputError as exc:
        _err("error: %s" % exc)
    except OSError as exc:
        _err("error: %s" % exc)
    return EXIT_INPUT
