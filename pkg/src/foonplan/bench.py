"""Exhaustive tree enumeration and side-by-side strategy tables.

:func:`enumerate_trees` is a brute-force reference that shares no search
code with :mod:`foonplan.retrieval`: it walks every consistent choice of
creating unit per missing object and keeps the acyclic ones. It is meant
for small networks and for checking the retrieval strategies.
"""
from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .graph import UniversalFOON
from .model import FunctionalUnit, format_key, object_key
from .retrieval import (
    DEFAULT_MAX_DEPTH,
    RetrievalError,
    RetrievalQuery,
    Strategy,
    finalize,
    retrieve,
)

DEFAULT_CAP = 100_000
STRATEGIES = (Strategy.IDDFS, Strategy.HEURISTIC1, Strategy.HEURISTIC2)


@dataclass(frozen=True)
class FeasibleTree:
    units: Tuple[FunctionalUnit, ...]
    depth: int

    @property
    def ordinals(self) -> FrozenSet[int]:
        return frozenset(u.source_ordinal for u in self.units)

    def __len__(self):
        return len(self.units)


@dataclass(frozen=True)
class Enumeration:
    trees: Tuple[FeasibleTree, ...]
    truncated: bool = False

    def __len__(self):
        return len(self.trees)

    def __contains__(self, tree):
        ordinals = getattr(tree, "ordinals", None)
        if ordinals is None:
            ordinals = frozenset(u.source_ordinal for u in tree)
        return any(t.ordinals == ordinals for t in self.trees)

    @property
    def min_depth(self) -> Optional[int]:
        return min((t.depth for t in self.trees), default=None)

    def unit_counts(self):
        return sorted({len(t) for t in self.trees})


def enumerate_trees(foon: UniversalFOON, kitchen, goal, max_depth: int = DEFAULT_MAX_DEPTH,
                    cap: int = DEFAULT_CAP) -> Enumeration:
    """Every distinct feasible unit set that makes ``goal`` from ``kitchen``.

    A tree assigns one creating unit to each object that is needed and not in
    the kitchen; assignments with circular dependencies or depth above
    ``max_depth`` are discarded. Depth counts units along the longest input
    chain, kitchen items being depth 0. Stops with ``truncated=True`` once
    more than ``cap`` trees have been found.
    """
    stock = frozenset(object_key(item) for item in kitchen)
    makers: Dict[tuple, List[int]] = {}
    for pos, unit in enumerate(foon.units):
        for key in {object_key(n) for n in unit.outputs}:
            makers.setdefault(key, []).append(pos)
    needs = [[object_key(n) for n in unit.inputs] for unit in foon.units]

    found: Dict[FrozenSet[int], int] = {}
    truncated = False

    def depends_on(start, target, assign):
        stack, seen = [start], set()
        while stack:
            key = stack.pop()
            if key == target:
                return True
            if key in seen or key not in assign:
                continue
            seen.add(key)
            stack.extend(needs[assign[key]])
        return False

    def depth_of(assign):
        memo = {}

        def depth(key):
            if key in stock:
                return 0
            if key not in memo:
                memo[key] = 1 + max(depth(k) for k in needs[assign[key]])
            return memo[key]

        return depth(object_key(goal))

    def extend(assign, pending):
        nonlocal truncated
        if truncated:
            return
        while pending and (pending[0] in stock or pending[0] in assign):
            pending = pending[1:]
        if not pending:
            d = depth_of(assign)
            if d <= max_depth:
                units = frozenset(assign.values())
                if units not in found and len(found) >= cap:
                    truncated = True
                    return
                found[units] = min(d, found.get(units, d))
            return
        key, rest = pending[0], pending[1:]
        for pos in makers.get(key, ()):
            if any(depends_on(k, key, assign) for k in needs[pos]):
                continue
            assign[key] = pos
            extend(assign, rest + tuple(needs[pos]))
            del assign[key]

    extend({}, (object_key(goal),))

    trees = []
    for units, d in found.items():
        ordered, ok = finalize(sorted((foon.units[p] for p in units), key=lambda u: u.source_ordinal),
                               kitchen)
        assert ok, "acyclic assignment must be executable"
        trees.append(FeasibleTree(tuple(ordered), d))
    trees.sort(key=lambda t: (len(t), sorted(t.ordinals)))
    return Enumeration(tuple(trees), truncated)


@dataclass(frozen=True)
class BenchRow:
    goal: str
    algorithm: str
    unit_count: int
    elapsed: float
    succeeded: bool


def goal_label(goal) -> str:
    return format_key(object_key(goal))


def run_table(foon: UniversalFOON, kitchen, goals: Sequence, repeats: int = 5,
              max_depth: int = DEFAULT_MAX_DEPTH, lenient: bool = False) -> List[BenchRow]:
    """Retrieve every goal with every strategy; goal-major, strategy-minor rows.

    ``elapsed`` is the median wall time over ``repeats`` runs. A failed
    retrieval gives a row with ``succeeded=False`` and a zero unit count.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    kitchen = tuple(kitchen)
    rows = []
    for goal in goals:
        for strategy in STRATEGIES:
            query = RetrievalQuery(goal, kitchen, strategy, max_depth)
            times, count, ok = [], 0, True
            for _ in range(repeats):
                start = time.perf_counter()
                try:
                    tree = retrieve(foon, query, lenient=lenient)
                    count, ok = len(tree), tree.executable
                except RetrievalError:
                    count, ok = 0, False
                times.append(time.perf_counter() - start)
            if not ok:
                count = 0
            rows.append(BenchRow(goal_label(goal), strategy.value, count,
                                 statistics.median(times), ok))
    return rows


CSV_COLUMNS = ("goal", "algorithm", "unit_count", "elapsed_seconds", "succeeded")


def render_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.goal, row.algorithm, row.unit_count,
                         "%.9f" % row.elapsed, "true" if row.succeeded else "false"])
    return buf.getvalue()


_RED, _BOLD, _RESET = "\033[31m", "\033[1m", "\033[0m"


def _grid(title, header, body, color):
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]

    def line(cells):
        return "  ".join(c.ljust(w) if i == 0 else c.rjust(w)
                         for i, (c, w) in enumerate(zip(cells, widths))).rstrip()

    out = [title, line(header), "  ".join("-" * w for w in widths)]
    for cells in body:
        text = line(cells)
        if color and "FAIL" in cells:
            text = _RED + text + _RESET
        out.append(text)
    if color:
        out[0] = _BOLD + out[0] + _RESET
    return out


def render_table(rows: Sequence[BenchRow], color: bool = False) -> str:
    """Two goal-by-strategy grids: unit counts, then median elapsed seconds."""
    goals = list(dict.fromkeys(r.goal for r in rows))
    algorithms = list(dict.fromkeys(r.algorithm for r in rows))
    cell = {(r.goal, r.algorithm): r for r in rows}
    header = ["goal"] + algorithms

    counts, times = [], []
    for goal in goals:
        c, t = [goal], [goal]
        for algo in algorithms:
            row = cell.get((goal, algo))
            if row is None:
                c.append("")
                t.append("")
                continue
            c.append(str(row.unit_count) if row.succeeded else "FAIL")
            t.append("%.6f" % row.elapsed)
        counts.append(c)
        times.append(t)

    out = _grid("Functional units in task tree", header, counts, color)
    out.append("")
    out += _grid("Median retrieval time (s)", header, times, color)
    return "\n".join(out) + "\n"
