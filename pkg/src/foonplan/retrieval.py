"""Task tree retrieval from a universal FOON.

Three strategies are provided:

* ``iddfs``: iterative deepening over the AND-OR structure (objects are OR
  nodes, units are AND nodes). The first depth bound at which the goal can
  be built from kitchen items wins, so the returned tree has minimum depth.
* ``heuristic1``: breadth-first expansion from the goal, picking for each
  missing object the creating unit with the highest success rate.
* ``heuristic2``: the same traversal, picking the creating unit with the
  fewest inputs.

Ties always go to the unit earliest in merge order.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple

from .graph import UniversalFOON
from .model import FunctionalUnit, KitchenItem, ObjectKey, ObjectNode, format_key, object_key

logger = logging.getLogger(__name__)

DEFAULT_MAX_DEPTH = 25


class Strategy(str, Enum):
    IDDFS = "iddfs"
    HEURISTIC1 = "heuristic1"
    HEURISTIC2 = "heuristic2"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        aliases = {"h1": cls.HEURISTIC1, "h2": cls.HEURISTIC2}
        return aliases.get(text) or cls(text)

    @property
    def short_name(self):
        return {"iddfs": "iddfs", "heuristic1": "h1", "heuristic2": "h2"}[self.value]


@dataclass(frozen=True)
class RetrievalQuery:
    goal: ObjectNode
    kitchen: Tuple[KitchenItem, ...] = ()
    strategy: Strategy = Strategy.IDDFS
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        goal = self.goal
        if isinstance(goal, KitchenItem):
            goal = goal.as_object()
        if not isinstance(goal, ObjectNode):
            raise TypeError("goal must be an ObjectNode")
        if int(self.max_depth) < 1:
            raise ValueError("max_depth must be >= 1")
        object.__setattr__(self, "goal", goal)
        object.__setattr__(self, "kitchen", tuple(self.kitchen))
        object.__setattr__(self, "strategy", Strategy.parse(self.strategy))
        object.__setattr__(self, "max_depth", int(self.max_depth))


@dataclass(frozen=True)
class Selection:
    """One expansion: the object, its candidate units and the one picked."""

    key: ObjectKey
    candidates: Tuple[int, ...]
    chosen: int


@dataclass(frozen=True)
class TaskTree:
    units: Tuple[FunctionalUnit, ...]
    goal: ObjectNode
    strategy: Optional[Strategy] = None
    depth_bound_used: Optional[int] = None
    trace: Tuple[Selection, ...] = ()
    executable: bool = True
    warnings: Tuple[str, ...] = ()

    def __len__(self):
        return len(self.units)

    @property
    def ordinals(self):
        return frozenset(u.source_ordinal for u in self.units)


class RetrievalError(Exception):
    """Retrieval failed; ``keys`` names the objects responsible."""

    def __init__(self, reason: str, keys=(), strategy=None, trace=()):
        self.reason = reason
        self.keys = tuple(keys)
        self.strategy = strategy
        self.trace = tuple(trace)
        detail = ", ".join(format_key(k) for k in self.keys)
        super().__init__("%s: %s" % (reason, detail) if detail else reason)


def kitchen_keys(kitchen) -> frozenset:
    return frozenset(object_key(item) for item in kitchen)


def in_kitchen(goal, kitchen) -> bool:
    """True if some kitchen item has the goal's name, states and ingredients."""
    if not isinstance(kitchen, (set, frozenset)):
        kitchen = kitchen_keys(kitchen)
    return object_key(goal) in kitchen


def finalize(units: Sequence[FunctionalUnit], kitchen) -> Tuple[List[FunctionalUnit], bool]:
    """Stable topological ordering of ``units`` against the kitchen.

    Returns ``(ordered, True)``, or ``(list(units), False)`` when some units
    can never become ready.
    """
    available = set(kitchen_keys(kitchen))
    remaining = list(units)
    ordered = []
    while remaining:
        for i, unit in enumerate(remaining):
            if all(k in available for k in unit.input_keys()):
                break
        else:
            return list(units), False
        ordered.append(remaining.pop(i))
        available.update(unit.output_keys())
    return ordered, True


@dataclass(frozen=True)
class Problem:
    unit_index: Optional[int]
    key: ObjectKey
    message: str

    def __str__(self):
        where = "unit %d" % self.unit_index if self.unit_index is not None else "tree"
        return "%s: %s: %s" % (where, format_key(self.key), self.message)


@dataclass(frozen=True)
class ValidationReport:
    problems: Tuple[Problem, ...] = ()

    @property
    def valid(self):
        return not self.problems

    def __bool__(self):
        return self.valid

    def format(self):
        if self.valid:
            return "valid"
        return "invalid\n" + "\n".join("  " + str(p) for p in self.problems)


def validate(tree: TaskTree, kitchen) -> ValidationReport:
    """Check that ``tree`` is executable in order and yields its goal."""
    stock = kitchen_keys(kitchen)
    goal = object_key(tree.goal)
    problems = []

    producers = [i for i, u in enumerate(tree.units) if goal in u.output_keys()]
    if not producers:
        if goal not in stock:
            problems.append(Problem(None, goal, "goal is neither in the kitchen nor produced"))
    else:
        last = producers[-1]
        for i in range(last + 1, len(tree.units)):
            if goal in tree.units[i].input_keys():
                problems.append(Problem(i, goal, "goal consumed after its final producer"))

    available = set(stock)
    for i, unit in enumerate(tree.units):
        for key in dict.fromkeys(unit.input_keys()):
            if key not in available:
                problems.append(Problem(i, key, "input neither in kitchen nor produced earlier"))
        available.update(unit.output_keys())
    return ValidationReport(tuple(problems))


class _DepthSearch:
    """Depth-bounded AND-OR resolution for one bound of the deepening loop.

    ``resolves(key, d)`` is true iff the object is in the kitchen, or d >= 1
    and some creating unit has every input resolving at d - 1. Results are
    memoized per (key, d); because d strictly decreases on every recursive
    call, cyclic networks cannot recurse forever.
    """

    def __init__(self, foon: UniversalFOON, stock: frozenset):
        self.foon = foon
        self.stock = stock
        self.memo = {}
        self.leaf_flags = []
        self.unresolved = set()

    def resolves(self, key, depth):
        cached = self.memo.get((key, depth))
        if cached is not None:
            return cached
        if key in self.stock:
            if depth == 0:
                self.leaf_flags.append(True)
            result = True
        elif depth == 0:
            self.leaf_flags.append(False)
            self.unresolved.add(key)
            result = False
        else:
            candidates = self.foon.creators_index.get(key, ())
            if not candidates:
                self.unresolved.add(key)
            result = any(self._unit_resolves(self.foon.units[pos], depth - 1) for pos in candidates)
        self.memo[(key, depth)] = result
        return result

    def _unit_resolves(self, unit, depth):
        return all(self.resolves(k, depth) for k in unit.input_keys())

    def level(self, key, bound):
        for depth in range(bound + 1):
            if self.resolves(key, depth):
                return depth
        return None

    def extract(self, goal, bound):
        """Collect one unit per missing object in execution order.

        Each object is made by the first creator (merge order) whose inputs
        resolve one level below the object's own shallowest level, so depths
        strictly decrease along every dependency and no object repeats.
        """
        units = self.foon.units
        producer = {}
        emitted = set()
        order, trace = [], []

        def visit(key):
            if key in self.stock or key in producer:
                return
            depth = self.level(key, bound)
            candidates = self.foon.creators_index[key]
            pos = next(p for p in candidates if self._unit_resolves(units[p], depth - 1))
            producer[key] = pos
            trace.append(Selection(key, candidates, pos))
            for k in units[pos].input_keys():
                visit(k)
            if pos not in emitted:
                emitted.add(pos)
                order.append(units[pos])

        visit(goal)
        return order, trace


def retrieve_iddfs(foon: UniversalFOON, query: RetrievalQuery) -> TaskTree:
    stock = kitchen_keys(query.kitchen)
    goal = object_key(query.goal)
    if goal in stock:
        return TaskTree((), query.goal, Strategy.IDDFS, depth_bound_used=0)
    if not foon.creators_index.get(goal):
        raise RetrievalError("unreachable goal", [goal], Strategy.IDDFS)

    search = None
    for bound in range(1, query.max_depth + 1):
        search = _DepthSearch(foon, stock)
        if search.resolves(goal, bound):
            break
        logger.debug("iddfs: no tree at depth bound %d", bound)
    else:
        raise RetrievalError("no tree within depth bound %d" % query.max_depth,
                             sorted(search.unresolved), Strategy.IDDFS)

    units, trace = search.extract(goal, bound)
    ordered, ok = finalize(units, query.kitchen)
    assert ok, "depth-resolved tree must be executable"
    return TaskTree(tuple(ordered), query.goal, Strategy.IDDFS, bound, tuple(trace))


def select_max_success(foon: UniversalFOON, candidates: Sequence[int]) -> int:
    best, best_rate = None, -1.0
    for pos in candidates:
        rate = foon.units[pos].success_rate
        if rate > best_rate:
            best, best_rate = pos, rate
    return best


def select_min_inputs(foon: UniversalFOON, candidates: Sequence[int]) -> int:
    counts = {pos: foon.units[pos].inputs_count for pos in candidates}
    fewest = min(counts.values())
    return next(pos for pos in candidates if counts[pos] == fewest)


def _retrieve_breadth_first(foon: UniversalFOON, query: RetrievalQuery,
                            select: Callable, strategy: Strategy, lenient: bool) -> TaskTree:
    stock = kitchen_keys(query.kitchen)
    goal = object_key(query.goal)
    queue = deque([goal])
    visited = {goal}
    picked, picked_pos = [], set()
    trace, warnings = [], []

    while queue:
        key = queue.popleft()
        if key in stock:
            continue
        candidates = foon.creators_index.get(key, ())
        if not candidates:
            if key == goal:
                raise RetrievalError("unreachable goal", [key], strategy, trace)
            if not lenient:
                raise RetrievalError("missing base item", [key], strategy, trace)
            msg = "missing base item assumed available: %s" % format_key(key)
            logger.warning(msg)
            warnings.append(msg)
            continue
        pos = select(foon, candidates)
        trace.append(Selection(key, tuple(candidates), pos))
        unit = foon.units[pos]
        if pos not in picked_pos:
            picked_pos.add(pos)
            picked.append(unit)
        for k in unit.input_keys():
            if k not in visited:
                visited.add(k)
                queue.append(k)

    picked.reverse()
    ordered, ok = finalize(picked, query.kitchen)
    tree = TaskTree(tuple(ordered), query.goal, strategy, None, tuple(trace), ok, tuple(warnings))
    if not ok:
        if not lenient:
            blocked = sorted({p.key for p in validate(tree, query.kitchen).problems})
            raise RetrievalError("non-executable tree", blocked, strategy, trace)
        tree = TaskTree(tree.units, tree.goal, strategy, None, tree.trace, False,
                        tree.warnings + ("non-executable tree",))
    return tree


def retrieve_heuristic1(foon: UniversalFOON, query: RetrievalQuery, lenient: bool = False) -> TaskTree:
    return _retrieve_breadth_first(foon, query, select_max_success, Strategy.HEURISTIC1, lenient)


def retrieve_heuristic2(foon: UniversalFOON, query: RetrievalQuery, lenient: bool = False) -> TaskTree:
    return _retrieve_breadth_first(foon, query, select_min_inputs, Strategy.HEURISTIC2, lenient)


def retrieve(foon: UniversalFOON, query: RetrievalQuery, lenient: bool = False) -> TaskTree:
    """Run the strategy named by ``query.strategy``.

    ``lenient`` only affects the breadth-first heuristics: objects with no
    creator that are missing from the kitchen are then assumed available
    (with a warning) instead of failing the retrieval.
    """
    if query.strategy is Strategy.IDDFS:
        return retrieve_iddfs(foon, query)
    if query.strategy is Strategy.HEURISTIC1:
        return retrieve_heuristic1(foon, query, lenient)
    return retrieve_heuristic2(foon, query, lenient)
