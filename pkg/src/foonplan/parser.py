"""Reading and writing the line-oriented FOON annotation format.

A subgraph file is a sequence of functional units separated by ``//``
lines::

    //
    O tea cup 0
    S unsweetened tea { tea, sugar }
    O spoon 1
    S clean
    M stir Assumed
    O tea 0
    S sweetened tea
    ...

``O`` lines name an object and end with its motion flag (0 idle, 1 moving),
``S`` lines add a state to the preceding object, optionally followed by a
brace list of ingredients, and exactly one ``M`` line per unit names the
motion. Objects before the ``M`` line are inputs, objects after it are
outputs. Lines starting with ``#`` are comments.

Two extensions over plain annotations: a trailing decimal in [0, 1] on the
``M`` line is the unit's success rate, and a capitalized trailing word (such
as ``Assumed``) is kept as a provenance tag rather than as part of the motion
label.

Kitchen files use the same ``O``/``S`` lines without motions; the flag on
``O`` lines is optional there.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional

from .model import FunctionalUnit, KitchenItem, MotionNode, ObjectNode

logger = logging.getLogger(__name__)

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_FLAGS = ("0", "1")


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ParseDiagnostic:
    line_number: int
    severity: Severity
    message: str

    def __str__(self):
        return "line %d: %s: %s" % (self.line_number, self.severity.value, self.message)


class FoonParseError(ValueError):
    """Raised when a document contains at least one error diagnostic."""

    def __init__(self, diagnostics, source=None):
        self.diagnostics = list(diagnostics)
        self.source = source
        prefix = "%s: " % source if source else ""
        lines = [prefix + str(d) for d in self.diagnostics]
        super().__init__("\n".join(lines))


def _read(text) -> str:
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return text


def _lines(text):
    # splitlines() folds CRLF, and a lone trailing newline adds no line
    for number, raw in enumerate(_read(text).splitlines(), start=1):
        yield number, raw.strip()


class _PendingObject:
    __slots__ = ("line", "name", "flag", "states", "ingredients")

    def __init__(self, line, name, flag):
        self.line = line
        self.name = name
        self.flag = flag
        self.states = []
        self.ingredients = set()


def _parse_state(body: str, line: int, diags: list):
    """Split ``state text { a, b }`` into ``(state, [a, b])``; None on error."""
    opens, closes = body.count("{"), body.count("}")
    if opens == 0 and closes == 0:
        state, items = body, []
    elif opens == 1 and closes == 1 and body.index("{") < body.index("}") and body.endswith("}"):
        state, _, rest = body.partition("{")
        items = [i.strip() for i in rest[:-1].split(",")]
        items = [i for i in items if i]
    else:
        diags.append(ParseDiagnostic(line, Severity.ERROR, "unbalanced ingredient braces"))
        return None
    state = " ".join(state.split())
    if not state:
        diags.append(ParseDiagnostic(line, Severity.ERROR, "S line has no state text"))
        return None
    return state, items


def _parse_motion(body: str, line: int, diags: list) -> Optional[MotionNode]:
    tokens = body.split()
    rate = 1.0
    if tokens and _DECIMAL.fullmatch(tokens[-1]):
        rate = float(tokens.pop())
        if not 0.0 <= rate <= 1.0:
            diags.append(ParseDiagnostic(line, Severity.ERROR, "success rate %s outside [0, 1]" % rate))
            return None
    provenance = None
    if len(tokens) > 1 and tokens[-1][:1].isupper():
        provenance = tokens.pop()
    if not tokens:
        diags.append(ParseDiagnostic(line, Severity.ERROR, "M line has no motion label"))
        return None
    return MotionNode(" ".join(tokens), provenance, rate)


def _finish_object(obj: _PendingObject, diags: list) -> Optional[ObjectNode]:
    if not obj.states:
        diags.append(ParseDiagnostic(obj.line, Severity.ERROR, "object %r has no S line" % obj.name))
        return None
    return ObjectNode(obj.name, obj.states, obj.ingredients, obj.flag)


def _add_state(obj: _PendingObject, body: str, line: int, diags: list):
    parsed = _parse_state(body, line, diags)
    if parsed is None:
        return
    state, items = parsed
    if state in obj.states:
        diags.append(ParseDiagnostic(line, Severity.WARNING, "duplicate state %r" % state))
    else:
        obj.states.append(state)
    obj.ingredients.update(items)


def _parse_block(block, ordinal, diags) -> Optional[FunctionalUnit]:
    errors_before = sum(d.severity is Severity.ERROR for d in diags)
    inputs, outputs = [], []
    motion = None
    motion_lines = 0
    current = None

    def flush():
        nonlocal current
        if current is not None:
            node = _finish_object(current, diags)
            if node is not None:
                (outputs if motion_lines else inputs).append(node)
            current = None

    for number, kind, body in block:
        if kind == "O":
            flush()
            tokens = body.split()
            if not tokens or tokens[-1] not in _FLAGS:
                diags.append(ParseDiagnostic(
                    number, Severity.ERROR, "O line must end with motion flag 0 or 1"))
                # keep following S lines attached so they do not cascade into more errors
                current = _PendingObject(number, " ".join(tokens) or "?", 0)
                continue
            if len(tokens) == 1:
                diags.append(ParseDiagnostic(number, Severity.ERROR, "O line has no object name"))
                current = _PendingObject(number, "?", 0)
                continue
            current = _PendingObject(number, " ".join(tokens[:-1]), int(tokens[-1]))
        elif kind == "S":
            if current is None:
                diags.append(ParseDiagnostic(number, Severity.ERROR, "S line without a preceding O line"))
                continue
            _add_state(current, body, number, diags)
        elif kind == "M":
            flush()
            motion_lines += 1
            if motion_lines > 1:
                diags.append(ParseDiagnostic(number, Severity.ERROR, "multiple M lines in one unit"))
                continue
            motion = _parse_motion(body, number, diags)
    flush()

    start = block[0][0]
    if motion_lines == 0:
        diags.append(ParseDiagnostic(start, Severity.ERROR, "functional unit has no M line"))
    else:
        if not inputs:
            diags.append(ParseDiagnostic(start, Severity.ERROR, "functional unit has no input objects"))
        if not outputs:
            diags.append(ParseDiagnostic(start, Severity.ERROR, "functional unit has no output objects"))
    if sum(d.severity is Severity.ERROR for d in diags) > errors_before or motion is None:
        return None
    return FunctionalUnit(tuple(inputs), motion, tuple(outputs), ordinal)


def _classify(number, line, diags):
    head, _, body = line.partition(" ")
    if head in ("O", "S", "M"):
        return head, body.strip()
    diags.append(ParseDiagnostic(number, Severity.ERROR, "unrecognized line %r" % line))
    return None


def _report(diags, source):
    for d in diags:
        if d.severity is Severity.WARNING:
            logger.warning("%s%s", "%s: " % source if source else "", d)
    if any(d.severity is Severity.ERROR for d in diags):
        raise FoonParseError(diags, source)


def parse_subgraph(text, source=None) -> List[FunctionalUnit]:
    """Parse a subgraph document into functional units in file order.

    ``text`` may be a string, bytes or a readable stream. All problems are
    collected first; if any is an error, :class:`FoonParseError` is raised
    carrying every diagnostic with its line number.
    """
    diags: List[ParseDiagnostic] = []
    blocks, block = [], []
    for number, line in _lines(text):
        if not line or line.startswith("#"):
            continue
        if line == "//":
            if block:
                blocks.append(block)
            block = []
            continue
        classified = _classify(number, line, diags)
        if classified is not None:
            block.append((number,) + classified)
    if block:
        blocks.append(block)

    units = []
    for block in blocks:
        unit = _parse_block(block, len(units), diags)
        if unit is not None:
            units.append(unit)
    _report(diags, source)
    return units


def parse_kitchen(text, source=None) -> List[KitchenItem]:
    """Parse a kitchen inventory; each ``O`` block becomes one item."""
    diags: List[ParseDiagnostic] = []
    items = []
    current = None

    def flush():
        nonlocal current
        if current is not None:
            if not current.states:
                diags.append(ParseDiagnostic(
                    current.line, Severity.ERROR, "object %r has no S line" % current.name))
            else:
                items.append(KitchenItem(current.name, current.states, current.ingredients))
            current = None

    for number, line in _lines(text):
        if not line or line.startswith("#") or line == "//":
            continue
        classified = _classify(number, line, diags)
        if classified is None:
            continue
        kind, body = classified
        if kind == "M":
            diags.append(ParseDiagnostic(number, Severity.ERROR, "M line not allowed in a kitchen file"))
        elif kind == "O":
            flush()
            tokens = body.split()
            if len(tokens) > 1 and tokens[-1] in _FLAGS:
                tokens.pop()
            if not tokens:
                diags.append(ParseDiagnostic(number, Severity.ERROR, "O line has no object name"))
                continue
            current = _PendingObject(number, " ".join(tokens), 0)
        elif current is None:
            diags.append(ParseDiagnostic(number, Severity.ERROR, "S line without a preceding O line"))
        else:
            _add_state(current, body, number, diags)
    flush()
    _report(diags, source)
    return items


def _format_rate(rate: float) -> str:
    return repr(float(rate))


def _object_lines(node) -> List[str]:
    flag = getattr(node, "motion_flag", None)
    lines = ["O %s" % node.name if flag is None else "O %s %d" % (node.name, int(flag))]
    for i, state in enumerate(node.states):
        if i == 0 and node.ingredients:
            lines.append("S %s { %s }" % (state, ", ".join(node.ingredients)))
        else:
            lines.append("S %s" % state)
    return lines


def serialize_subgraph(units) -> str:
    """Write units in canonical form; the output is byte-deterministic."""
    out = []
    for unit in units:
        out.append("//")
        for node in unit.inputs:
            out.extend(_object_lines(node))
        motion = ["M", unit.motion.label]
        if unit.motion.provenance:
            motion.append(unit.motion.provenance)
        if unit.motion.success_rate != 1.0:
            motion.append(_format_rate(unit.motion.success_rate))
        out.append(" ".join(motion))
        for node in unit.outputs:
            out.extend(_object_lines(node))
    return "".join(line + "\n" for line in out)


def serialize_kitchen(items) -> str:
    return "".join(line + "\n" for item in items for line in _object_lines(item))


def load_subgraph(path) -> List[FunctionalUnit]:
    path = Path(path)
    return parse_subgraph(path.read_text(encoding="utf-8"), source=str(path))


def load_kitchen(path) -> List[KitchenItem]:
    path = Path(path)
    return parse_kitchen(path.read_text(encoding="utf-8"), source=str(path))
