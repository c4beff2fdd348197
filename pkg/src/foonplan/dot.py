"""Graphviz DOT rendering of a FOON.

Objects become ellipses (one per distinct object, motion flag ignored) and
each functional unit gets its own square motion node. Objects used as an
input anywhere are filled green, objects that only appear as outputs blue,
and motions red.
"""
from __future__ import annotations

from .model import object_key

INPUT_FILL = "green"
OUTPUT_FILL = "blue"
MOTION_FILL = "red"


def _quote(text: str) -> str:
    return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')


def _object_label(node) -> str:
    # \n is the DOT line-break escape; written raw after quoting the parts
    return _quote(node.name)[:-1] + "\\n" + _quote(",".join(node.states))[1:]


def to_dot(units, name: str = "foon") -> str:
    units = list(units)
    object_ids, nodes = {}, {}
    consumed = set()
    for unit in units:
        for node in unit.inputs:
            consumed.add(object_key(node))
        for node in unit.inputs + unit.outputs:
            key = object_key(node)
            if key not in object_ids:
                object_ids[key] = "o%d" % len(object_ids)
                nodes[key] = node

    lines = ["digraph %s {" % _quote(name)]
    for key, oid in object_ids.items():
        fill = INPUT_FILL if key in consumed else OUTPUT_FILL
        lines.append("  %s [shape=ellipse, style=filled, fillcolor=%s, label=%s];"
                     % (oid, fill, _object_label(nodes[key])))
    for i, unit in enumerate(units):
        lines.append("  m%d [shape=square, style=filled, fillcolor=%s, label=%s];"
                     % (i, MOTION_FILL, _quote(unit.motion.label)))
    for i, unit in enumerate(units):
        for node in unit.inputs:
            lines.append("  %s -> m%d;" % (object_ids[object_key(node)], i))
        for node in unit.outputs:
            lines.append("  m%d -> %s;" % (i, object_ids[object_key(node)]))
    lines.append("}")
    return "\n".join(lines) + "\n"
