"""Core FOON entities: object nodes, motion nodes and functional units.

All entities are frozen dataclasses. Construction normalizes whitespace in
names, states and ingredients and stores states/ingredients as sorted
tuples, so two nodes with the same canonical content compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Optional, Tuple

ObjectKey = tuple


def normalize_text(text: str) -> str:
    """Trim ``text`` and collapse internal whitespace runs to one space."""
    return " ".join(str(text).split())


def _canonical_set(items: Iterable[str], what: str) -> Tuple[str, ...]:
    if isinstance(items, str):
        items = [items]
    out = set()
    for item in items:
        norm = normalize_text(item)
        if not norm:
            raise ValueError("empty %s" % what)
        out.add(norm)
    return tuple(sorted(out))


class MotionFlag(IntEnum):
    IDLE = 0
    MOVING = 1


@dataclass(frozen=True)
class ObjectNode:
    name: str
    states: Tuple[str, ...]
    ingredients: Tuple[str, ...] = ()
    motion_flag: MotionFlag = MotionFlag.IDLE

    def __post_init__(self):
        name = normalize_text(self.name)
        if not name:
            raise ValueError("object name is empty")
        states = _canonical_set(self.states, "state")
        if not states:
            raise ValueError("object %r has no state" % name)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "ingredients", _canonical_set(self.ingredients, "ingredient"))
        object.__setattr__(self, "motion_flag", MotionFlag(int(self.motion_flag)))

    @property
    def key(self) -> ObjectKey:
        return object_key(self)

    def __str__(self):
        return format_key(object_key(self))


@dataclass(frozen=True)
class KitchenItem:
    """An available item. Carries no motion flag; matching ignores motion."""

    name: str
    states: Tuple[str, ...]
    ingredients: Tuple[str, ...] = ()

    def __post_init__(self):
        name = normalize_text(self.name)
        if not name:
            raise ValueError("kitchen item name is empty")
        states = _canonical_set(self.states, "state")
        if not states:
            raise ValueError("kitchen item %r has no state" % name)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "ingredients", _canonical_set(self.ingredients, "ingredient"))

    @property
    def key(self) -> ObjectKey:
        return object_key(self)

    def as_object(self, motion_flag=MotionFlag.IDLE) -> ObjectNode:
        return ObjectNode(self.name, self.states, self.ingredients, motion_flag)

    def __str__(self):
        return format_key(object_key(self))


@dataclass(frozen=True)
class MotionNode:
    label: str
    provenance: Optional[str] = None
    success_rate: float = 1.0

    def __post_init__(self):
        label = normalize_text(self.label)
        if not label:
            raise ValueError("motion label is empty")
        rate = float(self.success_rate)
        if not 0.0 <= rate <= 1.0:
            raise ValueError("success rate %r outside [0, 1]" % (self.success_rate,))
        provenance = normalize_text(self.provenance) if self.provenance is not None else None
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "success_rate", rate)
        object.__setattr__(self, "provenance", provenance or None)


@dataclass(frozen=True)
class FunctionalUnit:
    """Input objects joined to output objects through a single motion.

    ``source_ordinal`` records file or merge position and is excluded from
    equality; use :func:`unit_key` for duplicate detection.
    """

    inputs: Tuple[ObjectNode, ...]
    motion: MotionNode
    outputs: Tuple[ObjectNode, ...]
    source_ordinal: int = field(default=0, compare=False)

    def __post_init__(self):
        inputs = tuple(self.inputs)
        outputs = tuple(self.outputs)
        if not inputs:
            raise ValueError("functional unit has no input objects")
        if not outputs:
            raise ValueError("functional unit has no output objects")
        for node in inputs + outputs:
            if not isinstance(node, ObjectNode):
                raise TypeError("expected ObjectNode, got %r" % (node,))
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)

    @property
    def inputs_count(self) -> int:
        return len(self.inputs)

    @property
    def success_rate(self) -> float:
        return self.motion.success_rate

    def input_keys(self):
        return [object_key(n) for n in self.inputs]

    def output_keys(self):
        return [object_key(n) for n in self.outputs]

    def __str__(self):
        ins = ", ".join(str(n) for n in self.inputs)
        outs = ", ".join(str(n) for n in self.outputs)
        return "#%d %s: [%s] -> [%s]" % (self.source_ordinal, self.motion.label, ins, outs)


def object_key(node, include_flag: bool = False) -> ObjectKey:
    """Comparable identity of an object node or kitchen item.

    The motion flag is part of the key only when ``include_flag`` is set;
    kitchen matching and creator lookup leave it out, duplicate detection
    keeps it.
    """
    key = (node.name, tuple(node.states), tuple(node.ingredients))
    if include_flag:
        return key + (int(getattr(node, "motion_flag", 0)),)
    return key


def unit_key(unit: FunctionalUnit) -> tuple:
    ins = tuple(sorted(object_key(n, include_flag=True) for n in unit.inputs))
    outs = tuple(sorted(object_key(n, include_flag=True) for n in unit.outputs))
    return (ins, unit.motion.label, unit.motion.success_rate, outs)


def format_key(key: ObjectKey) -> str:
    """Render an object key as ``name/state,state{ingredient,...}``."""
    name, states, ingredients = key[:3]
    text = "%s/%s" % (name, ",".join(states))
    if ingredients:
        text += "{%s}" % ",".join(ingredients)
    return text
