"""Bundled example networks with their kitchens and goal lists.

Each fixture ``name`` ships as ``name.foon`` (subgraph), ``name.kitchen``
and ``name.goals``; goal files use the kitchen format, one object per goal.
"""
from __future__ import annotations

from importlib import resources
from typing import NamedTuple, Tuple

from .graph import UniversalFOON, merge
from .model import KitchenItem, ObjectNode
from .parser import parse_kitchen, parse_subgraph

NAMES = ("tea", "salad", "breakfast", "dessert", "cyclic")


class Fixture(NamedTuple):
    name: str
    foon: UniversalFOON
    kitchen: Tuple[KitchenItem, ...]
    goals: Tuple[ObjectNode, ...]


def fixture_path(filename: str):
    return resources.files(__package__).joinpath("data", filename)


def read_text(filename: str) -> str:
    return fixture_path(filename).read_text(encoding="utf-8")


def load(name: str) -> Fixture:
    units = parse_subgraph(read_text(name + ".foon"), source=name + ".foon")
    kitchen = parse_kitchen(read_text(name + ".kitchen"), source=name + ".kitchen")
    goals = parse_kitchen(read_text(name + ".goals"), source=name + ".goals")
    return Fixture(name, merge([units]), tuple(kitchen), tuple(g.as_object() for g in goals))


def load_all():
    return [load(name) for name in NAMES]
