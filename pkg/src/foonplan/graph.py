"""Universal FOON: the duplicate-free union of many subgraphs."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Sequence, Tuple

from .model import FunctionalUnit, ObjectKey, object_key, unit_key


def build_creators_index(units: Sequence[FunctionalUnit]) -> Dict[ObjectKey, Tuple[int, ...]]:
    index: Dict[ObjectKey, List[int]] = {}
    for position, unit in enumerate(units):
        for key in dict.fromkeys(unit.output_keys()):
            index.setdefault(key, []).append(position)
    return {key: tuple(positions) for key, positions in index.items()}


@dataclass(frozen=True)
class UniversalFOON:
    """Merged functional units plus an index from object to creating units.

    ``creators_index`` is keyed by flag-excluded object keys and lists unit
    positions in merge order.
    """

    units: Tuple[FunctionalUnit, ...] = ()
    creators_index: Dict[ObjectKey, Tuple[int, ...]] = field(default_factory=dict, compare=False)
    duplicates_removed: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def creators(self, key: ObjectKey) -> List[FunctionalUnit]:
        return [self.units[i] for i in self.creators_index.get(key, ())]

    def object_keys(self):
        """Every flag-excluded object key mentioned by any unit, first-seen order."""
        seen = {}
        for unit in self.units:
            for key in unit.input_keys() + unit.output_keys():
                seen.setdefault(key, None)
        return list(seen)


def merge(subgraphs: Iterable[Iterable[FunctionalUnit]]) -> UniversalFOON:
    """Union of subgraphs in encounter order, dropping repeated units.

    Surviving units get their merged position as ``source_ordinal``.
    """
    seen = set()
    units = []
    dropped = 0
    for subgraph in subgraphs:
        for unit in subgraph:
            key = unit_key(unit)
            if key in seen:
                dropped += 1
                continue
            seen.add(key)
            units.append(replace(unit, source_ordinal=len(units)))
    return UniversalFOON(tuple(units), build_creators_index(units), dropped)


def creators_of(foon: UniversalFOON, goal) -> List[FunctionalUnit]:
    """Units whose outputs contain ``goal`` (motion flag ignored), merge order."""
    return foon.creators(object_key(goal))
