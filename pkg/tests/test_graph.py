import random

from hypothesis import given, settings, strategies as st

from foonplan import FunctionalUnit, MotionNode, ObjectNode, creators_of, merge, object_key, serialize_subgraph, unit_key
from foonplan.graph import build_creators_index

from conftest import SWEET_TEA, obj
import netgen


def unit(ins, label, outs, rate=1.0):
    return FunctionalUnit(tuple(obj(n) for n in ins), MotionNode(label, None, rate),
                          tuple(obj(n) for n in outs))


def test_merge_single_sweet_tea(tea_foon):
    assert len(tea_foon) == 1
    expected = {
        object_key(ObjectNode("tea", ["sweetened tea"])): (0,),
        object_key(ObjectNode("tea cup", ["sweetened tea"], ["tea", "sugar"])): (0,),
        object_key(ObjectNode("spoon", ["dirty"])): (0,),
    }
    assert tea_foon.creators_index == expected


def test_merge_idempotent(tea_units):
    once = merge([tea_units])
    twice = merge([tea_units, tea_units])
    assert twice.units == once.units
    assert twice.creators_index == once.creators_index
    assert twice.duplicates_removed == 1


def test_merge_counts_shared_unit():
    shared = unit(["a"], "cut", ["b"])
    first = [shared, unit(["b"], "mix", ["c"]), unit(["c"], "heat", ["d"])]
    second = [unit(["x"], "cut", ["y"]), unit(["y"], "pour", ["z"]), shared, unit(["z"], "mix", ["w"])]
    foon = merge([first, second])
    # {shared, mix, heat} | {cut-x, pour, shared, mix-z} -> 6 distinct
    assert len(foon) == 6
    assert foon.duplicates_removed == 1
    assert [u.source_ordinal for u in foon.units] == list(range(6))


def test_creators_of(tea_foon):
    assert creators_of(tea_foon, SWEET_TEA) == [tea_foon.units[0]]
    assert creators_of(tea_foon, ObjectNode("tea", ["sweetened tea"], (), 1)) == [tea_foon.units[0]]
    assert creators_of(tea_foon, obj("unknown")) == []


def test_two_creators_in_merge_order():
    a = unit(["flour", "water"], "knead", ["dough/kneaded"])
    b = unit(["dough"], "knead", ["dough/kneaded"], 0.5)
    foon = merge([[a], [unit(["x"], "cut", ["y"]), b]])
    assert [u.source_ordinal for u in creators_of(foon, obj("dough/kneaded"))] == [0, 2]


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_merge_properties(seed):
    subgraphs = netgen.random_collection(seed)
    foon = merge(subgraphs)
    keys = [unit_key(u) for u in foon.units]
    assert len(set(keys)) == len(keys)
    assert build_creators_index(foon.units) == foon.creators_index
    again = merge([foon.units] + subgraphs)
    assert again.units == foon.units and again.creators_index == foon.creators_index
    assert serialize_subgraph(merge(subgraphs).units) == serialize_subgraph(foon.units)
    shuffled = list(subgraphs)
    random.Random(seed).shuffle(shuffled)
    assert set(map(unit_key, merge(shuffled).units)) == set(keys)
    for u in foon.units:
        for o in u.outputs:
            assert u in creators_of(foon, o)
