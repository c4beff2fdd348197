"""Random small networks for property and acceptance tests."""
import random

from foonplan import FunctionalUnit, KitchenItem, MotionNode, ObjectNode

RATES = (0.25, 0.5, 0.75, 0.9, 1.0)


def random_objects(rng, count):
    return [ObjectNode("o%d" % i, ["s"], (), rng.randint(0, 1)) for i in range(count)]


def random_unit(rng, objects, max_inputs=3, max_outputs=2):
    inputs = rng.sample(objects, rng.randint(1, min(max_inputs, len(objects))))
    outputs = rng.sample(objects, rng.randint(1, min(max_outputs, len(objects))))
    # re-roll flags so the same object can appear moving in one unit and idle in another
    outputs = [ObjectNode(o.name, o.states, o.ingredients, rng.randint(0, 1)) for o in outputs]
    motion = MotionNode(rng.choice(["cut", "mix", "pour", "heat"]), None, rng.choice(RATES))
    return FunctionalUnit(tuple(inputs), motion, tuple(outputs))


def random_network(seed, max_units=12, max_objects=8):
    """Return ``(units, kitchen, goal)``; may contain cycles and self loops."""
    rng = random.Random(seed)
    objects = random_objects(rng, rng.randint(2, max_objects))
    units = [random_unit(rng, objects) for _ in range(rng.randint(1, max_units))]
    kitchen_objects = rng.sample(objects, rng.randint(1, max(1, len(objects) // 2)))
    kitchen = tuple(KitchenItem(o.name, o.states) for o in kitchen_objects)
    goal = rng.choice(objects)
    return units, kitchen, ObjectNode(goal.name, goal.states)


def random_collection(seed, max_subgraphs=4):
    """Subgraphs drawn from a shared unit pool, so duplicates are common."""
    rng = random.Random(seed)
    objects = random_objects(rng, rng.randint(2, 6))
    pool = [random_unit(rng, objects) for _ in range(rng.randint(1, 8))]
    return [[rng.choice(pool) for _ in range(rng.randint(0, 6))]
            for _ in range(rng.randint(1, max_subgraphs))]
