"""
Retrieving task trees with three strategies
===========================================

Given a goal object and a kitchen inventory, each strategy picks a set of
functional units that builds the goal. Iterative deepening finds the
shallowest tree, heuristic 1 follows the most reliable units and heuristic
2 the units with fewest inputs, so they can disagree on tree size.
"""

from foonplan import RetrievalError, RetrievalQuery, Strategy, enumerate_trees, fixtures, retrieve, validate

fx = fixtures.load("salad")
greek = next(g for g in fx.goals if g.name == "greek salad")

for strategy in Strategy:
    tree = retrieve(fx.foon, RetrievalQuery(greek, fx.kitchen, strategy))
    print("%-10s %2d units  %s" % (strategy.value, len(tree), validate(tree, fx.kitchen).format()))
    for u in tree.units:
        print("    ", u.motion.label, "->", ", ".join(str(o) for o in u.outputs))

# every tree above is one of the feasible trees found by exhaustive search
oracle = enumerate_trees(fx.foon, fx.kitchen, greek)
print("feasible trees:", len(oracle), "sizes:", oracle.unit_counts(), "min depth:", oracle.min_depth)

# the breadth-first heuristics can commit to a cycle; in strict mode that is
# reported instead of returning a tree that cannot be executed
cyc = fixtures.load("cyclic")
for goal in cyc.goals:
    try:
        tree = retrieve(cyc.foon, RetrievalQuery(goal, cyc.kitchen, Strategy.HEURISTIC2))
        print(goal, "->", len(tree), "units")
    except RetrievalError as exc:
        print(goal, "->", exc)
