"""
Drawing a FOON with Graphviz
============================

``to_dot`` emits a DOT digraph: green input objects, red motions and blue
output-only objects. Pipe the text into ``dot -Tpng`` to render it.
"""

from foonplan import RetrievalQuery, fixtures, retrieve, to_dot

fx = fixtures.load("tea")
print(to_dot(fx.foon.units))

# the retrieved tree for pancakes, drawn on its own
breakfast = fixtures.load("breakfast")
pancake = next(g for g in breakfast.goals if g.name == "pancake")
tree = retrieve(breakfast.foon, RetrievalQuery(pancake, breakfast.kitchen, "h2"))
print(to_dot(tree.units, name="pancake"))
