"""
Comparing strategies across the bundled networks
================================================

``run_table`` runs every strategy on every goal and records the unit count
and median run time. The table makes it easy to spot goals where the
strategies agree and goals where they pick very different trees.
"""

from foonplan import fixtures, render_csv, render_table, run_table

for fx in fixtures.load_all():
    rows = run_table(fx.foon, fx.kitchen, fx.goals, repeats=5)
    print("==", fx.name, "(network of %d)" % len(fx.foon))
    print(render_table(rows))

# the same rows as CSV, ready for a spreadsheet
print(render_csv(rows))
