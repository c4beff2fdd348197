"""
Parsing annotations and merging a universal FOON
================================================

A subgraph file lists functional units separated by ``//``. Here we parse
the sweet tea annotation, look at the unit it describes, and merge it with
the breakfast network. The tea unit appears in both files, so the merge
drops one copy.
"""

from foonplan import fixtures, merge, parse_subgraph, serialize_subgraph

tea_text = fixtures.read_text("tea.foon")
print(tea_text)

# one functional unit: two objects go in, "stir" happens, three come out
tea = parse_subgraph(tea_text)
unit = tea[0]
print("inputs: ", [str(o) for o in unit.inputs])
print("motion: ", unit.motion)
print("outputs:", [str(o) for o in unit.outputs])

# serializing gives the canonical form (sorted states and ingredients)
print(serialize_subgraph(tea))

breakfast = parse_subgraph(fixtures.read_text("breakfast.foon"))
universal = merge([tea, breakfast])
print("%d + %d units -> %d merged, duplicates removed: %d"
      % (len(tea), len(breakfast), len(universal), universal.duplicates_removed))

# the creators index answers "which units make this object?"
for key, positions in list(universal.creators_index.items())[:5]:
    print(key, "<-", positions)
