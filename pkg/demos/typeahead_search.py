"""What the suggestion engine does with partial, messy, accented input.

Run from the repository root:

    python3 demos/typeahead_search.py
"""

from pathlib import Path

from georeverse import build_index, load_gazetteer_csv, match_query, normalize

data = Path(__file__).resolve().parent.parent / "data" / "fixture_a.csv"
g = load_gazetteer_csv(data)
index = build_index(g, g.leaf_level)

# Everything is compared in normalized form: lowercase, diacritics folded,
# whitespace collapsed.
for raw in ["Huánuco ", "SAN  Juan", "  pAmPaS  "]:
    print(f"normalize({raw!r}) = {normalize(raw)!r}")

print()

# Exact beats prefix beats substring; ties fall back to name, then code.
for query in ["pampas", "pam", "juan", "san juan", "pámpas"]:
    print(f"query {query!r}:")
    for c in match_query(index, query):
        trail = " / ".join(c.path.names())
        print(f"  #{c.rank}  {c.node.code}  {c.node.name:<15} {c.match_class:<10} {trail}")
    print()

# The homonym pair above is why every candidate carries its full path:
# two districts named San Juan are told apart by their provinces.
