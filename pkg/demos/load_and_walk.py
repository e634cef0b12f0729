"""Load a gazetteer CSV and walk it every way the engine allows.

Run from the repository root:

    python3 demos/load_and_walk.py
"""

from pathlib import Path

from georeverse import load_gazetteer_csv

data = Path(__file__).resolve().parent.parent / "data" / "fixture_a.csv"
g = load_gazetteer_csv(data)

print(f"loaded {len(g.nodes)} nodes, depth {g.depth}")
for level in g.levels:
    print(f"  level {level.ordinal}: {level.name}  ({len(g.nodes_at(level))} nodes)")

# Children queries are what a cascading form issues, one per level.
print("\ntop level options:")
for node in g.children():
    print(f"  {node.code}  {node.name}")

print("\ninside region 01:")
for node in g.children("01"):
    print(f"  {node.code}  {node.name}")

# The code alone carries the whole chain: two digits per level.
print("\nancestor chain of 010201:")
for node in g.ancestors("010201"):
    print(f"  {node.code:<8} {node.level.name:<10} {node.name}")

resolved = g.resolved("020101")
print(f"\nresolved('020101') -> {' / '.join(resolved.names())}")
print(f"codes form a prefix chain: {resolved.codes()}")
