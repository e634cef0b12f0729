"""The same district entered both ways: three queries down, or two calls up.

The top-down flow selects region, then province, then district; every
selection costs one children query.  The bottom-up flow types part of the
district name, picks a suggestion, and recovers the whole chain from the
code with a single resolve.

Run from the repository root:

    python3 demos/two_entry_flows.py
"""

from pathlib import Path

from georeverse import (
    build_index,
    complete_entry,
    load_gazetteer_csv,
    select,
    selected_path,
    start_session,
)

data = Path(__file__).resolve().parent.parent / "data" / "fixture_a.csv"
g = load_gazetteer_csv(data)
index = build_index(g, g.leaf_level)

target = "020101"  # Pampas Verdes

print("top-down cascade:")
session = start_session(g)
for node in g.ancestors(target):
    options = ", ".join(f"{o.code} {o.name}" for o in session.current_options)
    print(f"  options: [{options}]")
    print(f"  pick {node.code}")
    session = select(session, node.code)
path = selected_path(session)
print(f"  done after {session.query_count} children queries: {' / '.join(path.names())}")

print("\nbottom-up reverse:")
entry = complete_entry(g, index, "pampas ver", 0)
print(f"  typed {entry.query!r}, suggestions:")
for c in entry.candidates:
    print(f"    #{c.rank} {c.node.name}  ({' / '.join(c.path.names()[:-1])})")
print(f"  picked #{entry.picked}")
print(f"  done after {entry.lookup_count} engine calls: {' / '.join(entry.resolved.names())}")

assert entry.resolved == path
print("\nboth flows produced the identical resolved location")
