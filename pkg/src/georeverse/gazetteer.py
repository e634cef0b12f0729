"""Hierarchical location data set: loading, validation, traversal.

Codes follow the two-digits-per-level convention used by Peru's Ubigeo
scheme: a region is ``"01"``, one of its provinces ``"0101"``, a district
inside that province ``"010101"``.  A node's whole ancestry is encoded in
its code prefixes, which is what makes bottom-up resolution a handful of
dictionary lookups.

Loading is two-pass (collect every row, then link parents), so row order in
the input never matters.  After ``load_gazetteer`` returns, the structure is
immutable and safe for unlimited concurrent readers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    BlankNameError,
    DuplicateCodeError,
    EmptyInputError,
    MalformedCodeError,
    OrphanNodeError,
    UnknownCodeError,
)

CODE_WIDTH_PER_LEVEL = 2
DEFAULT_DEPTH = 3
DEFAULT_LEVEL_NAMES = ("region", "province", "district")


@dataclass(frozen=True, slots=True)
class Level:
    """One rung of the hierarchy; ordinal 1 is the outermost level."""

    ordinal: int
    name: str


@dataclass(frozen=True, slots=True)
class LocationNode:
    """A single administrative unit."""

    code: str
    name: str
    level: Level
    parent_code: str | None


@dataclass(frozen=True, slots=True)
class ResolvedLocation:
    """A populated path of nodes, outermost first, ending at the target.

    Complete (one node per level of the gazetteer) whenever the target is a
    leaf; codes always form a prefix chain.
    """

    nodes: tuple[LocationNode, ...]

    @property
    def leaf(self) -> LocationNode:
        return self.nodes[-1]

    def codes(self) -> tuple[str, ...]:
        return tuple(n.code for n in self.nodes)

    def names(self) -> tuple[str, ...]:
        return tuple(n.name for n in self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Gazetteer:
    """Validated, immutable forest of location nodes keyed by code.

    ``children_codes`` is the integrity-checked child structure built at
    load time (parent code, or None for the outermost level, mapped to the
    ascending child codes).  The ``children`` query below deliberately does
    not read it; see its docstring.
    """

    nodes: Mapping[str, LocationNode]
    depth: int
    levels: tuple[Level, ...]
    children_codes: Mapping[str | None, tuple[str, ...]] = field(repr=False)

    @property
    def leaf_level(self) -> Level:
        return self.levels[-1]

    def level(self, ordinal: int) -> Level:
        if not 1 <= ordinal <= self.depth:
            raise ValueError(f"no level with ordinal {ordinal}")
        return self.levels[ordinal - 1]

    def nodes_at(self, level: Level | int) -> list[LocationNode]:
        """All nodes at one level, ascending by code."""
        ordinal = level.ordinal if isinstance(level, Level) else level
        found = [n for n in self.nodes.values() if n.level.ordinal == ordinal]
        found.sort(key=lambda n: n.code)
        return found

    def children(self, parent: str | None = None) -> list[LocationNode]:
        """Run the per-level retrieval query: nodes directly under ``parent``.

        This is the query the top-down flow issues once per selection level.
        It filters the node table on every call, the way the backing store
        of a cascading form answers "fetch the options for the next combo";
        its per-call cost is exactly what the cascade benchmark measures.
        ``parent=None`` lists the outermost level.  A leaf code yields [].
        """
        if parent is not None and parent not in self.nodes:
            raise UnknownCodeError(f"unknown code: {parent}")
        found = [n for n in self.nodes.values() if n.parent_code == parent]
        found.sort(key=lambda n: n.code)
        return found

    def ancestors(self, code: str) -> list[LocationNode]:
        """Path from the outermost ancestor down to ``code`` itself."""
        node = self.nodes.get(code)
        if node is None:
            raise UnknownCodeError(f"unknown code: {code}")
        w = CODE_WIDTH_PER_LEVEL
        return [self.nodes[code[: k * w]] for k in range(1, node.level.ordinal + 1)]

    def resolved(self, code: str) -> ResolvedLocation:
        return ResolvedLocation(tuple(self.ancestors(code)))

    def is_leaf(self, node: LocationNode) -> bool:
        return node.level.ordinal == self.depth

    def leaf_codes(self) -> list[str]:
        """Codes of every deepest-level node, ascending."""
        return [n.code for n in self.nodes_at(self.depth)]

    def level_counts(self) -> dict[str, int]:
        """Node count per level name, in level order."""
        counts = {lv.name: 0 for lv in self.levels}
        for node in self.nodes.values():
            counts[node.level.name] += 1
        return counts


def _make_levels(depth: int, level_names: tuple[str, ...] | None) -> tuple[Level, ...]:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if level_names is None:
        names = tuple(DEFAULT_LEVEL_NAMES[:depth])
        names += tuple(f"level{k}" for k in range(len(names) + 1, depth + 1))
    else:
        if len(level_names) != depth:
            raise ValueError("level_names must have one entry per level")
        names = tuple(level_names)
    return tuple(Level(k + 1, name) for k, name in enumerate(names))


def load_gazetteer(
    records: Iterable[tuple[str, str]],
    depth: int = DEFAULT_DEPTH,
    level_names: tuple[str, ...] | None = None,
) -> Gazetteer:
    """Build a validated gazetteer from (code, name) rows.

    Each node's level is inferred from its code length (two digits per
    level).  Rows may arrive in any order; the result is identical for any
    permutation of the same rows.

    Raises:
        EmptyInputError: no rows at all.
        MalformedCodeError: code not all ASCII digits, odd length, or
            longer than ``2 * depth``.
        BlankNameError: name empty after trimming.
        DuplicateCodeError: the same code appears twice.
        OrphanNodeError: a node whose parent prefix is missing.
    """
    levels = _make_levels(depth, level_names)
    w = CODE_WIDTH_PER_LEVEL

    staged: dict[str, tuple[str, str]] = {}
    for code, name in records:
        if not code.isascii() or not code.isdigit():
            raise MalformedCodeError(f"code is not all digits: {code!r}")
        if len(code) % w != 0:
            raise MalformedCodeError(f"code length is not a multiple of {w}: {code!r}")
        if len(code) > w * depth:
            raise MalformedCodeError(f"code deeper than {depth} levels: {code!r}")
        cleaned = name.strip()
        if not cleaned:
            raise BlankNameError(f"blank name for code {code}")
        if code in staged:
            raise DuplicateCodeError(f"duplicate code: {code}")
        staged[code] = (code, cleaned)
    if not staged:
        raise EmptyInputError("no rows to load")

    nodes: dict[str, LocationNode] = {}
    for code in sorted(staged):
        _, cleaned = staged[code]
        ordinal = len(code) // w
        parent = code[:-w] if ordinal > 1 else None
        nodes[code] = LocationNode(code, cleaned, levels[ordinal - 1], parent)

    children: dict[str | None, list[str]] = {None: []}
    for node in nodes.values():
        if node.parent_code is not None and node.parent_code not in nodes:
            raise OrphanNodeError(
                f"node {node.code} has no parent {node.parent_code} in the data set"
            )
        children.setdefault(node.code, [])
        children.setdefault(node.parent_code, []).append(node.code)

    children_codes = {parent: tuple(sorted(codes)) for parent, codes in children.items()}
    return Gazetteer(
        nodes=MappingProxyType(nodes),
        depth=depth,
        levels=levels,
        children_codes=MappingProxyType(children_codes),
    )


def load_gazetteer_csv(
    path: str | Path,
    depth: int = DEFAULT_DEPTH,
    level_names: tuple[str, ...] | None = None,
) -> Gazetteer:
    """Load a gazetteer from a UTF-8 CSV file with header ``code,name``."""
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise EmptyInputError(f"empty file: {path}")
        if [h.strip() for h in header] != ["code", "name"]:
            raise ValueError(f"expected header 'code,name', got {','.join(header)!r}")
        rows = [(row[0], row[1]) for row in reader if row]
    return load_gazetteer(rows, depth=depth, level_names=level_names)
