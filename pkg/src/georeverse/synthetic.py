"""Deterministic synthetic gazetteers for benchmarks and demos.

Names are composed from a fixed syllable table driven by a running counter,
so the same shape always yields byte-identical records and every node name
is unique.  The default shape (25 regions x 8 provinces x 9 districts,
1,800 leaves) is a desk-scale stand-in for a national Ubigeo table.
"""

from __future__ import annotations

import csv
from typing import Iterator

from .gazetteer import Gazetteer, load_gazetteer

DEFAULT_SHAPE = (25, 8, 9)

_SYLLABLES = (
    "ba", "ca", "du", "fe", "go", "hua", "ji", "ka", "li", "mo",
    "na", "pa", "qui", "ro", "sa", "tu", "ve", "wi", "ya", "zo",
)
_EPITHETS = ("Alta", "Baja", "Norte", "Sur", "Nueva", "Grande")


def _name(counter: int) -> str:
    base = len(_SYLLABLES)
    word = (
        _SYLLABLES[counter % base]
        + _SYLLABLES[(counter // base) % base]
        + _SYLLABLES[(counter // (base * base)) % base]
    ).capitalize()
    # every third name gets a second word so multi-word queries occur
    if counter % 3 == 2:
        word += " " + _EPITHETS[counter % len(_EPITHETS)]
    return word


def generate_records(shape: tuple[int, ...] = DEFAULT_SHAPE) -> Iterator[tuple[str, str]]:
    """Yield (code, name) rows for a full tree of the given shape.

    ``shape`` gives the branching factor per level, each between 1 and 99.
    """
    if not shape:
        raise ValueError("shape must name at least one level")
    if any(not 1 <= width <= 99 for width in shape):
        raise ValueError("branching factors must be in 1..99")

    counter = 0

    def walk(prefix: str, level: int) -> Iterator[tuple[str, str]]:
        nonlocal counter
        for ordinal in range(1, shape[level] + 1):
            code = f"{prefix}{ordinal:02d}"
            yield code, _name(counter)
            counter += 1
            if level + 1 < len(shape):
                yield from walk(code, level + 1)

    yield from walk("", 0)


def synthetic_gazetteer(shape: tuple[int, ...] = DEFAULT_SHAPE) -> Gazetteer:
    return load_gazetteer(generate_records(shape), depth=len(shape))


def write_csv(path: str, shape: tuple[int, ...] = DEFAULT_SHAPE) -> int:
    """Write the synthetic records as a code,name CSV; returns the row count."""
    rows = 0
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["code", "name"])
        for record in generate_records(shape):
            writer.writerow(record)
            rows += 1
    return rows
