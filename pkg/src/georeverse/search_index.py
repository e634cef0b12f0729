"""Normalized-name string matching over one gazetteer level.

Matching is plain string matching, no fuzziness: a query hits a name when
the normalized query equals it (exact), starts it (prefix), or occurs
anywhere inside it (substring).  Results are ranked exact < prefix <
substring, then by normalized name, then by code, so a query always yields
the same list, byte for byte.

Internally the index keeps three structures per level: the sorted key table
(exact and prefix lookups by bisection), short n-gram postings (substring
candidates without scanning every key), and one prebuilt ancestor path per
code so every suggestion ships with its full hierarchy attached.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Mapping

from .errors import QueryTooShortError
from .gazetteer import Gazetteer, Level, LocationNode, ResolvedLocation

DEFAULT_LIMIT = 10

# Diacritics that occur in the place names this engine serves.  A fixed
# table, not a general Unicode algorithm, so results are bit-identical
# everywhere.  Uppercase input is lowercased before the table applies.
_FOLD = str.maketrans({
    "á": "a", "é": "e", "í": "i", "ó": "o", "ú": "u", "ü": "u", "ñ": "n",
})

# Match classes in rank order.
EXACT = "exact"
PREFIX = "prefix"
SUBSTRING = "substring"
MATCH_CLASSES = (EXACT, PREFIX, SUBSTRING)

# Longest n-gram length kept in the postings.  Queries longer than this use
# the postings of their rarest window and verify the rest.
_MAX_GRAM = 3


def normalize(text: str) -> str:
    """Lowercase, fold diacritics, collapse whitespace runs, trim."""
    folded = text.lower().translate(_FOLD)
    return " ".join(folded.split())


@dataclass(frozen=True, slots=True)
class Candidate:
    """One suggestion: a node, its full ancestor path, and how it matched."""

    node: LocationNode
    path: ResolvedLocation
    match_class: str
    rank: int


class SearchIndex:
    """Immutable name index over a single level of one gazetteer.

    Attributes:
        level: the indexed level.
        entries: normalized name -> ascending codes, keys in sorted order.
        gazetteer: the snapshot the index was built from.
    """

    def __init__(self, gazetteer: Gazetteer, level: Level) -> None:
        self.gazetteer = gazetteer
        self.level = level

        by_key: dict[str, list[str]] = {}
        for node in gazetteer.nodes_at(level):
            by_key.setdefault(normalize(node.name), []).append(node.code)
        self.entries: Mapping[str, tuple[str, ...]] = {
            key: tuple(sorted(by_key[key])) for key in sorted(by_key)
        }

        self._keys: tuple[str, ...] = tuple(self.entries)
        self._paths: dict[str, ResolvedLocation] = {
            code: gazetteer.resolved(code)
            for codes in self.entries.values()
            for code in codes
        }

        postings: dict[str, list[int]] = {}
        for i, key in enumerate(self._keys):
            seen: set[str] = set()
            for n in range(1, _MAX_GRAM + 1):
                for start in range(len(key) - n + 1):
                    gram = key[start : start + n]
                    if gram not in seen:
                        seen.add(gram)
                        postings.setdefault(gram, []).append(i)
        self._postings: dict[str, tuple[int, ...]] = {
            gram: tuple(idxs) for gram, idxs in postings.items()
        }

    def __len__(self) -> int:
        return sum(len(codes) for codes in self.entries.values())

    def _substring_key_indexes(self, query: str) -> tuple[int, ...]:
        """Indexes of keys that may contain ``query``, ascending, unverified."""
        if len(query) <= _MAX_GRAM:
            return self._postings.get(query, ())
        # A key containing the query contains every window of it; probe the
        # rarest window and verify the full query on those keys only.
        windows = [query[i : i + _MAX_GRAM] for i in range(len(query) - _MAX_GRAM + 1)]
        lists = [self._postings.get(wnd, ()) for wnd in windows]
        return min(lists, key=len)


def build_index(gazetteer: Gazetteer, level: Level | int) -> SearchIndex:
    """Index all nodes at ``level`` by normalized name.

    A level with zero nodes yields an empty index; queries against it
    return no candidates.
    """
    if isinstance(level, int):
        level = gazetteer.level(level)
    return SearchIndex(gazetteer, level)


def match_query(index: SearchIndex, query: str, limit: int = DEFAULT_LIMIT) -> list[Candidate]:
    """Ranked candidates whose normalized name matches the normalized query.

    Ordering is (match class: exact < prefix < substring, then normalized
    name ascending, then code ascending), truncated to ``limit``.

    Raises:
        QueryTooShortError: the query normalizes to the empty string.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    nq = normalize(query)
    if not nq:
        raise QueryTooShortError("query is empty after normalization")

    nodes = index.gazetteer.nodes
    out: list[Candidate] = []

    def emit(code: str, match_class: str) -> bool:
        out.append(Candidate(nodes[code], index._paths[code], match_class, len(out)))
        return len(out) >= limit

    for code in index.entries.get(nq, ()):
        if emit(code, EXACT):
            return out

    keys = index._keys
    pos = bisect_left(keys, nq)
    while pos < len(keys) and keys[pos].startswith(nq):
        if keys[pos] != nq:
            for code in index.entries[keys[pos]]:
                if emit(code, PREFIX):
                    return out
        pos += 1

    for i in index._substring_key_indexes(nq):
        key = keys[i]
        if nq in key and not key.startswith(nq):
            for code in index.entries[key]:
                if emit(code, SUBSTRING):
                    return out
    return out
