"""Bottom-up entry flow: type the leaf name, pick, auto-fill the ancestors.

The inverse of the cascade: instead of narrowing level by level, the user
types part of the deepest-level name, gets ranked suggestions (each carrying
its full ancestor path, so homonyms stay distinguishable), and one pick
populates every level at once.  A completed entry costs exactly two engine
calls: one suggest, one resolve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoMatchesError, NotLeafError, PickOutOfRangeError, UnknownCodeError
from .gazetteer import Gazetteer, ResolvedLocation
from .search_index import Candidate, SearchIndex, match_query

DEFAULT_SUGGESTION_LIMIT = 10


@dataclass(frozen=True, slots=True)
class ReverseEntryResult:
    """Outcome of one completed bottom-up entry."""

    query: str
    candidates: tuple[Candidate, ...]
    picked: int | None
    resolved: ResolvedLocation | None
    lookup_count: int


def suggest(index: SearchIndex, query: str, limit: int = DEFAULT_SUGGESTION_LIMIT) -> list[Candidate]:
    """Ranked leaf-level suggestions for partially typed text.

    Delegates to the index's match query; kept as its own operation because
    it is the first of the two engine calls a bottom-up entry pays for.
    """
    return match_query(index, query, limit)


def resolve(gazetteer: Gazetteer, code: str) -> ResolvedLocation:
    """Populate every level from a single leaf code."""
    node = gazetteer.nodes.get(code)
    if node is None:
        raise UnknownCodeError(f"unknown code: {code}")
    if not gazetteer.is_leaf(node):
        raise NotLeafError(f"code {code} is not at the leaf level")
    return gazetteer.resolved(code)


def complete_entry(
    gazetteer: Gazetteer,
    index: SearchIndex,
    query: str,
    pick: int,
    limit: int = DEFAULT_SUGGESTION_LIMIT,
) -> ReverseEntryResult:
    """Run the whole bottom-up flow: suggest, pick one candidate, resolve."""
    candidates = suggest(index, query, limit)
    if not candidates:
        raise NoMatchesError(f"no matches for query: {query!r}")
    if not 0 <= pick < len(candidates):
        raise PickOutOfRangeError(f"pick {pick} outside 0..{len(candidates) - 1}")
    resolved_location = resolve(gazetteer, candidates[pick].node.code)
    return ReverseEntryResult(
        query=query,
        candidates=tuple(candidates),
        picked=pick,
        resolved=resolved_location,
        lookup_count=2,
    )
