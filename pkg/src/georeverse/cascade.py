"""Top-down selection flow: one options query per level.

A session walks the hierarchy outermost-in, fetching the next level's
options after every pick, the way a chain of dependent dropdowns behaves.
Sessions are immutable values; ``select`` returns the advanced session and
leaves the original untouched, which keeps the query counter honest and
makes walks repeatable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    EmptyGazetteerError,
    IncompleteError,
    InvalidChoiceError,
    SessionCompleteError,
)
from .gazetteer import Gazetteer, LocationNode, ResolvedLocation


@dataclass(frozen=True, slots=True)
class CascadeSession:
    """State of one top-down walk in progress.

    ``query_count`` counts the children queries issued so far: one to open
    each options list, so it settles at the gazetteer depth exactly when
    the walk completes.
    """

    gazetteer: Gazetteer = field(repr=False)
    selections: tuple[str, ...]
    current_options: tuple[LocationNode, ...]
    query_count: int

    @property
    def complete(self) -> bool:
        return len(self.selections) >= self.gazetteer.depth


def start_session(gazetteer: Gazetteer) -> CascadeSession:
    """Open a session with the outermost level's options loaded."""
    options = tuple(gazetteer.children(None))
    if not options:
        raise EmptyGazetteerError("gazetteer has no outermost-level nodes")
    return CascadeSession(gazetteer, (), options, 1)


def select(session: CascadeSession, code: str) -> CascadeSession:
    """Pick one of the current options; fetch the next level if one exists."""
    if session.complete:
        raise SessionCompleteError("session already selected every level")
    if not any(option.code == code for option in session.current_options):
        raise InvalidChoiceError(f"code {code} is not among the current options")
    selections = session.selections + (code,)
    if len(selections) < session.gazetteer.depth:
        return CascadeSession(
            session.gazetteer,
            selections,
            tuple(session.gazetteer.children(code)),
            session.query_count + 1,
        )
    return CascadeSession(session.gazetteer, selections, (), session.query_count)


def selected_path(session: CascadeSession) -> ResolvedLocation:
    """The completed walk as a fully populated location."""
    if not session.complete:
        raise IncompleteError(
            f"only {len(session.selections)} of {session.gazetteer.depth} levels selected"
        )
    return session.gazetteer.resolved(session.selections[-1])
