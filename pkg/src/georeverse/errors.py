"""Exception types shared across the engine.

Every error carries a machine-readable ``code`` string (the class name
without the ``Error`` suffix).  The HTTP layer echoes that code verbatim in
JSON error bodies, so the strings here are part of the wire contract.
"""


class GeoReverseError(Exception):
    """Base class for all engine errors."""

    code = "Internal"


# --- data loading ---------------------------------------------------------

class EmptyInputError(GeoReverseError):
    """The row source contained no rows."""

    code = "EmptyInput"


class DuplicateCodeError(GeoReverseError):
    """Two rows carry the same code."""

    code = "DuplicateCode"


class OrphanNodeError(GeoReverseError):
    """A node's parent prefix is missing from the data set."""

    code = "OrphanNode"


class MalformedCodeError(GeoReverseError):
    """Code is not all digits, has odd length, or exceeds the depth."""

    code = "MalformedCode"


class BlankNameError(GeoReverseError):
    """A place name is empty after trimming."""

    code = "BlankName"


# --- lookups --------------------------------------------------------------

class UnknownCodeError(GeoReverseError):
    """The requested code does not exist in the gazetteer."""

    code = "UnknownCode"


class NotLeafError(GeoReverseError):
    """The code exists but is not at the deepest level."""

    code = "NotLeaf"


class QueryTooShortError(GeoReverseError):
    """The query normalizes to the empty string."""

    code = "QueryTooShort"


# --- cascade sessions -----------------------------------------------------

class EmptyGazetteerError(GeoReverseError):
    """No nodes available where at least one is required."""

    code = "EmptyGazetteer"


class InvalidChoiceError(GeoReverseError):
    """Selected code is not among the session's current options."""

    code = "InvalidChoice"


class SessionCompleteError(GeoReverseError):
    """Select was called on an already completed session."""

    code = "SessionComplete"


class IncompleteError(GeoReverseError):
    """The session has unselected levels left."""

    code = "Incomplete"


# --- bottom-up entry ------------------------------------------------------

class NoMatchesError(GeoReverseError):
    """The query produced zero suggestions."""

    code = "NoMatches"


class PickOutOfRangeError(GeoReverseError):
    """The picked index does not address any returned candidate."""

    code = "PickOutOfRange"


# --- benchmarking ---------------------------------------------------------

class TargetNotSuggestedError(GeoReverseError):
    """The typed prefix did not surface the target within the limit."""

    code = "TargetNotSuggested"


class ZeroBaselineError(GeoReverseError):
    """Comparison baseline must be positive."""

    code = "ZeroBaseline"
