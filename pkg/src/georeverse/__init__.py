"""Hierarchical gazetteer lookup two ways.

A gazetteer of Ubigeo-style codes (two digits per administrative level)
can be filled in top-down, one cascading children query per level, or
bottom-up: type the deepest-level name, pick a suggestion, and recover
every ancestor from the code alone.  This package implements both flows
over one immutable in-memory snapshot, plus a search index with exact,
prefix and substring ranking, a paired latency benchmark, a read-only
JSON API, and a `geo-reverse` command line front door.
"""

from .benchmark import (
    BenchmarkReport,
    ComparisonResult,
    PairedSample,
    TimingSample,
    compare,
    format_report,
    run_cascade_trial,
    run_reverse_trial,
    run_suite,
)
from .cascade import CascadeSession, select, selected_path, start_session
from .errors import (
    BlankNameError,
    DuplicateCodeError,
    EmptyGazetteerError,
    EmptyInputError,
    GeoReverseError,
    IncompleteError,
    InvalidChoiceError,
    MalformedCodeError,
    NoMatchesError,
    NotLeafError,
    OrphanNodeError,
    PickOutOfRangeError,
    QueryTooShortError,
    SessionCompleteError,
    TargetNotSuggestedError,
    UnknownCodeError,
    ZeroBaselineError,
)
from .gazetteer import (
    Gazetteer,
    Level,
    LocationNode,
    ResolvedLocation,
    load_gazetteer,
    load_gazetteer_csv,
)
from .reverse import ReverseEntryResult, complete_entry, resolve, suggest
from .search_index import Candidate, SearchIndex, build_index, match_query, normalize
from .service_api import ApiError, create_app
from .synthetic import generate_records, synthetic_gazetteer

__version__ = "0.1.0"

__all__ = [
    "BenchmarkReport",
    "ComparisonResult",
    "PairedSample",
    "TimingSample",
    "compare",
    "format_report",
    "run_cascade_trial",
    "run_reverse_trial",
    "run_suite",
    "CascadeSession",
    "select",
    "selected_path",
    "start_session",
    "BlankNameError",
    "DuplicateCodeError",
    "EmptyGazetteerError",
    "EmptyInputError",
    "GeoReverseError",
    "IncompleteError",
    "InvalidChoiceError",
    "MalformedCodeError",
    "NoMatchesError",
    "NotLeafError",
    "OrphanNodeError",
    "PickOutOfRangeError",
    "QueryTooShortError",
    "SessionCompleteError",
    "TargetNotSuggestedError",
    "UnknownCodeError",
    "ZeroBaselineError",
    "Gazetteer",
    "Level",
    "LocationNode",
    "ResolvedLocation",
    "load_gazetteer",
    "load_gazetteer_csv",
    "ReverseEntryResult",
    "complete_entry",
    "resolve",
    "suggest",
    "Candidate",
    "SearchIndex",
    "build_index",
    "match_query",
    "normalize",
    "ApiError",
    "create_app",
    "generate_records",
    "synthetic_gazetteer",
    "__version__",
]
