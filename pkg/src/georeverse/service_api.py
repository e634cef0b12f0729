"""Read-only HTTP JSON facade over the gazetteer engine.

Every endpoint is a pure projection of an engine operation onto JSON, so
identical requests against the same loaded data return byte-identical
bodies.  To keep that guarantee the handlers bypass framework
serialization and emit compact UTF-8 JSON themselves.

Data is loaded once at startup and never mutated, so concurrent request
handling needs no locks.  Engine errors map onto statuses as follows:
UnknownCode and NotLeaf are 404, QueryTooShort, PickOutOfRange and
InvalidChoice are 400, anything else is a 500.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from fastapi import FastAPI, Query, Request, Response

from .errors import GeoReverseError
from .gazetteer import Gazetteer, ResolvedLocation
from .reverse import DEFAULT_SUGGESTION_LIMIT, resolve, suggest
from .search_index import Candidate, build_index

_JSON_CONTENT_TYPE = "application/json; charset=utf-8"

_STATUS_BY_CODE = {
    "UnknownCode": 404,
    "NotLeaf": 404,
    "QueryTooShort": 400,
    "PickOutOfRange": 400,
    "InvalidChoice": 400,
}


@dataclass(frozen=True, slots=True)
class ApiError:
    """Wire form of an engine error."""

    http_status: int
    code: str
    message: str

    @classmethod
    def from_exception(cls, exc: GeoReverseError) -> "ApiError":
        return cls(_STATUS_BY_CODE.get(exc.code, 500), exc.code, str(exc))

    def payload(self) -> dict:
        return {"http_status": self.http_status, "code": self.code, "message": self.message}


def _json_response(payload: object, status_code: int = 200) -> Response:
    body = json.dumps(payload, separators=(",", ":"), ensure_ascii=False)
    return Response(
        content=body.encode("utf-8"),
        status_code=status_code,
        media_type=_JSON_CONTENT_TYPE,
    )


def _path_payload(resolved: ResolvedLocation) -> list[dict]:
    return [
        {"level": node.level.ordinal, "code": node.code, "name": node.name}
        for node in resolved
    ]


def _candidate_payload(candidate: Candidate) -> dict:
    return {
        "code": candidate.node.code,
        "name": candidate.node.name,
        "match_class": candidate.match_class,
        "path": _path_payload(candidate.path),
    }


def create_app(gazetteer: Gazetteer, cors_any: bool = False) -> FastAPI:
    """Build the service around an already validated gazetteer snapshot.

    ``cors_any`` opens the API to any origin for development against a
    separately served UI; the default leaves the browser's same-origin
    policy in charge.
    """
    app = FastAPI(title="geo-reverse", docs_url=None, redoc_url=None, openapi_url=None)
    index = build_index(gazetteer, gazetteer.leaf_level)

    if cors_any:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
        )

    def engine_error(request: Request, exc: GeoReverseError) -> Response:
        error = ApiError.from_exception(exc)
        return _json_response(error.payload(), error.http_status)

    app.add_exception_handler(GeoReverseError, engine_error)

    @app.get("/levels")
    def handle_levels() -> Response:
        payload = [
            {"ordinal": level.ordinal, "name": level.name} for level in gazetteer.levels
        ]
        return _json_response(payload)

    @app.get("/children")
    def handle_children(parent: str | None = None) -> Response:
        options = gazetteer.children(parent)
        return _json_response([{"code": node.code, "name": node.name} for node in options])

    @app.get("/search")
    def handle_search(
        q: str, limit: int = Query(default=DEFAULT_SUGGESTION_LIMIT, ge=1)
    ) -> Response:
        candidates = suggest(index, q, limit)
        return _json_response([_candidate_payload(candidate) for candidate in candidates])

    @app.get("/resolve/{code}")
    def handle_resolve(code: str) -> Response:
        return _json_response({"levels": _path_payload(resolve(gazetteer, code))})

    return app
