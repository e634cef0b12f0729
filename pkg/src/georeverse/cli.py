"""Command line front door: validate data, serve the API, search, benchmark.

Every subcommand loads the CSV fresh and fails fast on invalid data with a
diagnostic on stderr and a nonzero exit, so a broken file never reaches a
running server.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .benchmark import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_WARMUP,
    format_report,
    run_suite,
    write_csv,
)
from .errors import GeoReverseError
from .gazetteer import Gazetteer, load_gazetteer_csv
from .reverse import DEFAULT_SUGGESTION_LIMIT, suggest
from .search_index import build_index

DEFAULT_PORT = 8000
PORT_ENV_VAR = "GEO_REVERSE_PORT"


def _load(path: str) -> Gazetteer:
    return load_gazetteer_csv(path)


def _cmd_ingest(args: argparse.Namespace) -> int:
    gazetteer = _load(args.csv)
    counts = gazetteer.level_counts()
    breakdown = "  ".join(f"{name}={count}" for name, count in counts.items())
    print(f"ok: {len(gazetteer.nodes)} nodes  depth={gazetteer.depth}  {breakdown}")
    return 0


def _resolve_port(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    configured = os.environ.get(PORT_ENV_VAR)
    if configured:
        try:
            return int(configured)
        except ValueError:
            raise ValueError(f"{PORT_ENV_VAR} must be an integer, got {configured!r}")
    return DEFAULT_PORT


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service_api import create_app

    gazetteer = _load(args.data)
    port = _resolve_port(args.port)
    app = create_app(gazetteer, cors_any=args.cors_any)
    uvicorn.run(app, host=args.host, port=port)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    gazetteer = _load(args.data)
    index = build_index(gazetteer, gazetteer.leaf_level)
    for candidate in suggest(index, args.query, args.limit):
        trail = " / ".join(candidate.path.names())
        print(f"{candidate.node.code}  {candidate.node.name:<24} {candidate.match_class:<9} {trail}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    gazetteer = _load(args.data)
    report = run_suite(gazetteer, trials=args.trials, warmup=args.warmup, seed=args.seed)
    print(format_report(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            write_csv(report, handle)
        print(f"per-step statistics written to {args.out}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geo-reverse",
        description="Hierarchical gazetteer engine: cascade and reverse entry, API, benchmarks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    ingest = commands.add_parser("ingest", help="validate a gazetteer CSV and report counts")
    ingest.add_argument("csv", help="path to a code,name CSV")
    ingest.set_defaults(func=_cmd_ingest)

    serve = commands.add_parser("serve", help="serve the read-only JSON API")
    serve.add_argument("--data", required=True, help="path to a code,name CSV")
    serve.add_argument(
        "--port",
        type=int,
        default=None,
        help=f"listen port (falls back to ${PORT_ENV_VAR}, then {DEFAULT_PORT})",
    )
    serve.add_argument("--host", default="127.0.0.1", help="bind address")
    serve.add_argument(
        "--cors-any", action="store_true", help="allow any origin (dev UI served elsewhere)"
    )
    serve.set_defaults(func=_cmd_serve)

    search = commands.add_parser("search", help="print ranked suggestions for a query")
    search.add_argument("--data", required=True, help="path to a code,name CSV")
    search.add_argument("--limit", type=int, default=DEFAULT_SUGGESTION_LIMIT)
    search.add_argument("query")
    search.set_defaults(func=_cmd_search)

    bench = commands.add_parser("bench", help="run the paired latency suite")
    bench.add_argument("--data", required=True, help="path to a code,name CSV")
    bench.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    bench.add_argument("--warmup", type=int, default=DEFAULT_WARMUP)
    bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    bench.add_argument("--out", default=None, help="also write per-step stats as CSV")
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeoReverseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
