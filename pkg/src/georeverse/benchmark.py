"""Latency comparison of the two retrieval strategies.

What is timed is engine-side retrieval work only: the per-level children
query for the top-down cascade (three queries on depth-3 data) and the
suggest + resolve pair for the bottom-up flow.  Selection itself, human
think-time, and transport are out of scope.  Durations are captured from a
monotonic clock at microsecond resolution and reported in milliseconds.

Trials are paired: both strategies run against the same target leaf, chosen
by a seeded generator, so target choice never confounds the comparison.
Median is the headline statistic (p95 alongside) because it resists
scheduler noise.  The suite runs strictly single-threaded.

The module also carries the published 2016 reference figures for this
comparison (91 ms top-down, 37 ms bottom-up, 54 ms saved, 59% reduction).
Reports print them as a clearly labeled reference row, never as measured
output; they came from very different hardware.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from statistics import median
from typing import IO, Sequence

from .errors import (
    EmptyGazetteerError,
    NotLeafError,
    TargetNotSuggestedError,
    UnknownCodeError,
    ZeroBaselineError,
)
from .gazetteer import Gazetteer
from .reverse import resolve, suggest
from .search_index import SearchIndex, build_index, normalize

CASCADE = "cascade"
REVERSE = "reverse"

DEFAULT_TRIALS = 1000
DEFAULT_WARMUP = 100
DEFAULT_SEED = 7
DEFAULT_TYPED_PREFIX_LEN = 3
DEFAULT_SUGGESTION_LIMIT = 10

# Published 2016 reference figures (milliseconds) for the same comparison,
# printed alongside reports as a labeled reference row only.
REFERENCE_CASCADE_MS = 91
REFERENCE_REVERSE_MS = 37
REFERENCE_SAVED_MS = 54
REFERENCE_REDUCTION_PCT = 59

CSV_HEADER = ("strategy", "step", "median_us", "p95_us")


@dataclass(frozen=True, slots=True)
class TimingSample:
    """One trial: ordered (label, microseconds) steps for one strategy."""

    strategy: str
    steps: tuple[tuple[str, float], ...]

    @property
    def total(self) -> float:
        return sum(duration for _, duration in self.steps)


@dataclass(frozen=True, slots=True)
class PairedSample:
    """Both strategies measured against the same target leaf."""

    target: str
    cascade: TimingSample
    reverse: TimingSample


@dataclass(frozen=True, slots=True)
class StepStats:
    label: str
    median_us: float
    p95_us: float


@dataclass(frozen=True, slots=True)
class StrategyStats:
    strategy: str
    steps: tuple[StepStats, ...]
    total: StepStats


@dataclass(frozen=True, slots=True)
class ComparisonResult:
    """Absolute and relative saving of the candidate over the baseline."""

    baseline_total: float
    candidate_total: float
    saved: float
    reduction_pct: int


@dataclass(frozen=True, slots=True)
class BenchmarkReport:
    """Suite outcome; statistics are recomputable from ``samples``."""

    level_counts: dict[str, int]
    trials: int
    warmup: int
    seed: int
    samples: tuple[PairedSample, ...]
    cascade_stats: StrategyStats
    reverse_stats: StrategyStats
    comparison: ComparisonResult


def _now_us() -> float:
    return time.perf_counter_ns() / 1000.0


def _percentile_95(values: Sequence[float]) -> float:
    """Nearest-rank 95th percentile."""
    ordered = sorted(values)
    rank = max(1, -(-len(ordered) * 95 // 100))  # ceil without floats
    return ordered[rank - 1]


def run_cascade_trial(gazetteer: Gazetteer, target: str) -> TimingSample:
    """Time the children query behind each level of a top-down walk to ``target``.

    One step per level, labeled with the level name.  Picking an option is
    free; only the query that populates the options list is timed.
    """
    node = gazetteer.nodes.get(target)
    if node is None:
        raise UnknownCodeError(f"unknown code: {target}")
    if not gazetteer.is_leaf(node):
        raise NotLeafError(f"code {target} is not at the leaf level")

    steps: list[tuple[str, float]] = []
    parent: str | None = None
    for waypoint in gazetteer.ancestors(target):
        began = _now_us()
        gazetteer.children(parent)
        steps.append((waypoint.level.name, _now_us() - began))
        parent = waypoint.code
    return TimingSample(CASCADE, tuple(steps))


def run_reverse_trial(
    gazetteer: Gazetteer,
    index: SearchIndex,
    target: str,
    typed_prefix_len: int,
    limit: int = DEFAULT_SUGGESTION_LIMIT,
) -> TimingSample:
    """Time one bottom-up entry: suggest on a typed prefix, then resolve.

    The query is the first ``typed_prefix_len`` characters of the target's
    normalized name.  The trial is valid only if that query surfaces the
    target within ``limit`` suggestions.

    Raises:
        TargetNotSuggestedError: prefix too ambiguous for the limit; the
            caller must raise the limit or type more characters.
    """
    node = gazetteer.nodes.get(target)
    if node is None:
        raise UnknownCodeError(f"unknown code: {target}")
    if not gazetteer.is_leaf(node):
        raise NotLeafError(f"code {target} is not at the leaf level")
    name = normalize(node.name)
    if typed_prefix_len < 1:
        raise ValueError("typed_prefix_len must be >= 1")
    if typed_prefix_len > len(name):
        raise ValueError(f"typed_prefix_len exceeds name length {len(name)}")
    typed = name[:typed_prefix_len]

    began = _now_us()
    candidates = suggest(index, typed, limit)
    suggest_us = _now_us() - began
    if all(candidate.node.code != target for candidate in candidates):
        raise TargetNotSuggestedError(
            f"{target} not within the top {limit} suggestions for {typed!r}"
        )

    began = _now_us()
    resolve(gazetteer, target)
    resolve_us = _now_us() - began
    return TimingSample(REVERSE, (("suggest", suggest_us), ("resolve", resolve_us)))


def compare(baseline_total: float, candidate_total: float) -> ComparisonResult:
    """Exact saving and half-up-rounded percent reduction of the candidate."""
    if baseline_total <= 0:
        raise ZeroBaselineError("baseline total must be positive")
    saved = baseline_total - candidate_total
    pct = Decimal(100.0 * saved / baseline_total).quantize(Decimal("1"), rounding=ROUND_HALF_UP)
    return ComparisonResult(baseline_total, candidate_total, saved, int(pct))


def _reverse_trial_typing_more(
    gazetteer: Gazetteer,
    index: SearchIndex,
    target: str,
    typed_prefix_len: int,
    limit: int,
) -> TimingSample:
    """Run a reverse trial, typing one more character whenever the prefix
    is too ambiguous to surface the target."""
    name_len = len(normalize(gazetteer.nodes[target].name))
    length = min(typed_prefix_len, name_len)
    while True:
        try:
            return run_reverse_trial(gazetteer, index, target, length, limit)
        except TargetNotSuggestedError:
            if length >= name_len:
                raise
            length += 1


def _strategy_stats(strategy: str, samples: Sequence[TimingSample]) -> StrategyStats:
    labels = [label for label, _ in samples[0].steps]
    per_step = []
    for position, label in enumerate(labels):
        durations = [sample.steps[position][1] for sample in samples]
        per_step.append(StepStats(label, median(durations), _percentile_95(durations)))
    totals = [sample.total for sample in samples]
    return StrategyStats(
        strategy=strategy,
        steps=tuple(per_step),
        total=StepStats("total", median(totals), _percentile_95(totals)),
    )


def run_suite(
    gazetteer: Gazetteer,
    trials: int = DEFAULT_TRIALS,
    warmup: int = DEFAULT_WARMUP,
    seed: int = DEFAULT_SEED,
    typed_prefix_len: int = DEFAULT_TYPED_PREFIX_LEN,
    limit: int = DEFAULT_SUGGESTION_LIMIT,
) -> BenchmarkReport:
    """Run paired trials over seeded random leaves and aggregate statistics.

    Draws ``warmup + trials`` leaves uniformly (with replacement) from a
    generator seeded with ``seed``, runs both strategies on each, and
    discards the warmup iterations.  The leaf sequence is deterministic for
    a given seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if warmup < 0:
        raise ValueError("warmup must be >= 0")
    leaves = gazetteer.leaf_codes()
    if not leaves:
        raise EmptyGazetteerError("gazetteer has no leaf nodes to sample")
    index = build_index(gazetteer, gazetteer.leaf_level)

    rng = random.Random(seed)
    targets = [rng.choice(leaves) for _ in range(warmup + trials)]

    samples: list[PairedSample] = []
    for position, target in enumerate(targets):
        cascade_sample = run_cascade_trial(gazetteer, target)
        reverse_sample = _reverse_trial_typing_more(
            gazetteer, index, target, typed_prefix_len, limit
        )
        if position >= warmup:
            samples.append(PairedSample(target, cascade_sample, reverse_sample))

    cascade_stats = _strategy_stats(CASCADE, [s.cascade for s in samples])
    reverse_stats = _strategy_stats(REVERSE, [s.reverse for s in samples])
    return BenchmarkReport(
        level_counts=gazetteer.level_counts(),
        trials=trials,
        warmup=warmup,
        seed=seed,
        samples=tuple(samples),
        cascade_stats=cascade_stats,
        reverse_stats=reverse_stats,
        comparison=compare(cascade_stats.total.median_us, reverse_stats.total.median_us),
    )


def write_csv(report: BenchmarkReport, out: IO[str]) -> None:
    """Emit per-step medians and p95s as strategy,step,median_us,p95_us rows."""
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for stats in (report.cascade_stats, report.reverse_stats):
        for step in (*stats.steps, stats.total):
            writer.writerow(
                [stats.strategy, step.label, f"{step.median_us:.3f}", f"{step.p95_us:.3f}"]
            )


def format_report(report: BenchmarkReport) -> str:
    """Human-readable tables, one block per strategy, plus the comparison
    line and the labeled published-reference row."""
    lines: list[str] = []
    counts = "  ".join(f"{name}={count}" for name, count in report.level_counts.items())
    lines.append(
        f"nodes: {counts}   trials={report.trials} warmup={report.warmup} seed={report.seed}"
    )
    titles = {CASCADE: "top-down cascade", REVERSE: "bottom-up reverse"}
    for stats in (report.cascade_stats, report.reverse_stats):
        lines.append(f"{titles[stats.strategy]}:")
        for step in (*stats.steps, stats.total):
            label = "TOTAL" if step.label == "total" else step.label
            lines.append(
                f"  {label:<12} median {step.median_us / 1000.0:9.3f} ms"
                f"   p95 {step.p95_us / 1000.0:9.3f} ms"
            )
    saved_ms = report.comparison.saved / 1000.0
    lines.append(
        f"comparison (median totals): saved={saved_ms:.3f}ms"
        f" reduction={report.comparison.reduction_pct}%"
    )
    lines.append(
        "reference (published 2016 figures, not measured here): "
        f"cascade {REFERENCE_CASCADE_MS} ms, reverse {REFERENCE_REVERSE_MS} ms, "
        f"saved={REFERENCE_SAVED_MS}ms reduction={REFERENCE_REDUCTION_PCT}%"
    )
    return "\n".join(lines)
