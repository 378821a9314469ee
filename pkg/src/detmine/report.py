"""Candidate filters, the ranked determinant report, score-distribution
summaries and deterministic file export.

Filters applied to a scored table, in one conjunction:

    term is a lexicon member
    b strictly above ``b_min`` (default 0.5)
    a strictly above the score at the configured percentile (default 75)

The percentile threshold is always computed over the a-scores of the
full term universe, by the nearest-rank method: sort ascending and take
the element at 1-based index ceil(p/100 * n).

All writers produce byte-identical output for identical inputs: fixed
column order, ``\\n`` line endings, floats with 6 decimal places, JSON
with sorted keys.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from statistics import NormalDist
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .lexicon import Lexicon
from .scoring import ScoreTable, TermStats

__all__ = [
    "FilterConfig",
    "DeterminantReport",
    "ScoreDistribution",
    "percentile_threshold",
    "filter_candidates",
    "distribution_summary",
    "emit_report",
    "write_report_csv",
    "write_report_json",
    "write_distribution_csv",
    "write_distribution_summary_json",
    "write_distribution_json",
    "write_qq_csv",
    "write_tfidf_comparison_csv",
    "write_tfidf_comparison_json",
]

REPORT_COLUMNS = ("term", "a_score", "b_score", "dist", "n_pos", "n_total", "doc_count_pos")
COMPARISON_COLUMNS = ("term", "mean_rank_cp", "mean_rank_cn")

# The threshold percentile is always taken over the full universe of
# a-scores, never over an already-filtered subset.
PERCENTILE_UNIVERSE = "all_of_B"


@dataclass(frozen=True)
class FilterConfig:
    percentile: float = 75.0
    b_min: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.percentile < 100.0:
            raise ValidationError("percentile must be in (0, 100)")


@dataclass(frozen=True)
class DeterminantReport:
    """Filtered rows sorted by descending a then ascending term."""

    threshold_value: float
    universe_size: int
    rows: tuple[TermStats, ...]


@dataclass(frozen=True)
class ScoreDistribution:
    count: int
    mean: float
    sd: float  # population standard deviation
    histogram: tuple[tuple[float, int], ...]  # (bin lower edge, count)
    percentiles: dict[float, float]
    qq: tuple[tuple[float, float], ...]  # (theoretical, empirical)


def percentile_threshold(scores: Sequence[float], p: float) -> float:
    """Nearest-rank percentile: the sorted element at 1-based index
    ceil(p/100 * n)."""
    if not scores:
        raise ValidationError("percentile of an empty score list is undefined")
    if not 0.0 < p < 100.0:
        raise ValidationError("percentile must be in (0, 100)")
    ordered = sorted(scores)
    idx = math.ceil(p * len(ordered) / 100.0)
    return ordered[idx - 1]


def filter_candidates(
    table: ScoreTable, lexicon: Lexicon, cfg: FilterConfig = FilterConfig()
) -> DeterminantReport:
    """Apply the three candidate filters and rank what survives."""
    if not table.stats:
        raise ValidationError("cannot filter an empty score table")
    threshold = percentile_threshold(table.a_scores(), cfg.percentile)
    rows = [
        ts
        for ts in table.stats.values()
        if ts.a > threshold and ts.b > cfg.b_min and ts.term in lexicon
    ]
    rows.sort(key=lambda ts: (-ts.a, ts.term))
    return DeterminantReport(
        threshold_value=threshold, universe_size=len(table.stats), rows=tuple(rows)
    )


def distribution_summary(
    table: ScoreTable,
    bins: int = 20,
    percentiles: Sequence[float] = (25.0, 50.0, 75.0),
) -> ScoreDistribution:
    """Summarize the a-score distribution: mean, population sd,
    equal-width histogram over [0, 1], nearest-rank percentiles, and
    normal Q-Q pairs at probability points (i - 0.5) / n."""
    if not table.stats:
        raise ValidationError("cannot summarize an empty score table")
    if bins < 1:
        raise ValidationError("bins must be >= 1")
    scores = np.asarray(table.a_scores(), dtype=np.float64)
    mean = float(scores.mean())
    sd = float(scores.std())
    counts, edges = np.histogram(scores, bins=bins, range=(0.0, 1.0))
    ordered = np.sort(scores)
    n = len(ordered)
    inv_cdf = NormalDist().inv_cdf
    qq = tuple(
        (mean + sd * inv_cdf((i - 0.5) / n), float(ordered[i - 1]))
        for i in range(1, n + 1)
    )
    return ScoreDistribution(
        count=n,
        mean=mean,
        sd=sd,
        histogram=tuple((float(edges[i]), int(counts[i])) for i in range(bins)),
        percentiles={float(p): percentile_threshold(list(scores), p) for p in percentiles},
        qq=qq,
    )


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _round6(x: float) -> float:
    return round(x, 6)


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_report_csv(report: DeterminantReport, path) -> None:
    _write_csv(
        Path(path),
        REPORT_COLUMNS,
        (
            (ts.term, _fmt(ts.a), _fmt(ts.b), _fmt(ts.dist), ts.n_pos, ts.n_total, ts.doc_count_pos)
            for ts in report.rows
        ),
    )


def _report_payload(report: DeterminantReport) -> dict:
    return {
        "threshold_value": _round6(report.threshold_value),
        "universe_size": report.universe_size,
        "rows": [
            {
                "term": ts.term,
                "a_score": _round6(ts.a),
                "b_score": _round6(ts.b),
                "dist": _round6(ts.dist),
                "n_pos": ts.n_pos,
                "n_total": ts.n_total,
                "doc_count_pos": ts.doc_count_pos,
            }
            for ts in report.rows
        ],
    }


def write_report_json(report: DeterminantReport, path) -> None:
    _write_json(Path(path), _report_payload(report))


def write_distribution_csv(dist: ScoreDistribution, path) -> None:
    _write_csv(
        Path(path),
        ("bin_lower", "count"),
        ((_fmt(lower), count) for lower, count in dist.histogram),
    )


def _percentile_payload(dist: ScoreDistribution) -> dict:
    return {f"{p:g}": _round6(v) for p, v in dist.percentiles.items()}


def write_distribution_summary_json(dist: ScoreDistribution, path) -> None:
    _write_json(
        Path(path),
        {
            "count": dist.count,
            "mean": _round6(dist.mean),
            "sd": _round6(dist.sd),
            "percentiles": _percentile_payload(dist),
        },
    )


def write_distribution_json(dist: ScoreDistribution, path) -> None:
    _write_json(
        Path(path),
        {
            "count": dist.count,
            "mean": _round6(dist.mean),
            "sd": _round6(dist.sd),
            "percentiles": _percentile_payload(dist),
            "histogram": [[_round6(lower), count] for lower, count in dist.histogram],
            "qq": [[_round6(t), _round6(e)] for t, e in dist.qq],
        },
    )


def write_qq_csv(dist: ScoreDistribution, path) -> None:
    _write_csv(
        Path(path),
        ("theoretical", "empirical"),
        ((_fmt(t), _fmt(e)) for t, e in dist.qq),
    )


def write_tfidf_comparison_csv(rows, path) -> None:
    """rows: (term, mean rank positive or None, mean rank negative or None)."""
    _write_csv(
        Path(path),
        COMPARISON_COLUMNS,
        (
            (term, "NA" if cp is None else _fmt(cp), "NA" if cn is None else _fmt(cn))
            for term, cp, cn in rows
        ),
    )


def write_tfidf_comparison_json(rows, path) -> None:
    _write_json(
        Path(path),
        [
            {
                "term": term,
                "mean_rank_cp": None if cp is None else _round6(cp),
                "mean_rank_cn": None if cn is None else _round6(cn),
            }
            for term, cp, cn in rows
        ],
    )


def emit_report(
    report: DeterminantReport,
    distribution: ScoreDistribution,
    tfidf_comparison=None,
    fmt: str = "csv",
    out_dir=".",
) -> list[Path]:
    """Write the report and distribution exports (and the TF-IDF
    comparison when given) in the requested format(s); returns the
    written paths, sorted."""
    if fmt not in ("csv", "json", "both"):
        raise ValidationError(f"unknown format {fmt!r} (expected csv, json or both)")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if fmt in ("csv", "both"):
        write_report_csv(report, out / "report.csv")
        write_distribution_csv(distribution, out / "distribution.csv")
        write_distribution_summary_json(distribution, out / "distribution_summary.json")
        write_qq_csv(distribution, out / "qq.csv")
        written += [
            out / "report.csv",
            out / "distribution.csv",
            out / "distribution_summary.json",
            out / "qq.csv",
        ]
        if tfidf_comparison is not None:
            write_tfidf_comparison_csv(tfidf_comparison, out / "tfidf_comparison.csv")
            written.append(out / "tfidf_comparison.csv")
    if fmt in ("json", "both"):
        write_report_json(report, out / "report.json")
        write_distribution_json(distribution, out / "distribution.json")
        written += [out / "report.json", out / "distribution.json"]
        if tfidf_comparison is not None:
            write_tfidf_comparison_json(tfidf_comparison, out / "tfidf_comparison.json")
            written.append(out / "tfidf_comparison.json")
    return sorted(written)
