"""Per-term determinant statistics over a corpus pair.

For every term t in the universe B (the unique terms occurring anywhere
in the positive corpus), three counts are taken:

    n_pos          raw occurrences of t across the positive corpus
    n_total        raw occurrences of t across both corpora
    doc_count_pos  positive documents containing t at least once

and two ratios are averaged into the final score:

    b    = n_pos / n_total            share of occurrences that are positive
    dist = doc_count_pos / dc_p       spread across positive documents
    a    = (b + dist) / 2             final determinant score, in (0, 1]

A term scores 1.0 exactly when it occurs in every positive document and
never in the negative corpus.  Counts are exact integers; division
happens once, at the end, in double precision.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus, CorpusPair
from .errors import ValidationError

__all__ = [
    "TermStats",
    "ScoreTable",
    "CorpusImbalanceWarning",
    "term_universe",
    "count_stats",
    "score",
    "score_all",
]

# Emit a warning when corpus token totals diverge by more than this;
# counts are not length-normalized.
IMBALANCE_TOLERANCE = 0.25


class CorpusImbalanceWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TermStats:
    """All counts and derived scores for one term."""

    term: str
    n_pos: int
    n_total: int
    doc_count_pos: int
    b: float
    dist: float
    a: float


@dataclass(frozen=True)
class ScoreTable:
    """TermStats for exactly the universe B, keyed by term.

    ``stats`` iterates in sorted term order regardless of how the
    corpora were processed, so serialization is deterministic.
    """

    dc_p: int
    stats: dict[str, TermStats]

    def __len__(self) -> int:
        return len(self.stats)

    def __contains__(self, term: str) -> bool:
        return term in self.stats

    def a_scores(self) -> list[float]:
        return [ts.a for ts in self.stats.values()]


def term_universe(positive: Corpus) -> set[str]:
    """The union of term keys over all positive documents."""
    if not positive.documents:
        raise ValidationError("term universe undefined: corpus has no documents")
    universe: set[str] = set()
    for doc in positive.documents:
        universe.update(doc.term_counts)
    return universe


def count_stats(pair: CorpusPair, term: str) -> tuple[int, int, int]:
    """Raw counts (n_pos, n_total, doc_count_pos) for one term.

    The term must belong to the universe B, i.e. occur at least once in
    the positive corpus.
    """
    n_pos = 0
    doc_count_pos = 0
    for doc in pair.positive.documents:
        c = doc.term_counts.get(term, 0)
        if c:
            n_pos += c
            doc_count_pos += 1
    if n_pos == 0:
        raise ValidationError(f"term {term!r} is not in the positive-corpus universe")
    n_neg = sum(doc.term_counts.get(term, 0) for doc in pair.negative.documents)
    return n_pos, n_pos + n_neg, doc_count_pos


def score(n_pos: int, n_total: int, doc_count_pos: int, dc_p: int) -> tuple[float, float, float]:
    """Derive (b, dist, a) from the raw counts.

    Parameters
    ----------
    n_pos : occurrences in the positive corpus, >= 1
    n_total : occurrences across both corpora, >= n_pos
    doc_count_pos : positive documents containing the term, in [1, dc_p]
    dc_p : number of positive documents, >= 1
    """
    if dc_p < 1:
        raise ValidationError("dc_p must be >= 1")
    if n_pos < 1:
        raise ValidationError("n_pos must be >= 1 (term must occur in the positive corpus)")
    if n_total < n_pos:
        raise ValidationError("n_total must be >= n_pos")
    if not 1 <= doc_count_pos <= min(n_pos, dc_p):
        raise ValidationError("doc_count_pos must be in [1, min(n_pos, dc_p)]")
    b = n_pos / n_total
    dist = doc_count_pos / dc_p
    return b, dist, (b + dist) / 2


def _check_balance(pair: CorpusPair) -> None:
    tp = pair.positive.total_tokens
    tn = pair.negative.total_tokens
    largest = max(tp, tn)
    if largest and abs(tp - tn) / largest > IMBALANCE_TOLERANCE:
        warnings.warn(
            f"corpus token totals differ by more than "
            f"{IMBALANCE_TOLERANCE:.0%} (positive={tp}, negative={tn}); "
            "scores are not length-normalized",
            CorpusImbalanceWarning,
            stacklevel=3,
        )


def score_all(pair: CorpusPair) -> ScoreTable:
    """Score every term of the universe B in one pass over the pair."""
    _check_balance(pair)
    pos_counts: Counter = Counter()
    pos_doc_counts: Counter = Counter()
    for doc in pair.positive.documents:
        pos_counts.update(doc.term_counts)
        pos_doc_counts.update(doc.term_counts.keys())
    neg_counts: Counter = Counter()
    for doc in pair.negative.documents:
        neg_counts.update(doc.term_counts)

    dc_p = pair.positive.document_count
    stats: dict[str, TermStats] = {}
    for term in sorted(pos_counts):
        n_pos = pos_counts[term]
        n_total = n_pos + neg_counts.get(term, 0)
        doc_count_pos = pos_doc_counts[term]
        b, dist, a = score(n_pos, n_total, doc_count_pos, dc_p)
        stats[term] = TermStats(
            term=term,
            n_pos=n_pos,
            n_total=n_total,
            doc_count_pos=doc_count_pos,
            b=b,
            dist=dist,
            a=a,
        )
    return ScoreTable(dc_p=dc_p, stats=stats)
