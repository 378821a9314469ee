"""Classical TF-IDF baseline and per-corpus mean-rank comparison.

A term's score in a document is ``tf * log(|D| / DF)`` with tf the raw
in-document count, |D| the corpus size and DF the number of corpus
documents containing the term.  Natural logarithm by default; rankings
are invariant under the log base, and ``log_base`` exists so that
invariance can be asserted rather than assumed.

Each document's terms are ranked by descending score (rank 1 = most
prominent), ties broken by ascending term order so rankings are a
strict total order.  A term's mean rank within a corpus averages its
rank over exactly the documents that contain it; a term contained in
no document has no mean rank (reported as NA).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from statistics import fmean
from typing import Iterable

from .corpus import Corpus, CorpusLabel, CorpusPair, TokenizedDocument
from .errors import ValidationError

__all__ = [
    "MeanRank",
    "document_frequencies",
    "tf_idf",
    "rank_terms",
    "mean_rank",
    "mean_rank_comparison",
]


@dataclass(frozen=True)
class MeanRank:
    term: str
    label: CorpusLabel
    per_doc_ranks: tuple[tuple[str, int], ...]
    mean_rank: float | None  # None when the term appears in no document


def document_frequencies(corpus: Corpus) -> Counter:
    """term -> number of corpus documents containing it."""
    df: Counter = Counter()
    for doc in corpus.documents:
        df.update(doc.term_counts.keys())
    return df


def _log(x: float, base: float | None) -> float:
    return math.log(x) if base is None else math.log(x, base)


def tf_idf(
    term: str,
    document: TokenizedDocument,
    corpus: Corpus,
    log_base: float | None = None,
) -> float:
    """TF-IDF score of a term in one document of a corpus.

    Zero when the term is absent from the document, and zero when the
    term occurs in every corpus document (log 1 = 0).
    """
    if not corpus.documents:
        raise ValidationError("tf-idf undefined over an empty corpus")
    tf = document.term_counts.get(term, 0)
    if tf == 0:
        return 0.0
    df = sum(1 for doc in corpus.documents if term in doc.term_counts)
    if df == 0:
        raise ValidationError(f"document {document.id!r} is not part of the corpus")
    return tf * _log(len(corpus.documents) / df, log_base)


def _rank_with_df(
    document: TokenizedDocument,
    corpus_size: int,
    df: Counter,
    log_base: float | None,
) -> list[tuple[str, float]]:
    scored = []
    for term, tf in document.term_counts.items():
        d = df[term]
        if d == 0:
            raise ValidationError(f"document {document.id!r} is not part of the corpus")
        scored.append((term, tf * _log(corpus_size / d, log_base)))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored


def rank_terms(
    document: TokenizedDocument,
    corpus: Corpus,
    log_base: float | None = None,
) -> list[tuple[str, float]]:
    """All terms of the document with their scores, most prominent first.

    Position + 1 is the term's rank; ties are broken by ascending
    term order, so ranks are never shared.  The document must belong
    to the corpus (DF is established within that corpus).
    """
    if not corpus.documents:
        raise ValidationError("tf-idf undefined over an empty corpus")
    return _rank_with_df(document, len(corpus.documents), document_frequencies(corpus), log_base)


def _document_rank_maps(corpus: Corpus) -> list[tuple[str, dict[str, int]]]:
    df = document_frequencies(corpus)
    n = len(corpus.documents)
    maps = []
    for doc in corpus.documents:
        ranking = _rank_with_df(doc, n, df, None)
        maps.append((doc.id, {term: i + 1 for i, (term, _) in enumerate(ranking)}))
    return maps


def mean_rank(term: str, corpus: Corpus) -> MeanRank:
    """Average rank of a term over the corpus documents containing it."""
    per_doc: list[tuple[str, int]] = []
    if corpus.documents:
        for doc_id, ranks in _document_rank_maps(corpus):
            if term in ranks:
                per_doc.append((doc_id, ranks[term]))
    return MeanRank(
        term=term,
        label=corpus.label,
        per_doc_ranks=tuple(per_doc),
        mean_rank=fmean(r for _, r in per_doc) if per_doc else None,
    )


def mean_rank_comparison(
    terms: Iterable[str], pair: CorpusPair
) -> list[tuple[str, float | None, float | None]]:
    """Rows (term, mean rank in positive, mean rank in negative), in the
    given term order; None marks a corpus the term never appears in."""
    terms = list(terms)
    if not terms:
        return []
    side_means = []
    for corpus in (pair.positive, pair.negative):
        rank_maps = _document_rank_maps(corpus)
        means: dict[str, float | None] = {}
        for term in terms:
            ranks = [m[term] for _, m in rank_maps if term in m]
            means[term] = fmean(ranks) if ranks else None
        side_means.append(means)
    return [(t, side_means[0][t], side_means[1][t]) for t in terms]
