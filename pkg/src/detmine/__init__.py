"""detmine: identify determinant topics by comparing paired corpora.

Given one corpus of documents reporting positive findings and one of
negative/insignificant findings on the same question, every term of the
positive corpus is scored by averaging (1) the share of its total
occurrences that fall in the positive corpus and (2) the fraction of
positive documents containing it.  High-scoring terms that belong to a
candidate lexicon and draw most of their occurrences from the positive
side are reported as potential determinants, alongside a classical
TF-IDF mean-rank baseline for context.
"""

from .corpus import (
    Corpus,
    CorpusLabel,
    CorpusPair,
    RawDocument,
    TokenizedDocument,
    build_pair,
    load_corpus,
    parse_manifest,
)
from .errors import DetmineError, EncodingError, ValidationError
from .lexicon import Lexicon, LexiconWarning, contains, load_lexicon
from .normalize import (
    NormalizationConfig,
    default_config,
    lemmatize,
    load_lemma_table,
    load_stopwords,
    normalize_document,
    normalize_text,
    tokenize,
)
from .report import (
    DeterminantReport,
    FilterConfig,
    ScoreDistribution,
    distribution_summary,
    emit_report,
    filter_candidates,
    percentile_threshold,
)
from .scoring import (
    CorpusImbalanceWarning,
    ScoreTable,
    TermStats,
    count_stats,
    score,
    score_all,
    term_universe,
)
from .tfidf import (
    MeanRank,
    document_frequencies,
    mean_rank,
    mean_rank_comparison,
    rank_terms,
    tf_idf,
)

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "Corpus",
    "CorpusLabel",
    "CorpusPair",
    "RawDocument",
    "TokenizedDocument",
    "build_pair",
    "load_corpus",
    "parse_manifest",
    "DetmineError",
    "EncodingError",
    "ValidationError",
    "Lexicon",
    "LexiconWarning",
    "contains",
    "load_lexicon",
    "NormalizationConfig",
    "default_config",
    "lemmatize",
    "load_lemma_table",
    "load_stopwords",
    "normalize_document",
    "normalize_text",
    "tokenize",
    "DeterminantReport",
    "FilterConfig",
    "ScoreDistribution",
    "distribution_summary",
    "emit_report",
    "filter_candidates",
    "percentile_threshold",
    "CorpusImbalanceWarning",
    "ScoreTable",
    "TermStats",
    "count_stats",
    "score",
    "score_all",
    "term_universe",
    "MeanRank",
    "document_frequencies",
    "mean_rank",
    "mean_rank_comparison",
    "rank_terms",
    "tf_idf",
]
