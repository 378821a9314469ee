"""Command-line front end: ``detmine analyze | tfidf-baseline | dump-normalized``.

All configuration is passed via flags; an optional ``--config`` JSON
file may supply any flag value (flags win over the file, the file wins
over built-in defaults).  Identical inputs and flags produce
byte-identical output files regardless of ``--threads``.

Exit codes: 0 success, 1 validation error, 2 I/O or encoding error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .corpus import CorpusLabel, CorpusPair, build_pair, load_corpus
from .errors import EncodingError, ValidationError
from .lexicon import load_lexicon
from .normalize import (
    NormalizationConfig,
    default_config,
    lemmatize,
    load_lemma_table,
    load_stopwords,
    tokenize,
)
from .report import (
    FilterConfig,
    distribution_summary,
    emit_report,
    filter_candidates,
    write_tfidf_comparison_csv,
    write_tfidf_comparison_json,
)
from .scoring import score_all
from .tfidf import mean_rank_comparison

_DEFAULTS = {
    "positive": None,
    "negative": None,
    "lexicon": None,
    "stopwords": None,
    "lemmas": None,
    "percentile": 75.0,
    "b_min": 0.5,
    "out": "out",
    "format": "csv",
    "threads": 0,
    "bins": 20,
}


@dataclass
class RunConfig:
    positive: str
    negative: str
    lexicon: str | None
    stopwords: str | None
    lemmas: str | None
    percentile: float
    b_min: float
    out: str
    format: str
    threads: int
    bins: int


def _merge_config(args: argparse.Namespace, require_lexicon: bool) -> RunConfig:
    merged = dict(_DEFAULTS)
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        unknown = set(file_cfg) - set(_DEFAULTS)
        if unknown:
            raise ValidationError(f"{args.config}: unknown config keys {sorted(unknown)}")
        merged.update(file_cfg)
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    for key in ("positive", "negative") + (("lexicon",) if require_lexicon else ()):
        if merged[key] is None:
            raise ValidationError(f"--{key} is required")
    if merged["format"] not in ("csv", "json", "both"):
        raise ValidationError(f"--format must be csv, json or both, got {merged['format']!r}")
    return RunConfig(
        positive=str(merged["positive"]),
        negative=str(merged["negative"]),
        lexicon=None if merged["lexicon"] is None else str(merged["lexicon"]),
        stopwords=None if merged["stopwords"] is None else str(merged["stopwords"]),
        lemmas=None if merged["lemmas"] is None else str(merged["lemmas"]),
        percentile=float(merged["percentile"]),
        b_min=float(merged["b_min"]),
        out=str(merged["out"]),
        format=str(merged["format"]),
        threads=int(merged["threads"]),
        bins=int(merged["bins"]),
    )


def _norm_config(cfg: RunConfig) -> NormalizationConfig:
    if cfg.stopwords is None and cfg.lemmas is None:
        return default_config()
    base = default_config()
    stopwords = load_stopwords(cfg.stopwords) if cfg.stopwords else base.stopwords
    table = load_lemma_table(cfg.lemmas) if cfg.lemmas else base.lemma_table
    return NormalizationConfig(stopwords=stopwords, lemma_table=table)


def _load_pair(cfg: RunConfig, norm: NormalizationConfig) -> CorpusPair:
    pos = load_corpus(cfg.positive, CorpusLabel.POSITIVE, norm, threads=cfg.threads)
    neg = load_corpus(cfg.negative, CorpusLabel.NEGATIVE, norm, threads=cfg.threads)
    return build_pair(pos, neg)


def cmd_analyze(cfg: RunConfig) -> int:
    norm = _norm_config(cfg)
    pair = _load_pair(cfg, norm)
    lexicon = load_lexicon(cfg.lexicon, norm)
    table = score_all(pair)
    report = filter_candidates(
        table, lexicon, FilterConfig(percentile=cfg.percentile, b_min=cfg.b_min)
    )
    distribution = distribution_summary(table, bins=cfg.bins)
    emit_report(report, distribution, fmt=cfg.format, out_dir=cfg.out)
    print(f"threshold: {report.threshold_value:.6f}")
    print(f"rows: {len(report.rows)}")
    return 0


def _normalize_requested_term(term: str, norm: NormalizationConfig) -> str:
    """Map a user-supplied term into report space (lowercase, trimmed,
    lemmatized).  Stopwords are kept as-is: they simply rank NA."""
    tokens = tokenize(term.lower())
    if len(tokens) != 1:
        raise ValidationError(f"--term must be a single token, got {term!r}")
    return lemmatize(tokens[0], norm)


def cmd_tfidf_baseline(cfg: RunConfig, terms: list[str] | None = None) -> int:
    norm = _norm_config(cfg)
    pair = _load_pair(cfg, norm)
    if terms:
        requested = []
        for t in terms:
            nt = _normalize_requested_term(t, norm)
            if nt not in requested:
                requested.append(nt)
    else:
        lexicon = load_lexicon(cfg.lexicon, norm)
        table = score_all(pair)
        report = filter_candidates(
            table, lexicon, FilterConfig(percentile=cfg.percentile, b_min=cfg.b_min)
        )
        requested = [ts.term for ts in report.rows]
    rows = mean_rank_comparison(requested, pair)
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    if cfg.format in ("csv", "both"):
        write_tfidf_comparison_csv(rows, out / "tfidf_comparison.csv")
    if cfg.format in ("json", "both"):
        write_tfidf_comparison_json(rows, out / "tfidf_comparison.json")
    print(f"rows: {len(rows)}")
    return 0


def cmd_dump_normalized(cfg: RunConfig, doc_id: str) -> int:
    norm = _norm_config(cfg)
    pair = _load_pair(cfg, norm)
    doc = pair.positive.find(doc_id) or pair.negative.find(doc_id)
    if doc is None:
        raise ValidationError(f"unknown document id: {doc_id}")
    for term in sorted(doc.term_counts):
        print(f"{term}:{doc.term_counts[term]}")
    return 0


def _add_common_flags(parser: argparse.ArgumentParser, with_analysis: bool) -> None:
    parser.add_argument("--positive", help="manifest of the positive corpus")
    parser.add_argument("--negative", help="manifest of the negative corpus")
    parser.add_argument("--stopwords", help="stopword file overriding the built-in list")
    parser.add_argument("--lemmas", help="lemma table overriding the built-in one")
    parser.add_argument("--threads", type=int, help="worker threads for loading (0 = auto)")
    parser.add_argument("--config", help="JSON file supplying any of the flags")
    if with_analysis:
        parser.add_argument("--lexicon", help="candidate lexicon file")
        parser.add_argument("--percentile", type=float, help="a-score percentile threshold (default 75)")
        parser.add_argument("--b-min", dest="b_min", type=float, help="strict lower bound on b (default 0.5)")
        parser.add_argument("--out", help="output directory (default ./out)")
        parser.add_argument("--format", choices=("csv", "json", "both"), help="output format (default csv)")
        parser.add_argument("--bins", type=int, help="histogram bin count (default 20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detmine",
        description="Identify determinant topics by comparing paired corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="score, filter and export the determinant report")
    _add_common_flags(analyze, with_analysis=True)

    baseline = sub.add_parser(
        "tfidf-baseline", help="mean TF-IDF rank comparison for the report terms"
    )
    _add_common_flags(baseline, with_analysis=True)
    baseline.add_argument(
        "--term",
        action="append",
        dest="terms",
        metavar="TERM",
        help="explicit term to rank (repeatable; defaults to the report rows)",
    )

    dump = sub.add_parser("dump-normalized", help="print a document's normalized terms")
    _add_common_flags(dump, with_analysis=False)
    dump.add_argument("doc_id", help="document id to dump")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(_merge_config(args, require_lexicon=True))
        if args.command == "tfidf-baseline":
            require_lexicon = not args.terms
            return cmd_tfidf_baseline(_merge_config(args, require_lexicon), args.terms)
        return cmd_dump_normalized(_merge_config(args, require_lexicon=False), args.doc_id)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (EncodingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
