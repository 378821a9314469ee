"""Text normalization pipeline: tokenize, lowercase, strip punctuation,
remove stopwords, lemmatize.

The pipeline applied by :func:`normalize_document` is, per token:

    lowercase -> boundary punctuation trim -> stopword removal -> lemmatize

Tokens are produced by splitting on Unicode whitespace and trimming
leading/trailing non-alphanumeric characters; interior hyphens, digits
and apostrophes are preserved, so "omega-3" survives as a single term.

The lemmatizer is a dictionary lookup (the exception table) with an
ordered suffix-rule fallback, applied repeatedly until the token stops
changing.  That fixed-point iteration is what guarantees the documented
idempotence contract: lemmatize(lemmatize(x)) == lemmatize(x) for every
input.  Both the stopword list and the exception table ship as editable
data files and can be replaced wholesale.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Mapping

from .errors import ValidationError

__all__ = [
    "NormalizationConfig",
    "default_config",
    "load_stopwords",
    "load_lemma_table",
    "tokenize",
    "lemmatize",
    "normalize_text",
    "normalize_document",
]

# Strips non-alphanumeric characters (incl. underscore) from token edges
# only; interior characters are never touched.
_EDGE_TRIM = re.compile(r"^[\W_]+|[\W_]+$")

_VOWELS = "aeiouy"

# Plural forms whose singular does not keep the "e": strip "es" whole.
_DROP_ES = ("xes", "ches", "shes", "zes", "oes")


def tokenize(text: str) -> list[str]:
    """Split on Unicode whitespace, trim boundary punctuation, drop empties.

    Case is preserved; lowering happens later in the pipeline.

    >>> tokenize("Omega-3 fatty acids.")
    ['Omega-3', 'fatty', 'acids']
    """
    sub = _EDGE_TRIM.sub
    return [t for t in (sub("", raw) for raw in text.split()) if t]


def _repair_stem(stem: str, original: str) -> str:
    """Fix up a stem after dropping "ing"/"ed"; fall back to the original
    token when the stem is too mangled to stand alone."""
    if len(stem) < 3 or not any(c in _VOWELS for c in stem):
        return original
    if stem.endswith("i"):
        return stem[:-1] + "y"  # studi -> study
    if stem.endswith("e"):
        return stem + "e"  # agre -> agree (the "eed" words)
    if stem[-1] == stem[-2] and stem[-1] in "bdgmnprt":
        return stem[:-1]  # stopp -> stop
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"  # mediat -> mediate
    if stem.endswith("s") and not stem.endswith(("ss", "us", "is")):
        return stem + "e"  # increas -> increase; keeps the result stable
    if len(stem) == 3 and stem[0] not in _VOWELS and stem[1] in "aeiou" and stem[2] not in "aeiouwxy":
        return stem + "e"  # mak -> make
    return stem


def _suffix_rules(token: str) -> str:
    """One pass of the ordered suffix-rule list; returns the token
    unchanged when no rule applies."""
    if token.endswith("ies") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("sses") and len(token) >= 5:
        return token[:-2]
    if token.endswith("es") and len(token) >= 4:
        if token.endswith(_DROP_ES):
            return token[:-2]
        return token[:-1]
    if token.endswith("s") and len(token) >= 4 and not token.endswith(("ss", "us", "is")):
        return token[:-1]
    if token.endswith("ing") and len(token) >= 6:
        return _repair_stem(token[:-3], token)
    if token.endswith("ed") and len(token) >= 5:
        return _repair_stem(token[:-2], token)
    return token


@dataclass(frozen=True)
class NormalizationConfig:
    """Immutable configuration for the normalization pipeline.

    stopwords and lemma_table keys/values must be lowercase; every
    lemma_table value must itself be a fixed point of lemmatization
    (use :func:`load_lemma_table`, which closes the table over its
    values automatically).
    """

    stopwords: frozenset[str]
    lemma_table: Mapping[str, str] = field(default_factory=dict)
    suffix_rules_enabled: bool = True
    min_token_length: int = 1

    def __post_init__(self):
        for w in self.stopwords:
            if w != w.lower():
                raise ValidationError(f"stopword not lowercase: {w!r}")
        for k, v in self.lemma_table.items():
            if k != k.lower() or v != v.lower():
                raise ValidationError(f"lemma table entry not lowercase: {k!r} -> {v!r}")
        for v in self.lemma_table.values():
            if lemmatize(v, self) != v:
                raise ValidationError(
                    f"lemma table value {v!r} is not a lemmatization fixed point"
                )


def lemmatize(token: str, config: NormalizationConfig) -> str:
    """Reduce a lowercase token to its base form.

    Exception-table lookup first, then the ordered suffix rules;
    repeated until stable, so the result is always a fixed point.
    """
    table = config.lemma_table
    rules = config.suffix_rules_enabled
    for _ in range(len(token) + 1):
        nxt = table.get(token)
        if nxt is None:
            nxt = _suffix_rules(token) if rules else token
        if nxt == token:
            return token
        token = nxt
    return token


def normalize_text(text: str, config: NormalizationConfig) -> Counter:
    """Run the full pipeline over a text, returning term -> count.

    Stopwords are checked both on the surface form and on the lemma, so
    no stopword can ever appear as an output term.
    """
    stop = config.stopwords
    min_len = config.min_token_length
    counts: Counter = Counter()
    for token in tokenize(text.lower()):
        if token in stop:
            continue
        lemma = lemmatize(token, config)
        if lemma in stop or len(lemma) < min_len:
            continue
        counts[lemma] += 1
    return counts


def normalize_document(raw, config: NormalizationConfig):
    """Normalize a RawDocument into a TokenizedDocument."""
    from .corpus import TokenizedDocument  # avoid a module cycle

    counts = normalize_text(raw.text, config)
    return TokenizedDocument(
        id=raw.id, term_counts=dict(counts), total_tokens=sum(counts.values())
    )


def load_stopwords(path) -> frozenset[str]:
    """Read a stopword file: UTF-8, one word per line, folded to lowercase."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(w.strip().lower() for w in fh if w.strip())


def load_lemma_table(path) -> dict[str, str]:
    """Read a lemma table: UTF-8 TSV, ``surface<TAB>lemma`` per line.

    The table is closed over its values (each value also maps to
    itself), which makes every value a lookup fixed point.
    """
    table: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise ValidationError(f"{path}:{lineno}: malformed lemma entry {line!r}")
            table[parts[0].strip().lower()] = parts[1].strip().lower()
    for v in list(table.values()):
        table.setdefault(v, v)
    return table


def _data_path(name: str):
    return resources.files("detmine").joinpath("data", name)


@lru_cache(maxsize=None)
def default_config() -> NormalizationConfig:
    """The shipped defaults: standard English stopword list plus the
    bundled lemma exception table."""
    with resources.as_file(_data_path("stopwords.txt")) as p:
        stopwords = load_stopwords(p)
    with resources.as_file(_data_path("lemmas.tsv")) as p:
        table = load_lemma_table(p)
    return NormalizationConfig(stopwords=stopwords, lemma_table=table)
