"""The candidate-category lexicon used to filter scored terms.

Lexicon entries pass through the same normalization pipeline as corpus
text; multi-word entries are split and each surviving token becomes an
individual member, so membership tests line up with the single-token
term universe produced by scoring.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ValidationError
from .normalize import NormalizationConfig, lemmatize, tokenize

__all__ = ["Lexicon", "LexiconWarning", "load_lexicon", "contains"]


class LexiconWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Lexicon:
    terms: frozenset[str]
    source: str

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def contains(self, term: str) -> bool:
        """Membership test for an already-normalized term."""
        return term in self.terms


def load_lexicon(path, config: NormalizationConfig) -> Lexicon:
    """Load a lexicon file: UTF-8, one entry per line, ``#`` comments.

    Tokens that normalize to stopwords are dropped with a warning;
    an entirely empty result is an error.
    """
    terms: set[str] = set()
    dropped: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            for token in tokenize(line.lower()):
                if token in config.stopwords:
                    dropped.append(token)
                    continue
                lemma = lemmatize(token, config)
                if lemma in config.stopwords:
                    dropped.append(token)
                elif len(lemma) >= config.min_token_length:
                    terms.add(lemma)
    if dropped:
        warnings.warn(
            f"{path}: dropped {len(dropped)} lexicon token(s) that normalize "
            f"to stopwords: {sorted(set(dropped))}",
            LexiconWarning,
            stacklevel=2,
        )
    if not terms:
        raise ValidationError(f"{path}: lexicon is empty after normalization")
    return Lexicon(terms=frozenset(terms), source=str(path))


def contains(lexicon: Lexicon, term: str) -> bool:
    return term in lexicon
