"""Documents, corpora and labeled corpus pairs, plus disk loading.

A corpus lives on disk as a manifest file (UTF-8, one ``id<TAB>path``
entry per line, ``#`` comment lines and blank lines ignored, paths
relative to the manifest) pointing at plain-text document files.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping

from .errors import EncodingError, ValidationError
from .normalize import NormalizationConfig, normalize_document

__all__ = [
    "CorpusLabel",
    "RawDocument",
    "TokenizedDocument",
    "Corpus",
    "CorpusPair",
    "parse_manifest",
    "load_corpus",
    "build_pair",
]


class CorpusLabel(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class RawDocument:
    """A document as read from disk: an identifier plus its raw text."""

    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValidationError("document id must be nonempty")


@dataclass(frozen=True)
class TokenizedDocument:
    """A document reduced to a multiset of normalized terms."""

    id: str
    term_counts: Mapping[str, int]
    total_tokens: int

    def __post_init__(self):
        if not self.id:
            raise ValidationError("document id must be nonempty")
        if any(c < 1 for c in self.term_counts.values()):
            raise ValidationError(f"document {self.id}: term counts must be >= 1")
        if self.total_tokens != sum(self.term_counts.values()):
            raise ValidationError(
                f"document {self.id}: total_tokens does not match term_counts"
            )


@dataclass(frozen=True)
class Corpus:
    label: CorpusLabel
    documents: tuple[TokenizedDocument, ...]

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise ValidationError(f"duplicate document id in corpus: {doc.id!r}")
            seen.add(doc.id)

    @property
    def document_count(self) -> int:
        return len(self.documents)

    @property
    def total_tokens(self) -> int:
        return sum(d.total_tokens for d in self.documents)

    def find(self, doc_id: str) -> TokenizedDocument | None:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        return None


@dataclass(frozen=True)
class CorpusPair:
    """The labeled pair of corpora under comparison."""

    positive: Corpus
    negative: Corpus

    def __post_init__(self):
        if self.positive.label is not CorpusLabel.POSITIVE:
            raise ValidationError("positive corpus must carry the positive label")
        if self.negative.label is not CorpusLabel.NEGATIVE:
            raise ValidationError("negative corpus must carry the negative label")
        if not self.positive.documents:
            raise ValidationError("positive corpus empty: scoring undefined (no documents)")
        shared = {d.id for d in self.positive.documents} & {
            d.id for d in self.negative.documents
        }
        if shared:
            raise ValidationError(
                f"document ids present in both corpora: {sorted(shared)}"
            )


def build_pair(pos: Corpus, neg: Corpus) -> CorpusPair:
    """Validate and assemble a CorpusPair."""
    return CorpusPair(positive=pos, negative=neg)


def parse_manifest(manifest_path) -> list[tuple[str, Path]]:
    """Parse a manifest into (id, absolute document path) entries,
    preserving file order."""
    manifest_path = Path(manifest_path)
    base = manifest_path.parent
    entries: list[tuple[str, Path]] = []
    seen: set[str] = set()
    with open(manifest_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ValidationError(
                    f"{manifest_path}:{lineno}: expected 'id<TAB>path', got {line!r}"
                )
            doc_id, rel = parts
            if doc_id in seen:
                raise ValidationError(
                    f"{manifest_path}:{lineno}: duplicate document id {doc_id!r}"
                )
            seen.add(doc_id)
            entries.append((doc_id, base / rel))
    return entries


def _load_one(doc_id: str, path: Path, config: NormalizationConfig) -> TokenizedDocument:
    data = path.read_bytes()  # OSError here names the path
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(path, f"document {doc_id!r} ({path}): not valid UTF-8") from exc
    return normalize_document(RawDocument(id=doc_id, text=text), config)


def load_corpus(
    manifest_path,
    label: CorpusLabel,
    config: NormalizationConfig,
    threads: int = 0,
) -> Corpus:
    """Load and normalize every document named by a manifest.

    Documents may be processed in parallel (``threads``; 0 = auto) but
    the returned corpus is always in manifest order, so output is
    independent of the thread count.
    """
    entries = parse_manifest(manifest_path)
    workers = threads if threads > 0 else (os.cpu_count() or 1)
    if workers <= 1 or len(entries) <= 1:
        docs = [_load_one(i, p, config) for i, p in entries]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            docs = list(pool.map(lambda e: _load_one(e[0], e[1], config), entries))
    return Corpus(label=label, documents=tuple(docs))
