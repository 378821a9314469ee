import warnings

import pytest
from hypothesis import settings

import detmine as dm

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")


def make_doc(doc_id, counts):
    return dm.TokenizedDocument(
        id=doc_id, term_counts=dict(counts), total_tokens=sum(counts.values())
    )


def make_corpus(label, docs, prefix=None):
    prefix = prefix or label.value
    return dm.Corpus(
        label=label,
        documents=tuple(make_doc(f"{prefix}{i}", c) for i, c in enumerate(docs)),
    )


def make_pair(pos_docs, neg_docs):
    """Build a CorpusPair from lists of term->count dicts, silencing the
    token-imbalance warning (synthetic fixtures are rarely balanced)."""
    pos = make_corpus(dm.CorpusLabel.POSITIVE, pos_docs)
    neg = make_corpus(dm.CorpusLabel.NEGATIVE, neg_docs)
    return dm.build_pair(pos, neg)


def score_all_quiet(pair):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", dm.CorpusImbalanceWarning)
        return dm.score_all(pair)


@pytest.fixture(scope="session")
def default_norm():
    return dm.default_config()
