import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))  # porter_oracle, graph_oracles

from semframe.cooccur import build_network
from semframe.text_pipeline import read_corpus, tokenize_corpus

DATA = TESTS / "data"
FIXTURES = DATA / "fixtures"
GOLDEN = DATA / "golden"

CORPUS_SPECS = [
    ("reference", FIXTURES / "corpora" / "reference", "txt"),
    ("board_joy", FIXTURES / "corpora" / "board_joy.jsonl", "jsonl"),
    ("board_sad", FIXTURES / "corpora" / "board_sad.csv", "csv"),
    ("board_fear", FIXTURES / "corpora" / "board_fear.jsonl", "jsonl"),
    ("board_mix", FIXTURES / "corpora" / "board_mix.jsonl", "jsonl"),
]


def make_net(*edges, label="test"):
    """Small-network helper: every edge gets provenance count 1."""
    counts = {}
    canon = []
    for a, b in edges:
        e = (a, b) if a <= b else (b, a)
        counts[e] = counts.get(e, 0) + 1
        if e not in canon:
            canon.append(e)
    return build_network(canon, counts, label=label)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN


@pytest.fixture(scope="session")
def config_path():
    return FIXTURES / "config.json"


@pytest.fixture(scope="session")
def reference_corpus():
    docs = read_corpus(FIXTURES / "corpora" / "reference", "txt", "reference")
    return tokenize_corpus(docs)


@pytest.fixture(scope="session")
def lexicon():
    from semframe.affect import load_lexicons

    return load_lexicons(FIXTURES / "lexicons" / "vad.tsv", FIXTURES / "lexicons" / "emolex.tsv")


@pytest.fixture(scope="session")
def reference_network(reference_corpus):
    from semframe.cooccur import baseline_link_budget, count_bigrams, threshold_top_m

    counts = count_bigrams(reference_corpus)
    budget = baseline_link_budget(reference_corpus)
    return build_network(
        threshold_top_m(counts, budget), counts, label="reference", link_budget=budget
    )
