"""Latent Dirichlet allocation fit by collapsed Gibbs sampling.

The topic count K is supplied by the caller (in the full pipeline it is
the number of communities populating the target's semantic frame). The
sampler is sequential and seeded: token-topic assignments are drawn from
p(k) proportional to (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta)
with the current token's counts removed, and the counts after the final
sweep are the model estimate, which keeps repeated runs bit-identical.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import AnalysisError
from .porter import porter_stem
from .text_pipeline import TokenizedDocument

__all__ = [
    "TopicModel",
    "select_documents",
    "fit_lda",
    "frame_topic",
    "top_topic_words",
    "write_topic_csv",
    "write_model_json",
]


@dataclass
class TopicModel:
    K: int
    topic_word_counts: list[list[int]]  # K x V
    doc_topic_counts: list[list[int]]  # D x K
    alpha: float
    beta: float
    iterations: int
    seed: int
    vocabulary: list[str]
    doc_ids: list[str]

    def word_index(self, stem: str) -> int:
        try:
            return self.vocabulary.index(stem)
        except ValueError:
            raise AnalysisError(f"stem {stem!r} not in topic model vocabulary") from None


def select_documents(
    corpus: list[TokenizedDocument],
    target_forms: set[str] | frozenset[str],
) -> list[TokenizedDocument]:
    """Documents whose cleaned token stream contains any stem of the
    given raw word forms (matching is on stems)."""
    stems = {porter_stem(f.lower()) for f in target_forms}
    selected = []
    for doc in corpus:
        if any(t in stems for sent in doc.sentences for t in sent):
            selected.append(doc)
    return selected


def fit_lda(
    docs: list[TokenizedDocument],
    k: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 1000,
    seed: int = 0,
    granularity: str = "document",
) -> TopicModel:
    """Collapsed Gibbs LDA over the documents' flattened token streams.

    granularity="sentence" treats each sentence as its own document,
    which changes what co-occurrence the topics capture.
    """
    if k < 1:
        raise AnalysisError("topic count must be >= 1")
    if granularity == "document":
        units = [(d.id, d.tokens()) for d in docs]
    elif granularity == "sentence":
        units = [
            (f"{d.id}#{i}", list(sent))
            for d in docs
            for i, sent in enumerate(d.sentences)
        ]
    else:
        raise AnalysisError(f"unknown granularity {granularity!r}")
    units = [(did, toks) for did, toks in units if toks]
    if not units:
        raise AnalysisError("no tokens to model: corpus is empty after cleaning")
    if alpha is None:
        alpha = 50.0 / k

    vocabulary = sorted({t for _, toks in units for t in toks})
    vindex = {w: i for i, w in enumerate(vocabulary)}
    v = len(vocabulary)
    docs_as_ids = [[vindex[t] for t in toks] for _, toks in units]
    d_count = len(units)

    n_dk = [[0] * k for _ in range(d_count)]
    n_kw = [[0] * v for _ in range(k)]
    n_k = [0] * k
    rng = random.Random(seed)
    assignments = []
    for d, tokens in enumerate(docs_as_ids):
        zs = []
        for w in tokens:
            z = rng.randrange(k)
            zs.append(z)
            n_dk[d][z] += 1
            n_kw[z][w] += 1
            n_k[z] += 1
        assignments.append(zs)

    vbeta = v * beta
    if k > 1:
        for _ in range(iterations):
            for d, tokens in enumerate(docs_as_ids):
                row_d = n_dk[d]
                zs = assignments[d]
                for i, w in enumerate(tokens):
                    z = zs[i]
                    row_d[z] -= 1
                    n_kw[z][w] -= 1
                    n_k[z] -= 1
                    total = 0.0
                    weights = []
                    for kk in range(k):
                        wt = (row_d[kk] + alpha) * (n_kw[kk][w] + beta) / (n_k[kk] + vbeta)
                        total += wt
                        weights.append(total)
                    u = rng.random() * total
                    z_new = 0
                    while weights[z_new] < u:
                        z_new += 1
                    zs[i] = z_new
                    row_d[z_new] += 1
                    n_kw[z_new][w] += 1
                    n_k[z_new] += 1

    return TopicModel(
        K=k,
        topic_word_counts=n_kw,
        doc_topic_counts=n_dk,
        alpha=alpha,
        beta=beta,
        iterations=iterations,
        seed=seed,
        vocabulary=vocabulary,
        doc_ids=[did for did, _ in units],
    )


def frame_topic(model: TopicModel, target_stem: str) -> int:
    """Topic where the target stem occurs most often (ties: lowest id)."""
    w = model.word_index(target_stem)
    best_k, best_count = 0, -1
    for kk in range(model.K):
        c = model.topic_word_counts[kk][w]
        if c > best_count:
            best_k, best_count = kk, c
    return best_k


@lru_cache(maxsize=1)
def _default_drop_stems() -> frozenset[str]:
    """Stems of the bundled stopword list, plus "i" and the negations,
    which survive cleaning but carry no topical content; used to keep
    topic tables focused on semantic content."""
    text = resources.files("semframe").joinpath("data/stopwords.txt").read_text("utf-8")
    stems = {
        porter_stem(line.strip().lower())
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    }
    stems |= {"i", "no", "not"}
    return frozenset(stems)


def top_topic_words(
    model: TopicModel,
    topic: int,
    k: int,
    drop_stopwords: bool = True,
    stopword_stems: frozenset[str] | None = None,
) -> list[tuple[str, int]]:
    """Top-k (stem, count) of a topic, count desc then lexicographic."""
    if not 0 <= topic < model.K:
        raise AnalysisError(f"topic {topic} out of range for K={model.K}")
    drop = frozenset()
    if drop_stopwords:
        drop = stopword_stems if stopword_stems is not None else _default_drop_stems()
    counts = model.topic_word_counts[topic]
    ranked = sorted(
        ((w, counts[i]) for i, w in enumerate(model.vocabulary) if w not in drop),
        key=lambda wc: (-wc[1], wc[0]),
    )
    return ranked[:k]


def write_topic_csv(model: TopicModel, topic: int, k: int, path: str | Path,
                    drop_stopwords: bool = True) -> None:
    rows = top_topic_words(model, topic, k, drop_stopwords=drop_stopwords)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["topic_id", "rank", "stem", "count"])
        for rank, (stem, count) in enumerate(rows, start=1):
            writer.writerow([topic, rank, stem, count])


def write_model_json(model: TopicModel, path: str | Path) -> None:
    obj = {
        "K": model.K,
        "alpha": model.alpha,
        "beta": model.beta,
        "iterations": model.iterations,
        "seed": model.seed,
        "vocabulary": model.vocabulary,
        "doc_ids": model.doc_ids,
        "topic_word_counts": model.topic_word_counts,
        "doc_topic_counts": model.doc_topic_counts,
    }
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
