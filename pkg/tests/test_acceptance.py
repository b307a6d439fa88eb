"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines. Every tolerance is pinned here; nothing is deferred.
"""

import itertools
import json
import random
import time
import xml.etree.ElementTree as ET
from pathlib import Path

from conftest import CORPUS_SPECS, GOLDEN, make_net
from graph_oracles import (
    assortativity_reference,
    clustering_reference,
    closeness_reference,
)
from semframe.affect import EMOTIONS, load_lexicons
from semframe.cli import load_run_config, run_compare
from semframe.cooccur import build_network, count_bigrams, threshold_top_m
from semframe.errors import AnalysisError
from semframe.graphan import (
    closeness,
    degree_assortativity,
    louvain,
    mean_local_clustering,
    semantic_frame,
)
from semframe.porter import porter_stem
from semframe.profiling import emotional_profile, random_baseline, z_scores
from semframe.text_pipeline import TokenizedDocument
from semframe.topics import fit_lda

REFERENCE_TSV = Path(__file__).parent / "data" / "porter_reference.tsv"


def report(n, text):
    print(f"\nACCEPTANCE {n} PASS: {text}")


def test_01_stemmer_conformance():
    pairs = [
        line.split("\t")
        for line in REFERENCE_TSV.read_text(encoding="utf-8").splitlines()
    ]
    assert len(pairs) >= 20000
    t0 = time.monotonic()
    mismatches = sum(1 for w, s in pairs if porter_stem(w) != s)
    elapsed = time.monotonic() - t0
    assert mismatches == 0
    assert elapsed < 5.0
    report(1, f"{len(pairs)} reference pairs, 0 mismatches in {elapsed:.2f}s")


def test_02_closeness_oracle():
    rng = random.Random(20240202)
    disconnected = 0
    graphs = 0
    while graphs < 100:
        n = rng.randint(2, 12)
        nodes = [f"n{i:02d}" for i in range(n)]
        edges = [
            (a, b)
            for i, a in enumerate(nodes)
            for b in nodes[i + 1 :]
            if rng.random() < 0.3
        ]
        if not edges:
            continue
        graphs += 1
        net = make_net(*edges)
        ref = closeness_reference(sorted(net.nodes), edges)
        ours = closeness(net)
        if any(v == 0.0 for v in ours.values()) or len(net.nodes) < n:
            disconnected += 1
        for v in net.nodes:
            assert abs(ours[v] - ref[v]) <= 1e-12
    assert disconnected > 0, "the sample must include disconnected cases"
    report(2, f"100 random graphs (n<=12, {disconnected} disconnected) agree to 1e-12")


def test_03_clustering_and_assortativity_oracles():
    triangle = make_net(("a", "b"), ("b", "c"), ("a", "c"))
    assert mean_local_clustering(triangle) == 1.0
    star = make_net(("hub", "a"), ("hub", "b"), ("hub", "c"), ("hub", "d"))
    assert abs(degree_assortativity(star) - (-1.0)) <= 1e-9

    rng = random.Random(20240203)
    graphs = 0
    assort_checked = 0
    while graphs < 50:
        n = rng.randint(3, 10)
        nodes = [f"n{i}" for i in range(n)]
        edges = [
            (a, b)
            for i, a in enumerate(nodes)
            for b in nodes[i + 1 :]
            if rng.random() < 0.4
        ]
        if not edges:
            continue
        graphs += 1
        net = make_net(*edges)
        assert abs(
            mean_local_clustering(net) - clustering_reference(sorted(net.nodes), edges)
        ) <= 1e-9
        if len(edges) >= 2:
            try:
                ours = degree_assortativity(net)
            except AnalysisError:
                continue
            assert abs(ours - assortativity_reference(sorted(net.nodes), edges)) <= 1e-9
            assort_checked += 1
    assert assort_checked >= 30
    report(3, f"triangle/star fixtures exact; 50 random graphs match brute force to 1e-9")


def test_04_louvain_two_cliques_exhaustive_optimum():
    a = [f"a{i}" for i in range(5)]
    b = [f"b{i}" for i in range(5)]
    edges = list(itertools.combinations(a, 2)) + list(itertools.combinations(b, 2))
    edges.append(("a0", "b0"))
    net = make_net(*edges)

    # exhaustive search over all 115,975 partitions of the 10 nodes
    nodes = sorted(net.nodes)
    deg = {v: len(net.neighbors(v)) for v in nodes}
    m = len(edges)
    best_q = -2.0
    from graph_oracles import set_partitions

    for parts in set_partitions(nodes):
        q = 0.0
        for group in parts:
            gs = set(group)
            internal = sum(1 for x, y in edges if x in gs and y in gs)
            dsum = sum(deg[v] for v in group)
            q += internal / m - (dsum / (2.0 * m)) ** 2
        best_q = max(best_q, q)

    runs = [louvain(net, seed=41) for _ in range(3)]
    part = runs[0]
    assert part.community_count() == 2
    assert abs(part.modularity - best_q) <= 1e-6
    for other in runs[1:]:
        assert other.assignment == part.assignment
        assert other.modularity == part.modularity
    report(4, f"2 communities, Q={part.modularity:.6f} = exhaustive optimum, 3 runs identical")


def test_05_link_budget_exactness_and_tie_break():
    rng = random.Random(20240205)
    for _ in range(50):
        vocab = "abcdefghij"
        corpus = [
            TokenizedDocument(
                id=f"d{j}",
                sentences=tuple(
                    tuple(rng.choices(vocab, k=rng.randint(2, 7)))
                    for _ in range(rng.randint(1, 4))
                ),
            )
            for j in range(rng.randint(1, 6))
        ]
        counts = count_bigrams(corpus)
        distinct = sum(1 for p in counts if p[0] != p[1])
        for m in (0, 1, distinct // 2, distinct, distinct + 5):
            net = build_network(threshold_top_m(counts, m), counts)
            assert len(net.edges) == min(m, distinct)

    # pinned tie at the budget boundary: equal counts fall back to
    # lexicographic pair order
    tied = [
        TokenizedDocument(id="t", sentences=(
            ("c", "d"), ("c", "d"), ("a", "b"), ("a", "b"), ("b", "c"), ("e", "a"),
        )),
    ]
    counts = count_bigrams(tied)
    assert threshold_top_m(counts, 3) == [("a", "b"), ("c", "d"), ("a", "e")]
    report(5, "budget exactness on 50 random corpora; boundary tie pinned lexicographically")


def test_06_profile_exactness_hand_frame(tmp_path):
    vad = tmp_path / "vad.tsv"
    emo = tmp_path / "emolex.tsv"
    table = {
        "happy": {"joy"},
        "gloom": {"sadness"},
        "safe": {"trust"},
        "shock": {"surprise"},
        "stone": set(),
    }
    vad.write_text("".join(f"{w}\t0.5\t0.5\t0.5\n" for w in table), encoding="utf-8")
    emo.write_text(
        "".join(
            f"{w}\t{e}\t{1 if e in es else 0}\n" for w, es in table.items() for e in EMOTIONS
        ),
        encoding="utf-8",
    )
    lex = load_lexicons(vad, emo)
    net = make_net(
        ("feel", "happi"), ("feel", "gloom"), ("feel", "safe"),
        ("feel", "stone"), ("feel", "shock"), ("happi", "not"),
    )
    prof = emotional_profile(semantic_frame(net, "feel"), net, lex)
    assert prof.n == 5
    assert prof.fractions == {
        "anger": 0 / 5, "anticipation": 0 / 5, "joy": 1 / 5, "trust": 1 / 5,
        "fear": 0 / 5, "surprise": 1 / 5, "sadness": 2 / 5, "disgust": 0 / 5,
    }
    report(6, "6-node frame reproduces exact rationals incl. joy -> +sadness negation flip")


def test_07_null_calibration_of_flowers(lexicon):
    t0 = time.monotonic()
    pool = lexicon.emotional_stems()
    count = 50
    significant = 0
    total = 0
    for f in range(200):
        rng = random.Random(5_000_000 + f)
        draw = rng.sample(range(len(pool)), count)
        counts = {e: 0 for e in EMOTIONS}
        for i in draw:
            for e in lexicon.emotions[pool[i]]:
                counts[e] += 1
        fractions = {e: counts[e] / count for e in EMOTIONS}
        means, stds = random_baseline(
            count, lexicon, trials=1000, seed=9_000_000 + 1000 * f
        )
        z = z_scores(fractions, means, stds)
        for e in EMOTIONS:
            total += 1
            if abs(z[e]) >= 1.96:
                significant += 1
    elapsed = time.monotonic() - t0
    rate = significant / total
    assert 0.02 <= rate <= 0.08
    assert elapsed < 120.0
    report(7, f"null rejection rate {rate:.4f} in [0.02, 0.08] over 1600 petals ({elapsed:.1f}s)")


def test_08_lda_planted_recovery():
    va = [f"va{c}" for c in "abcdefghijklmnopqrst"]
    vb = [f"vb{c}" for c in "abcdefghijklmnopqrst"]
    gen = random.Random(20240208)
    docs, planted = [], []
    for j in range(50):
        side = j % 2
        vocab = (va, vb)[side]
        docs.append(
            TokenizedDocument(id=f"d{j}", sentences=(tuple(gen.choices(vocab, k=40)),))
        )
        planted.append(side)

    passed = 0
    purities = []
    for seed in range(5):
        model = fit_lda(docs, k=2, iterations=200, seed=seed)
        align = [0, 0]
        total = 0
        for j, side in enumerate(planted):
            for k in range(2):
                n = model.doc_topic_counts[j][k]
                total += n
                align[0 if k == side else 1] += n
        purity = max(align) / total
        purities.append(purity)
        if purity >= 0.9:
            passed += 1
    assert passed >= 3

    # K=1 degenerate: counts equal corpus counts exactly
    model = fit_lda(docs, k=1, iterations=10, seed=0)
    from collections import Counter

    corpus_counts = Counter(t for d in docs for t in d.tokens())
    assert model.topic_word_counts[0] == [corpus_counts[w] for w in model.vocabulary]
    report(8, f"purity {['%.3f' % p for p in purities]}, {passed}/5 seeds >= 0.9; K=1 exact")


GOLDEN_COMPARED = ["manifest.json", "stats.csv"] + [
    f"{label}/{name}"
    for label, _, _ in CORPUS_SPECS
    for name in ("rankings.csv", "profile.json", "topic_words.csv", "bigrams.csv", "frame.json")
]


def test_09_end_to_end_golden_run(tmp_path, config_path):
    t0 = time.monotonic()
    cfg1 = load_run_config(config_path)
    cfg1.output_dir = tmp_path / "run1"
    run_compare(cfg1)
    first = time.monotonic() - t0
    assert first < 60.0

    cfg2 = load_run_config(config_path)
    cfg2.output_dir = tmp_path / "run2"
    run_compare(cfg2)

    # every non-SVG artifact must be byte-identical across runs
    files = sorted(
        p.relative_to(tmp_path / "run1")
        for p in (tmp_path / "run1").rglob("*")
        if p.is_file() and p.suffix != ".svg"
    )
    assert files
    for rel in files:
        a, b = tmp_path / "run1" / rel, tmp_path / "run2" / rel
        assert a.read_bytes() == b.read_bytes(), f"{rel} differs between runs"

    # SVGs are structure-compared, not byte-compared
    for label, _, _ in CORPUS_SPECS:
        svg = tmp_path / "run1" / label / "flower.svg"
        root = ET.fromstring(svg.read_text())
        petals = [el for el in root.iter() if el.get("class") == "petal"]
        assert len(petals) == 8

    # and the frozen golden copies must match this build
    for rel in GOLDEN_COMPARED:
        expected = GOLDEN / rel
        actual = tmp_path / "run1" / rel
        assert expected.exists(), f"golden file {rel} missing; run scripts/refresh_golden.py"
        assert actual.read_bytes() == expected.read_bytes(), f"{rel} deviates from golden"
    report(9, f"two runs byte-identical ({len(files)} files) and equal to frozen golden; "
              f"first run {first:.1f}s")


def test_10_pipeline_coherence(tmp_path, config_path):
    cfg = load_run_config(config_path)
    cfg.output_dir = tmp_path / "run"
    manifest = run_compare(cfg)

    ref_label = manifest["config"]["reference_label"]
    ref_report = manifest["corpora"][ref_label]
    assert manifest["link_budget"] == ref_report["distinct_bigrams"]
    for label, report_ in manifest["corpora"].items():
        assert report_["link_budget"] == manifest["link_budget"]
        assert report_["lda"]["k"] == report_["community_count"], label
        model = json.loads((tmp_path / "run" / label / "topic_model.json").read_text())
        assert model["K"] == report_["community_count"]
    report(10, "recorded M equals reference distinct-bigram count; every K equals its |C|")
