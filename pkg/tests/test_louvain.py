"""Louvain community detection: optimality on small fixtures, seed
determinism, and modularity quality invariants."""

import itertools
import random

import pytest

from conftest import make_net
from graph_oracles import best_modularity_exhaustive, modularity_reference
from semframe.graphan import louvain, modularity


def two_cliques(size=5):
    a = [f"a{i}" for i in range(size)]
    b = [f"b{i}" for i in range(size)]
    edges = list(itertools.combinations(a, 2)) + list(itertools.combinations(b, 2))
    edges.append(("a0", "b0"))
    return make_net(*edges), a, b


def planted_graph(groups=3, size=10, p_in=0.6, p_out=0.05, seed=13):
    rng = random.Random(seed)
    nodes = [f"g{g}n{i:02d}" for g in range(groups) for i in range(size)]
    edges = []
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            same = u[:2] == v[:2]
            if rng.random() < (p_in if same else p_out):
                edges.append((u, v))
    return make_net(*edges)


def test_two_cliques_recovers_exact_partition():
    net, a, b = two_cliques()
    part = louvain(net, seed=0)
    assert part.community_count() == 2
    groups = {}
    for node, c in part.assignment.items():
        groups.setdefault(c, set()).add(node)
    assert set(map(frozenset, groups.values())) == {frozenset(a), frozenset(b)}
    assert part.modularity == pytest.approx(19 / 42, abs=1e-12)  # 2*(10/21 - 1/4)


def test_two_cliques_modularity_is_global_optimum():
    net, *_ = two_cliques(size=4)  # 8 nodes: exhaustive search is fast
    best_q, _ = best_modularity_exhaustive(sorted(net.nodes), list(net.edges))
    part = louvain(net, seed=1)
    assert part.modularity == pytest.approx(best_q, abs=1e-9)


def test_modularity_agrees_with_pairwise_definition():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(3, 9)
        nodes = [f"n{i}" for i in range(n)]
        edges = [
            (a, b)
            for i, a in enumerate(nodes)
            for b in nodes[i + 1 :]
            if rng.random() < 0.45
        ]
        if not edges:
            continue
        net = make_net(*edges)
        labels = {v: rng.randint(0, 2) for v in net.nodes}
        ours = modularity(net, labels)
        ref = modularity_reference(sorted(net.nodes), edges, labels)
        assert ours == pytest.approx(ref, abs=1e-12)


def test_single_edge_degenerate():
    net = make_net(("a", "b"))
    part = louvain(net, seed=0)
    # merging the pair has gain 0.5 over split, final modularity 0
    assert part.community_count() == 1
    assert part.modularity == 0.0
    assert modularity(net, {"a": 0, "b": 1}) == pytest.approx(-0.5)


def test_seed_determinism_bytes():
    net = planted_graph()
    results = [louvain(net, seed=11) for _ in range(3)]
    baseline = results[0]
    for other in results[1:]:
        assert other.assignment == baseline.assignment
        assert other.modularity == baseline.modularity
        assert other.level_modularities == baseline.level_modularities


def test_different_seeds_still_near_optimal():
    net = planted_graph()
    qs = [louvain(net, seed=s).modularity for s in range(50)]
    best = max(qs)
    assert louvain(net, seed=0).modularity >= best - 0.02


def test_modularity_never_decreases_across_levels():
    net = planted_graph(groups=4, size=8, seed=29)
    part = louvain(net, seed=5)
    levels = part.level_modularities
    assert levels == tuple(sorted(levels))
    assert part.modularity == pytest.approx(levels[-1], abs=1e-12)


def test_final_quality_at_least_singletons():
    rng = random.Random(31)
    for s in range(10):
        nodes = [f"n{i}" for i in range(rng.randint(3, 10))]
        edges = [
            (a, b)
            for i, a in enumerate(nodes)
            for b in nodes[i + 1 :]
            if rng.random() < 0.5
        ]
        if not edges:
            continue
        net = make_net(*edges)
        singles = modularity(net, {v: i for i, v in enumerate(sorted(net.nodes))})
        part = louvain(net, seed=s)
        assert part.modularity >= singles - 1e-12
        assert -1.0 <= part.modularity <= 1.0


def test_dense_community_ids_from_zero():
    net = planted_graph(groups=3, size=6, seed=17)
    part = louvain(net, seed=2)
    ids = set(part.assignment.values())
    assert ids == set(range(len(ids)))


def test_resolution_parameter_changes_granularity():
    net, *_ = two_cliques()
    coarse = louvain(net, seed=0, resolution=0.05)
    fine = louvain(net, seed=0, resolution=8.0)
    assert coarse.community_count() <= 2
    assert fine.community_count() >= 2
