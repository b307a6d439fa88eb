"""Graph analytics over co-occurrence networks.

Closeness centrality (component-scaled for disconnected graphs), local
clustering, degree assortativity, seeded Louvain community detection,
semantic frame extraction and concept rankings. Everything is read-only
over an immutable network, so operations are safe to run concurrently.
"""

from __future__ import annotations

import csv
import json
import math
import random
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .cooccur import CooccurrenceNetwork, build_network
from .errors import AnalysisError

__all__ = [
    "SemanticFrame",
    "Partition",
    "NetworkStats",
    "closeness",
    "mean_local_clustering",
    "degree_assortativity",
    "modularity",
    "louvain",
    "semantic_frame",
    "frame_community_count",
    "frame_community_subgraph",
    "rank_concepts",
    "write_rankings_csv",
    "write_stats_csv",
    "frame_to_json",
]


@dataclass(frozen=True)
class SemanticFrame:
    """A target stem, its direct associates, and the induced subgraph."""

    target: str
    members: frozenset[str]
    induced_edges: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Partition:
    """Node -> dense community id assignment with its modularity."""

    assignment: dict[str, int]
    modularity: float
    level_modularities: tuple[float, ...] = ()

    def community_count(self) -> int:
        return len(set(self.assignment.values()))


@dataclass(frozen=True)
class NetworkStats:
    """Summary row for one network; community_count is the number of
    communities populating the target's frame."""

    mean_local_clustering: float
    degree_assortativity: float | None
    community_count: int | None

    def csv_row(self, corpus: str, network_community_count: int | None = None) -> dict:
        return {
            "corpus": corpus,
            "mean_local_clustering": self.mean_local_clustering,
            "assortativity": self.degree_assortativity,
            "community_count": self.community_count,
            "network_community_count": network_community_count,
        }


def _bfs_distances(net: CooccurrenceNetwork, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in net.neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def closeness(net: CooccurrenceNetwork) -> dict[str, float]:
    """Component-scaled closeness centrality.

    For node v reaching n_v nodes (itself included) in a graph of N
    nodes: ((n_v - 1)/(N - 1)) * ((n_v - 1)/sum of distances). Nodes in
    singleton components score 0.
    """
    if not net.nodes:
        raise AnalysisError("closeness requires a nonempty network")
    n_total = len(net.nodes)
    result = {}
    for v in net.nodes:
        dist = _bfs_distances(net, v)
        n_comp = len(dist)
        total = sum(dist.values())
        if n_comp <= 1 or n_total <= 1 or total == 0:
            result[v] = 0.0
        else:
            result[v] = ((n_comp - 1) / (n_total - 1)) * ((n_comp - 1) / total)
    return result


def mean_local_clustering(net: CooccurrenceNetwork) -> float:
    """Average local clustering coefficient; degree<2 nodes contribute 0."""
    if not net.nodes:
        raise AnalysisError("clustering requires a nonempty network")
    total = 0.0
    for v in sorted(net.nodes):
        nbrs = net.neighbors(v)
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        nbr_list = sorted(nbrs)
        for i, u in enumerate(nbr_list):
            u_adj = net.neighbors(u)
            for w in nbr_list[i + 1 :]:
                if w in u_adj:
                    links += 1
        total += 2.0 * links / (d * (d - 1))
    return total / len(net.nodes)


def degree_assortativity(net: CooccurrenceNetwork) -> float:
    """Pearson correlation of endpoint degrees over all directed edge pairs."""
    if len(net.edges) < 2:
        raise AnalysisError("assortativity requires at least 2 edges")
    deg = {v: len(net.neighbors(v)) for v in net.nodes}
    xs, ys = [], []
    for a, b in net.edges:
        xs.extend((deg[a], deg[b]))
        ys.extend((deg[b], deg[a]))
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0 or syy == 0:
        raise AnalysisError("assortativity undefined: zero degree variance")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / math.sqrt(sxx * syy)


def modularity(
    net: CooccurrenceNetwork,
    assignment: dict[str, int],
    resolution: float = 1.0,
) -> float:
    """Newman modularity of a partition on the unweighted network."""
    m = len(net.edges)
    if m == 0:
        return 0.0
    internal: dict[int, int] = {}
    degree_sum: dict[int, int] = {}
    for v in net.nodes:
        c = assignment[v]
        degree_sum[c] = degree_sum.get(c, 0) + len(net.neighbors(v))
    for a, b in net.edges:
        if assignment[a] == assignment[b]:
            internal[assignment[a]] = internal.get(assignment[a], 0) + 1
    # summation in sorted community order keeps the float bit-stable
    # across processes (set iteration order is hash-randomized)
    q = 0.0
    for c in sorted(degree_sum):
        q += internal.get(c, 0) / m - resolution * (degree_sum[c] / (2.0 * m)) ** 2
    return q


class _LouvainGraph:
    """Weighted graph used for the aggregation phases."""

    def __init__(self, adj: dict[int, dict[int, float]], loops: dict[int, float]):
        self.adj = adj  # u -> {v: weight}, u != v
        self.loops = loops  # u -> self-loop weight (counted twice in degree)
        self.degree = {
            u: sum(ws.values()) + 2.0 * loops.get(u, 0.0) for u, ws in adj.items()
        }
        self.total_weight = sum(self.degree.values()) / 2.0  # = m

    def nodes(self) -> list[int]:
        return sorted(self.adj)


def _local_moves(
    graph: _LouvainGraph, rng: random.Random, resolution: float
) -> tuple[dict[int, int], bool]:
    """Phase one: greedy modularity moves, strict-gain acceptance."""
    community = {u: u for u in graph.adj}
    comm_total = dict(graph.degree)  # total degree per community
    m = graph.total_weight
    order = graph.nodes()
    rng.shuffle(order)
    improved = False
    moved = True
    while moved:
        moved = False
        for u in order:
            cu = community[u]
            ku = graph.degree[u]
            # weight from u to each neighboring community
            links: dict[int, float] = {}
            for v, w in graph.adj[u].items():
                links[community[v]] = links.get(community[v], 0.0) + w
            comm_total[cu] -= ku
            base = links.get(cu, 0.0) / m - resolution * ku * comm_total[cu] / (2.0 * m * m)
            best_c, best_gain = cu, 0.0
            for c in sorted(links):
                if c == cu:
                    continue
                gain = links[c] / m - resolution * ku * comm_total[c] / (2.0 * m * m)
                if gain - base > best_gain:
                    best_gain = gain - base
                    best_c = c
            community[u] = best_c
            comm_total[best_c] += ku
            if best_c != cu:
                moved = True
                improved = True
    return community, improved


def _aggregate(graph: _LouvainGraph, community: dict[int, int]) -> tuple[_LouvainGraph, dict[int, int]]:
    ids = sorted(set(community.values()))
    remap = {c: i for i, c in enumerate(ids)}
    adj: dict[int, dict[int, float]] = {i: {} for i in range(len(ids))}
    loops: dict[int, float] = {}
    for u, ws in graph.adj.items():
        cu = remap[community[u]]
        for v, w in ws.items():
            cv = remap[community[v]]
            if cu == cv:
                # each undirected edge visited from both endpoints
                loops[cu] = loops.get(cu, 0.0) + w / 2.0
            else:
                adj[cu][cv] = adj[cu].get(cv, 0.0) + w
    for u, w in graph.loops.items():
        cu = remap[community[u]]
        loops[cu] = loops.get(cu, 0.0) + w
    return _LouvainGraph(adj, loops), remap


def louvain(
    net: CooccurrenceNetwork,
    seed: int = 0,
    resolution: float = 1.0,
) -> Partition:
    """Two-phase Louvain on the unweighted network.

    Node sweep order is shuffled by the seed; a move is accepted only on
    a strict modularity gain, so the result is deterministic for a given
    seed. The returned modularity is that of the final partition on the
    original network, with per-level values kept for inspection.
    """
    if not net.nodes:
        raise AnalysisError("louvain requires a nonempty network")
    names = sorted(net.nodes)
    index = {n: i for i, n in enumerate(names)}
    adj: dict[int, dict[int, float]] = {i: {} for i in range(len(names))}
    for a, b in net.edges:
        adj[index[a]][index[b]] = 1.0
        adj[index[b]][index[a]] = 1.0
    graph = _LouvainGraph(adj, {})
    rng = random.Random(seed)

    # assignment of original node index -> current community label
    assignment = {i: i for i in range(len(names))}
    levels: list[float] = []
    while True:
        community, improved = _local_moves(graph, rng, resolution)
        if not improved and levels:
            break
        graph, remap = _aggregate(graph, community)
        assignment = {i: remap[community[assignment[i]]] for i in assignment}
        named = {names[i]: c for i, c in assignment.items()}
        levels.append(modularity(net, named, resolution))
        if not improved:
            break
        if len(graph.adj) == len(community):
            break

    named = {names[i]: c for i, c in assignment.items()}
    # renumber communities densely, in order of first appearance over
    # lexicographically sorted nodes, so output bytes are reproducible
    remap: dict[int, int] = {}
    for n in names:
        c = named[n]
        if c not in remap:
            remap[c] = len(remap)
    final = {n: remap[named[n]] for n in names}
    q = modularity(net, final, resolution)
    return Partition(assignment=final, modularity=q, level_modularities=tuple(levels))


def semantic_frame(net: CooccurrenceNetwork, target: str) -> SemanticFrame:
    """The target plus its neighborhood, with the induced edges."""
    if target not in net.nodes:
        raise AnalysisError(f"target stem {target!r} not in network")
    members = {target} | set(net.neighbors(target))
    induced = tuple(e for e in net.edges if e[0] in members and e[1] in members)
    return SemanticFrame(target=target, members=frozenset(members), induced_edges=induced)


def frame_community_count(part: Partition, frame: SemanticFrame) -> int:
    """Distinct community ids among the frame's members."""
    missing = [m for m in frame.members if m not in part.assignment]
    if missing:
        raise AnalysisError(f"partition does not cover frame members: {sorted(missing)[:5]}")
    return len({part.assignment[m] for m in frame.members})


def frame_community_subgraph(
    net: CooccurrenceNetwork, part: Partition, target: str
) -> CooccurrenceNetwork:
    """Induced subgraph on the community containing the target."""
    if target not in net.nodes:
        raise AnalysisError(f"target stem {target!r} not in network")
    cid = part.assignment[target]
    keep = {n for n, c in part.assignment.items() if c == cid}
    edges = [e for e in net.edges if e[0] in keep and e[1] in keep]
    sub = build_network(edges, net.edge_counts, label=f"{net.corpus_label}:community",
                        link_budget=net.link_budget)
    if target not in sub.nodes:
        # target may have no within-community edges; keep it visible
        sub = CooccurrenceNetwork(
            nodes=frozenset(sub.nodes | {target}),
            edges=sub.edges,
            edge_counts=sub.edge_counts,
            link_budget=sub.link_budget,
            corpus_label=sub.corpus_label,
        )
    return sub


def rank_concepts(
    net: CooccurrenceNetwork,
    word_freq: dict[str, int],
    k: int,
) -> tuple[list[str], list[str]]:
    """Top-k stems by corpus frequency and by closeness (ties lexicographic)."""
    missing = [n for n in net.nodes if n not in word_freq]
    if missing:
        raise AnalysisError(f"word frequencies missing for nodes: {sorted(missing)[:5]}")
    clos = closeness(net)
    by_freq = sorted(net.nodes, key=lambda n: (-word_freq[n], n))[:k]
    by_clos = sorted(net.nodes, key=lambda n: (-clos[n], n))[:k]
    return by_freq, by_clos


def write_rankings_csv(freq_ranking: list[str], clos_ranking: list[str], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "freq_stem", "clos_stem"])
        for i, (f, c) in enumerate(zip(freq_ranking, clos_ranking), start=1):
            writer.writerow([i, f, c])


def write_stats_csv(rows: list[dict], path: str | Path) -> None:
    """One row per corpus; community_count is the frame-restricted count,
    network_community_count the whole-partition count."""
    cols = [
        "corpus",
        "mean_local_clustering",
        "assortativity",
        "community_count",
        "network_community_count",
    ]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for row in rows:
            out = []
            for c in cols:
                v = row.get(c)
                if isinstance(v, float):
                    out.append(f"{v:.6f}")
                elif v is None:
                    out.append("")
                else:
                    out.append(v)
            writer.writerow(out)


def frame_to_json(frame: SemanticFrame, path: str | Path) -> None:
    obj = {
        "target": frame.target,
        "members": sorted(frame.members),
        "edges": [[a, b] for a, b in frame.induced_edges],
    }
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
