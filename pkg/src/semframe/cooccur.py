"""Bigram counting and link-budget-thresholded co-occurrence networks.

Adjacent stems within a sentence form an unordered bigram; counting them
across a corpus and keeping only the top-M pairs yields an undirected,
unweighted network. M (the link budget) comes from the number of
distinct bigrams in a designated reference corpus, so networks built
from corpora of very different sizes stay structurally comparable.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .errors import DataError
from .text_pipeline import TokenizedDocument

__all__ = [
    "CooccurrenceNetwork",
    "count_bigrams",
    "count_stem_frequencies",
    "threshold_top_m",
    "build_network",
    "baseline_link_budget",
    "write_graphml",
    "write_network_json",
    "load_network_json",
    "write_bigram_csv",
]

Pair = tuple[str, str]


def _canon(a: str, b: str) -> Pair:
    return (a, b) if a <= b else (b, a)


def count_bigrams(corpus: list[TokenizedDocument]) -> dict[Pair, int]:
    """Count adjacent-stem pairs per sentence, canonicalized (a <= b).

    Pairs never span sentence boundaries. Self-pairs like ("sad","sad")
    are recorded here; network construction excludes them.
    """
    counts: Counter[Pair] = Counter()
    for doc in corpus:
        for sent in doc.sentences:
            for i in range(len(sent) - 1):
                counts[_canon(sent[i], sent[i + 1])] += 1
    return dict(counts)


def count_stem_frequencies(corpus: list[TokenizedDocument]) -> dict[str, int]:
    """Raw occurrence count of every stem in the cleaned corpus."""
    freq: Counter[str] = Counter()
    for doc in corpus:
        for sent in doc.sentences:
            freq.update(sent)
    return dict(freq)


def threshold_top_m(counts: dict[Pair, int], m: int) -> list[Pair]:
    """Top-m non-self-loop pairs by (count desc, pair lexicographic asc)."""
    if m < 0:
        raise ValueError("link budget must be >= 0")
    ranked = sorted(
        (p for p in counts if p[0] != p[1]),
        key=lambda p: (-counts[p], p),
    )
    return ranked[:m]


@dataclass(frozen=True)
class CooccurrenceNetwork:
    """Undirected, unweighted stem graph; counts kept as provenance only."""

    nodes: frozenset[str]
    edges: tuple[Pair, ...]  # in rank order from thresholding
    edge_counts: dict[Pair, int]
    link_budget: int
    corpus_label: str = ""
    adjacency: dict[str, frozenset[str]] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        adj: dict[str, set[str]] = {n: set() for n in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "adjacency", {n: frozenset(s) for n, s in adj.items()})

    def neighbors(self, node: str) -> frozenset[str]:
        return self.adjacency[node]

    def __len__(self) -> int:
        return len(self.nodes)


def build_network(
    edges: list[Pair],
    counts: dict[Pair, int],
    label: str = "",
    link_budget: int | None = None,
) -> CooccurrenceNetwork:
    """Assemble a network from a thresholded edge list.

    The node set is the union of edge endpoints, so there are never
    isolated nodes; self-loops must already have been excluded.
    """
    nodes = set()
    for a, b in edges:
        if a == b:
            raise ValueError(f"self-loop ({a},{b}) in edge list")
        if (a, b) not in counts:
            raise ValueError(f"edge ({a},{b}) missing from counts")
        nodes.add(a)
        nodes.add(b)
    return CooccurrenceNetwork(
        nodes=frozenset(nodes),
        edges=tuple(edges),
        edge_counts={e: counts[e] for e in edges},
        link_budget=len(edges) if link_budget is None else link_budget,
        corpus_label=label,
    )


def baseline_link_budget(reference_corpus: list[TokenizedDocument]) -> int:
    """Number of distinct non-self-loop bigrams in the reference corpus.

    This M is then applied as the edge budget for every other corpus.
    """
    counts = count_bigrams(reference_corpus)
    m = sum(1 for p in counts if p[0] != p[1])
    if m == 0:
        raise DataError("reference corpus has no bigrams; cannot set a link budget")
    return m


def write_graphml(
    net: CooccurrenceNetwork,
    path: str | Path,
    valence_labels: dict[str, str] | None = None,
) -> None:
    """GraphML export; nodes carry a valence label when affect data is given,
    edges carry their provenance count."""
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="d0" for="node" attr.name="valence" attr.type="string"/>',
        '  <key id="d1" for="edge" attr.name="count" attr.type="int"/>',
        f'  <graph id={quoteattr(net.corpus_label or "G")} edgedefault="undirected">',
    ]
    for node in sorted(net.nodes):
        if valence_labels is not None:
            lines.append(f"    <node id={quoteattr(node)}>")
            lines.append(f'      <data key="d0">{escape(valence_labels.get(node, "neutral"))}</data>')
            lines.append("    </node>")
        else:
            lines.append(f"    <node id={quoteattr(node)}/>")
    for a, b in net.edges:
        lines.append(f"    <edge source={quoteattr(a)} target={quoteattr(b)}>")
        lines.append(f'      <data key="d1">{net.edge_counts[(a, b)]}</data>')
        lines.append("    </edge>")
    lines += ["  </graph>", "</graphml>", ""]
    Path(path).write_text("\n".join(lines), encoding="utf-8")


def write_network_json(net: CooccurrenceNetwork, path: str | Path) -> None:
    obj = {
        "label": net.corpus_label,
        "link_budget": net.link_budget,
        "nodes": sorted(net.nodes),
        "edges": [[a, b, net.edge_counts[(a, b)]] for a, b in net.edges],
    }
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def load_network_json(path: str | Path) -> CooccurrenceNetwork:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise DataError(f"{path}: cannot read network JSON ({e})") from e
    try:
        edges = [(a, b) for a, b, _ in obj["edges"]]
        counts = {(a, b): c for a, b, c in obj["edges"]}
        return build_network(
            edges, counts, label=obj.get("label", ""), link_budget=obj.get("link_budget")
        )
    except (KeyError, TypeError, ValueError) as e:
        raise DataError(f"{path}: malformed network JSON ({e})") from e


def write_bigram_csv(
    edges: list[Pair],
    counts: dict[Pair, int],
    path: str | Path,
    top: int | None = None,
) -> None:
    """Ranked bigram table: rank,stem_a,stem_b,count."""
    rows = edges if top is None else edges[:top]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "stem_a", "stem_b", "count"])
        for rank, (a, b) in enumerate(rows, start=1):
            writer.writerow([rank, a, b, counts[(a, b)]])
