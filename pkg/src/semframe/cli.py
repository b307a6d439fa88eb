"""Command-line pipeline: corpora -> networks -> frames -> profiles -> topics.

`semframe compare` runs the whole protocol over a set of corpora: the
designated reference corpus fixes the link budget M, every corpus gets a
top-M co-occurrence network, concept rankings, network statistics, the
semantic frame of the target word, its emotional flower, and an LDA
topic model whose K equals the number of communities populating the
frame. Every stage is also exposed as its own subcommand operating on
plain file artifacts, so runs can be composed and re-run piecemeal.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 analysis
error. Lexicon paths (and only those) can be supplied via environment:
SEMFRAME_VAD_LEXICON, SEMFRAME_EMOTION_LEXICON, SEMFRAME_ANTONYM_FILE.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from . import affect, cooccur, graphan, profiling, topics
from .errors import ConfigError, DataError, SemframeError
from .porter import porter_stem
from .text_pipeline import PipelineConfig, load_stopwords, read_corpus, tokenize_corpus

_LABEL_RE = re.compile(r"^[A-Za-z0-9_-]+$")

VAD_ENV = "SEMFRAME_VAD_LEXICON"
EMOLEX_ENV = "SEMFRAME_EMOTION_LEXICON"
ANTONYM_ENV = "SEMFRAME_ANTONYM_FILE"


@dataclass(frozen=True)
class CorpusSpec:
    label: str
    path: Path
    format: str
    raw_path: str


@dataclass
class RunConfig:
    corpora: list[CorpusSpec]
    reference_label: str
    target_word: str = "feel"
    extra_target_forms: tuple[str, ...] = ()
    vad_lexicon: Path | None = None
    emotion_lexicon: Path | None = None
    antonym_file: Path | None = None
    stopword_file: Path | None = None
    seed: int = 0
    trials: int = 1000
    lda_iterations: int = 1000
    lda_alpha: float | None = None
    lda_beta: float = 0.01
    top_k: int = 15
    bigram_top: int | None = None
    frame_communities: str = "network"
    doc_granularity: str = "document"
    suppress_negated: bool = False
    output_dir: Path = Path("out")
    echo: dict = field(default_factory=dict)

    def validate(self) -> None:
        labels = [c.label for c in self.corpora]
        if not labels:
            raise ConfigError("config lists no corpora")
        if len(set(labels)) != len(labels):
            raise ConfigError("corpus labels must be unique")
        for label in labels:
            if not _LABEL_RE.match(label):
                raise ConfigError(f"corpus label {label!r} must match [A-Za-z0-9_-]+")
        if self.reference_label not in labels:
            raise ConfigError(
                f"reference_label {self.reference_label!r} is not among corpus labels {labels}"
            )
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.top_k < 0:
            raise ConfigError("top_k must be >= 0")
        if self.frame_communities not in ("network", "subgraph"):
            raise ConfigError("frame_communities must be 'network' or 'subgraph'")
        if self.doc_granularity not in ("document", "sentence"):
            raise ConfigError("doc_granularity must be 'document' or 'sentence'")
        if self.vad_lexicon is None or self.emotion_lexicon is None:
            raise ConfigError(
                "valence and emotion lexicon paths are required "
                f"(config keys vad_lexicon/emotion_lexicon or ${VAD_ENV}/${EMOLEX_ENV})"
            )
        for p in (self.vad_lexicon, self.emotion_lexicon):
            if not Path(p).exists():
                raise ConfigError(f"lexicon file not found: {p}")


def load_run_config(path: str | Path, overrides: argparse.Namespace | None = None) -> RunConfig:
    """Read the JSON run config; flags override file values, and the
    lexicon environment variables override both."""
    cfg_path = Path(path)
    try:
        raw = json.loads(cfg_path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config {cfg_path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{cfg_path}: invalid JSON ({e})") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"{cfg_path}: top level must be an object")
    base = cfg_path.parent

    def respath(value: str | None) -> Path | None:
        if value is None:
            return None
        p = Path(value)
        return p if p.is_absolute() else base / p

    corpora = []
    for i, ent in enumerate(raw.get("corpora", [])):
        try:
            corpora.append(
                CorpusSpec(
                    label=ent["label"],
                    path=respath(ent["path"]),
                    format=ent["format"],
                    raw_path=ent["path"],
                )
            )
        except (KeyError, TypeError) as e:
            raise ConfigError(f"{cfg_path}: corpora[{i}] needs label/path/format ({e})") from e

    reference = raw.get("reference_label")
    if reference is None:
        if len(corpora) == 1:
            reference = corpora[0].label
        else:
            raise ConfigError(f"{cfg_path}: reference_label is required with multiple corpora")

    cfg = RunConfig(
        corpora=corpora,
        reference_label=reference,
        target_word=raw.get("target_word", "feel"),
        extra_target_forms=tuple(raw.get("extra_target_forms", [])),
        vad_lexicon=respath(raw.get("vad_lexicon")),
        emotion_lexicon=respath(raw.get("emotion_lexicon")),
        antonym_file=respath(raw.get("antonym_file")),
        stopword_file=respath(raw.get("stopword_file")),
        seed=int(raw.get("seed", 0)),
        trials=int(raw.get("trials", 1000)),
        lda_iterations=int(raw.get("lda_iterations", 1000)),
        lda_alpha=raw.get("lda_alpha"),
        lda_beta=float(raw.get("lda_beta", 0.01)),
        top_k=int(raw.get("top_k", 15)),
        bigram_top=raw.get("bigram_top"),
        frame_communities=raw.get("frame_communities", "network"),
        doc_granularity=raw.get("doc_granularity", "document"),
        suppress_negated=bool(raw.get("suppress_negated", False)),
        output_dir=Path(raw.get("output_dir", "out")),
    )

    if overrides is not None:
        for attr, flag in [
            ("seed", "seed"), ("trials", "trials"), ("target_word", "target_word"),
            ("top_k", "top_k"), ("lda_iterations", "lda_iterations"),
            ("frame_communities", "frame_communities"),
            ("doc_granularity", "doc_granularity"), ("bigram_top", "bigram_top"),
        ]:
            v = getattr(overrides, flag, None)
            if v is not None:
                setattr(cfg, attr, v)
        if getattr(overrides, "output_dir", None) is not None:
            cfg.output_dir = Path(overrides.output_dir)

    for env, attr in ((VAD_ENV, "vad_lexicon"), (EMOLEX_ENV, "emotion_lexicon"),
                      (ANTONYM_ENV, "antonym_file")):
        if os.environ.get(env):
            setattr(cfg, attr, Path(os.environ[env]))

    # echo of the effective run parameters, written into the manifest;
    # output_dir is deliberately excluded so reruns into different
    # directories produce identical manifests
    cfg.echo = {
        "corpora": [
            {"label": c.label, "path": c.raw_path, "format": c.format} for c in corpora
        ],
        "reference_label": cfg.reference_label,
        "vad_lexicon": raw.get("vad_lexicon"),
        "emotion_lexicon": raw.get("emotion_lexicon"),
        "antonym_file": raw.get("antonym_file"),
        "stopword_file": raw.get("stopword_file"),
        "target_word": cfg.target_word,
        "extra_target_forms": list(cfg.extra_target_forms),
        "seed": cfg.seed,
        "trials": cfg.trials,
        "lda_iterations": cfg.lda_iterations,
        "lda_alpha": cfg.lda_alpha,
        "lda_beta": cfg.lda_beta,
        "top_k": cfg.top_k,
        "bigram_top": cfg.bigram_top,
        "frame_communities": cfg.frame_communities,
        "doc_granularity": cfg.doc_granularity,
        "suppress_negated": cfg.suppress_negated,
    }
    cfg.validate()
    return cfg


@contextmanager
def _stage(corpus_label: str, stage: str):
    """Annotate any pipeline error with the failing stage and corpus."""
    try:
        yield
    except SemframeError as e:
        raise type(e)(f"corpus {corpus_label!r}, stage {stage!r}: {e}") from e


def _pipeline_config(cfg: RunConfig) -> PipelineConfig:
    if cfg.stopword_file is not None:
        return PipelineConfig(stopword_list=load_stopwords(cfg.stopword_file))
    return PipelineConfig()


def run_compare(cfg: RunConfig) -> dict:
    """Run the full protocol; returns the manifest (also written to disk)."""
    out_root = Path(cfg.output_dir)
    out_root.mkdir(parents=True, exist_ok=True)
    pipe_cfg = _pipeline_config(cfg)

    with _stage("-", "lexicons"):
        lex = affect.load_lexicons(cfg.vad_lexicon, cfg.emotion_lexicon)
        antonym_map = (
            affect.load_antonyms(cfg.antonym_file) if cfg.antonym_file else None
        )

    tokenized: dict[str, list] = {}
    for spec in cfg.corpora:
        with _stage(spec.label, "read"):
            docs = read_corpus(spec.path, spec.format, spec.label)
            tokenized[spec.label] = tokenize_corpus(docs, pipe_cfg)

    with _stage(cfg.reference_label, "link-budget"):
        budget = cooccur.baseline_link_budget(tokenized[cfg.reference_label])

    target_stem = porter_stem(cfg.target_word.lower())
    target_forms = {cfg.target_word, *cfg.extra_target_forms}
    stats_rows = []
    corpus_reports = {}

    for spec in cfg.corpora:
        label = spec.label
        corpus = tokenized[label]
        out_dir = out_root / label
        out_dir.mkdir(parents=True, exist_ok=True)

        with _stage(label, "network"):
            counts = cooccur.count_bigrams(corpus)
            distinct = sum(1 for p in counts if p[0] != p[1])
            edges = cooccur.threshold_top_m(counts, budget)
            net = cooccur.build_network(edges, counts, label=label, link_budget=budget)
            valences = {n: lex.valence_label(n) for n in net.nodes}
            cooccur.write_graphml(net, out_dir / "network.graphml", valence_labels=valences)
            cooccur.write_network_json(net, out_dir / "network.json")
            cooccur.write_bigram_csv(edges, counts, out_dir / "bigrams.csv", top=cfg.bigram_top)

        with _stage(label, "rankings"):
            freq = cooccur.count_stem_frequencies(corpus)
            freq_rank, clos_rank = graphan.rank_concepts(net, freq, cfg.top_k)
            graphan.write_rankings_csv(freq_rank, clos_rank, out_dir / "rankings.csv")

        with _stage(label, "communities"):
            partition = graphan.louvain(net, seed=cfg.seed)

        with _stage(label, "frame"):
            frame = graphan.semantic_frame(net, target_stem)
            graphan.frame_to_json(frame, out_dir / "frame.json")
            if cfg.frame_communities == "network":
                n_frame_comms = graphan.frame_community_count(partition, frame)
            else:
                sub = cooccur.build_network(
                    list(frame.induced_edges), net.edge_counts, label=f"{label}:frame"
                )
                n_frame_comms = graphan.louvain(sub, seed=cfg.seed).community_count()
            community_net = graphan.frame_community_subgraph(net, partition, target_stem)
            cooccur.write_network_json(community_net, out_dir / "frame_community.json")

        with _stage(label, "stats"):
            stats = graphan.NetworkStats(
                mean_local_clustering=graphan.mean_local_clustering(net),
                degree_assortativity=graphan.degree_assortativity(net),
                community_count=n_frame_comms,
            )
            stats_rows.append(stats.csv_row(label, partition.community_count()))

        with _stage(label, "profile"):
            profile = profiling.build_profile(
                frame, net, lex,
                trials=cfg.trials, seed=cfg.seed,
                antonym_map=antonym_map, suppress_negated=cfg.suppress_negated,
            )
            profiling.flower_export(
                profile.z,
                out_dir / "profile.json",
                svg_path=out_dir / "flower.svg",
                metadata={
                    "corpus": label,
                    "target": target_stem,
                    "frame_members": profile.n,
                    "emotional_word_count": profile.emotional_word_count,
                    "empirical_denominator": "frame members excluding target",
                    "baseline_denominator": "emotional word count",
                    "trials": cfg.trials,
                    "seed": cfg.seed,
                    "fractions": {e: profile.fractions[e] for e in affect.EMOTIONS},
                    "baseline_mean": {e: profile.baseline_mean[e] for e in affect.EMOTIONS},
                    "baseline_std": {e: profile.baseline_std[e] for e in affect.EMOTIONS},
                },
            )

        with _stage(label, "topics"):
            selected = topics.select_documents(corpus, target_forms)
            model = topics.fit_lda(
                selected,
                k=n_frame_comms,
                alpha=cfg.lda_alpha,
                beta=cfg.lda_beta,
                iterations=cfg.lda_iterations,
                seed=cfg.seed,
                granularity=cfg.doc_granularity,
            )
            t_frame = topics.frame_topic(model, target_stem)
            topics.write_topic_csv(model, t_frame, cfg.top_k, out_dir / "topic_words.csv")
            topics.write_model_json(model, out_dir / "topic_model.json")

        corpus_reports[label] = {
            "format": spec.format,
            "documents": len(corpus),
            "tokens": sum(len(s) for d in corpus for s in d.sentences),
            "distinct_bigrams": distinct,
            "link_budget": budget,
            "nodes": len(net.nodes),
            "edges": len(net.edges),
            "frame_members": profile.n,
            "emotional_word_count": profile.emotional_word_count,
            "community_count": n_frame_comms,
            "network_community_count": partition.community_count(),
            "modularity": partition.modularity,
            "lda": {
                "k": model.K,
                "alpha": model.alpha,
                "beta": model.beta,
                "iterations": model.iterations,
                "documents_selected": len(selected),
                "frame_topic": t_frame,
            },
            "artifacts": {
                "network_graphml": f"{label}/network.graphml",
                "network_json": f"{label}/network.json",
                "bigrams_csv": f"{label}/bigrams.csv",
                "rankings_csv": f"{label}/rankings.csv",
                "frame_json": f"{label}/frame.json",
                "frame_community_json": f"{label}/frame_community.json",
                "profile_json": f"{label}/profile.json",
                "flower_svg": f"{label}/flower.svg",
                "topic_words_csv": f"{label}/topic_words.csv",
                "topic_model_json": f"{label}/topic_model.json",
            },
        }

    graphan.write_stats_csv(stats_rows, out_root / "stats.csv")
    manifest = {
        "config": cfg.echo,
        "target_stem": target_stem,
        "link_budget": budget,
        "corpora": corpus_reports,
        "stats_csv": "stats.csv",
    }
    (out_root / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    return manifest


def _pipe_cfg_from_args(args: argparse.Namespace) -> PipelineConfig:
    if getattr(args, "stopwords", None):
        return PipelineConfig(stopword_list=load_stopwords(args.stopwords))
    return PipelineConfig()


def _read_tokenized(args: argparse.Namespace):
    docs = read_corpus(args.corpus, args.format, getattr(args, "label", "") or "")
    return tokenize_corpus(docs, _pipe_cfg_from_args(args))


def _cmd_compare(args: argparse.Namespace) -> None:
    cfg = load_run_config(args.config, overrides=args)
    run_compare(cfg)
    print(f"wrote report bundle to {cfg.output_dir}")


def _cmd_build_network(args: argparse.Namespace) -> None:
    corpus = _read_tokenized(args)
    if args.budget is not None:
        budget = args.budget
    elif args.reference is not None:
        ref_docs = read_corpus(args.reference, args.reference_format or args.format, "reference")
        budget = cooccur.baseline_link_budget(
            tokenize_corpus(ref_docs, _pipe_cfg_from_args(args))
        )
    else:
        budget = cooccur.baseline_link_budget(corpus)  # corpus is its own reference
    counts = cooccur.count_bigrams(corpus)
    edges = cooccur.threshold_top_m(counts, budget)
    net = cooccur.build_network(edges, counts, label=args.label, link_budget=budget)
    cooccur.write_network_json(net, args.out)
    if args.graphml:
        valences = None
        vad = args.vad or os.environ.get(VAD_ENV)
        emolex = args.emolex or os.environ.get(EMOLEX_ENV)
        if vad and emolex:
            lex = affect.load_lexicons(vad, emolex)
            valences = {n: lex.valence_label(n) for n in net.nodes}
        cooccur.write_graphml(net, args.graphml, valence_labels=valences)
    if args.bigrams_csv:
        cooccur.write_bigram_csv(edges, counts, args.bigrams_csv, top=args.top)
    print(f"network: {len(net.nodes)} nodes, {len(net.edges)} edges (budget {budget})")


def _cmd_frame(args: argparse.Namespace) -> None:
    net = cooccur.load_network_json(args.network)
    frame = graphan.semantic_frame(net, porter_stem(args.target.lower()))
    graphan.frame_to_json(frame, args.out)
    print(f"frame of {frame.target!r}: {len(frame.members)} members")


def _require_lexicons(args: argparse.Namespace) -> affect.AffectLexicon:
    vad = args.vad or os.environ.get(VAD_ENV)
    emolex = args.emolex or os.environ.get(EMOLEX_ENV)
    if not vad or not emolex:
        raise ConfigError(
            f"--vad and --emolex are required (or ${VAD_ENV} and ${EMOLEX_ENV})"
        )
    return affect.load_lexicons(vad, emolex)


def _cmd_profile(args: argparse.Namespace) -> None:
    net = cooccur.load_network_json(args.network)
    lex = _require_lexicons(args)
    antonym_path = args.antonyms or os.environ.get(ANTONYM_ENV)
    antonym_map = affect.load_antonyms(antonym_path) if antonym_path else None
    target_stem = porter_stem(args.target.lower())
    frame = graphan.semantic_frame(net, target_stem)
    profile = profiling.build_profile(
        frame, net, lex,
        trials=args.trials, seed=args.seed,
        antonym_map=antonym_map, suppress_negated=args.suppress_negated,
        with_replacement=args.with_replacement,
    )
    profiling.flower_export(
        profile.z, args.out, svg_path=args.svg,
        metadata={
            "target": target_stem,
            "frame_members": profile.n,
            "emotional_word_count": profile.emotional_word_count,
            "trials": args.trials,
            "seed": args.seed,
        },
    )
    sig = [e for e in affect.EMOTIONS if abs(profile.z[e]) >= profiling.SIGNIFICANCE_THRESHOLD]
    print(f"profile of {target_stem!r}: significant petals {sig or 'none'}")


def _cmd_topics(args: argparse.Namespace) -> None:
    corpus = _read_tokenized(args)
    target_stem = porter_stem(args.target.lower())
    selected = topics.select_documents(corpus, {args.target, *args.extra_forms})
    model = topics.fit_lda(
        selected, k=args.k, alpha=args.alpha, beta=args.beta,
        iterations=args.iterations, seed=args.seed, granularity=args.doc_granularity,
    )
    t_frame = topics.frame_topic(model, target_stem)
    topics.write_topic_csv(model, t_frame, args.top_k, args.out,
                           drop_stopwords=not args.keep_stopwords)
    if args.model_json:
        topics.write_model_json(model, args.model_json)
    print(f"K={model.K}, frame topic {t_frame}, {len(selected)} documents selected")


def _cmd_stats(args: argparse.Namespace) -> None:
    net = cooccur.load_network_json(args.network)
    partition = graphan.louvain(net, seed=args.seed)
    n_frame_comms = None
    if args.target:
        frame = graphan.semantic_frame(net, porter_stem(args.target.lower()))
        if args.frame_communities == "subgraph":
            sub = cooccur.build_network(list(frame.induced_edges), net.edge_counts)
            n_frame_comms = graphan.louvain(sub, seed=args.seed).community_count()
        else:
            n_frame_comms = graphan.frame_community_count(partition, frame)
    stats = graphan.NetworkStats(
        mean_local_clustering=graphan.mean_local_clustering(net),
        degree_assortativity=graphan.degree_assortativity(net),
        community_count=n_frame_comms,
    )
    graphan.write_stats_csv(
        [stats.csv_row(net.corpus_label or "network", partition.community_count())],
        args.out,
    )
    print(f"stats written to {args.out}")


def _cmd_rank(args: argparse.Namespace) -> None:
    net = cooccur.load_network_json(args.network)
    corpus = _read_tokenized(args)
    freq = cooccur.count_stem_frequencies(corpus)
    freq_rank, clos_rank = graphan.rank_concepts(net, freq, args.top_k)
    graphan.write_rankings_csv(freq_rank, clos_rank, args.out)
    print(f"rankings written to {args.out}")


def _cmd_bigrams(args: argparse.Namespace) -> None:
    corpus = _read_tokenized(args)
    counts = cooccur.count_bigrams(corpus)
    edges = cooccur.threshold_top_m(counts, args.top or sum(1 for p in counts if p[0] != p[1]))
    cooccur.write_bigram_csv(edges, counts, args.out)
    print(f"{len(edges)} bigrams written to {args.out}")


def _add_corpus_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="corpus path (directory or file)")
    p.add_argument("--format", required=True, choices=["txt", "jsonl", "csv"])
    p.add_argument("--label", default="", help="corpus label")
    p.add_argument("--stopwords", help="custom stopword file (default: bundled list)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semframe",
        description="Emotion-enriched co-occurrence networks and semantic frame profiling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="run the full multi-corpus protocol from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--output-dir")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--target-word", dest="target_word")
    p.add_argument("--top-k", dest="top_k", type=int)
    p.add_argument("--lda-iterations", dest="lda_iterations", type=int)
    p.add_argument("--bigram-top", dest="bigram_top", type=int)
    p.add_argument("--frame-communities", dest="frame_communities",
                   choices=["network", "subgraph"])
    p.add_argument("--doc-granularity", dest="doc_granularity",
                   choices=["document", "sentence"])
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("build-network", help="build a link-budgeted co-occurrence network")
    _add_corpus_args(p)
    p.add_argument("--budget", type=int, help="explicit link budget M")
    p.add_argument("--reference", help="reference corpus fixing M (default: the corpus itself)")
    p.add_argument("--reference-format", choices=["txt", "jsonl", "csv"])
    p.add_argument("--out", required=True, help="network JSON output")
    p.add_argument("--graphml", help="also write GraphML here")
    p.add_argument("--bigrams-csv", help="also write the ranked bigram table here")
    p.add_argument("--top", type=int, help="limit the bigram table to the top N rows")
    p.add_argument("--vad", help=f"valence lexicon for GraphML labels (or ${VAD_ENV})")
    p.add_argument("--emolex", help=f"emotion lexicon for GraphML labels (or ${EMOLEX_ENV})")
    p.set_defaults(func=_cmd_build_network)

    p = sub.add_parser("frame", help="extract the semantic frame of a target word")
    p.add_argument("--network", required=True, help="network JSON from build-network")
    p.add_argument("--target", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_frame)

    p = sub.add_parser("profile", help="emotional profile and flower of a frame")
    p.add_argument("--network", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--vad", help=f"valence lexicon path (or ${VAD_ENV})")
    p.add_argument("--emolex", help=f"emotion lexicon path (or ${EMOLEX_ENV})")
    p.add_argument("--antonyms", help=f"word-level antonym pairs (or ${ANTONYM_ENV})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--suppress-negated", action="store_true",
                   help="negated words contribute only their antonym emotions")
    p.add_argument("--with-replacement", action="store_true",
                   help="baseline trials sample with replacement")
    p.add_argument("--out", required=True, help="flower JSON output")
    p.add_argument("--svg", help="also write an SVG flower here")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("topics", help="LDA topics over target-mentioning documents")
    _add_corpus_args(p)
    p.add_argument("--target", required=True)
    p.add_argument("--extra-forms", nargs="*", default=[],
                   help="additional raw word forms selecting documents")
    p.add_argument("--k", type=int, required=True, help="number of topics")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--doc-granularity", dest="doc_granularity",
                   choices=["document", "sentence"], default="document")
    p.add_argument("--top-k", dest="top_k", type=int, default=15)
    p.add_argument("--keep-stopwords", action="store_true",
                   help="do not drop stopword stems from the topic table")
    p.add_argument("--out", required=True, help="topic words CSV output")
    p.add_argument("--model-json", help="also dump the full model here")
    p.set_defaults(func=_cmd_topics)

    p = sub.add_parser("stats", help="clustering, assortativity and community counts")
    p.add_argument("--network", required=True)
    p.add_argument("--target", help="target word for the frame community count")
    p.add_argument("--frame-communities", dest="frame_communities",
                   choices=["network", "subgraph"], default="network")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("rank", help="frequency and closeness concept rankings")
    _add_corpus_args(p)
    p.add_argument("--network", required=True)
    p.add_argument("--top-k", dest="top_k", type=int, default=15)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("bigrams", help="ranked bigram frequency table")
    _add_corpus_args(p)
    p.add_argument("--top", type=int, help="keep only the top N bigrams")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_bigrams)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except SemframeError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return DataError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
