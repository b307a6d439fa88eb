"""Emotional profiling of semantic frames against random lexicon baselines.

The profile of a frame is the fraction r_i = m_i/N of members eliciting
each basic emotion, where N counts the members other than the target.
Members adjacent to a negation in the full network also contribute the
opposites of their emotions (or a word-level antonym's emotions when an
antonym table is supplied). Profiles are compared to the statistics of
random same-size draws from the emotion lexicon, giving one z-score per
emotion; petals with |z| at or above the rejection threshold mark
stronger-than-chance emotional content.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .affect import EMOTIONS, AffectLexicon, antonym_emotions
from .cooccur import CooccurrenceNetwork
from .errors import AnalysisError
from .graphan import SemanticFrame

__all__ = [
    "EmotionalProfile",
    "emotional_profile",
    "random_baseline",
    "z_scores",
    "flower_export",
    "flower_svg",
    "build_profile",
]

DEFAULT_NEGATIONS = frozenset({"no", "not"})
SIGNIFICANCE_THRESHOLD = 1.96


@dataclass
class EmotionalProfile:
    """Per-emotion fractions for one frame, plus baseline statistics."""

    fractions: dict[str, float]
    n: int
    emotional_word_count: int
    baseline_mean: dict[str, float] | None = None
    baseline_std: dict[str, float] | None = None
    z: dict[str, float] | None = None
    trials: int | None = None
    seed: int | None = None
    member_emotions: dict[str, tuple[str, ...]] = field(default_factory=dict)


def _contributed_emotions(
    member: str,
    net: CooccurrenceNetwork,
    lex: AffectLexicon,
    negations: frozenset[str],
    antonym_map: dict[str, str] | None,
    suppress_negated: bool,
) -> frozenset[str]:
    own = lex.emotions_of(member)
    negated = any(
        neg in net.adjacency and member in net.neighbors(neg) for neg in negations
    )
    if not negated:
        return own
    if antonym_map and member in antonym_map:
        flipped = lex.emotions_of(antonym_map[member])
    else:
        flipped = antonym_emotions(own)
    return flipped if suppress_negated else own | flipped


def emotional_profile(
    frame: SemanticFrame,
    net: CooccurrenceNetwork,
    lex: AffectLexicon,
    antonym_map: dict[str, str] | None = None,
    suppress_negated: bool = False,
    negations: frozenset[str] = DEFAULT_NEGATIONS,
) -> EmotionalProfile:
    """Fractions r_i = m_i/N over the frame members (target excluded).

    Each member contributes each emotion at most once. Negation
    adjacency is evaluated against the full network, not the frame, so
    negation links pruned from the frame still flip emotions.
    """
    members = sorted(frame.members - {frame.target})
    n = len(members)
    if n == 0:
        raise AnalysisError(f"frame of {frame.target!r} has no members besides the target")
    counts = {e: 0 for e in EMOTIONS}
    member_emotions: dict[str, tuple[str, ...]] = {}
    emotional = 0
    for member in members:
        contributed = _contributed_emotions(
            member, net, lex, negations, antonym_map, suppress_negated
        )
        if contributed:
            emotional += 1
            member_emotions[member] = tuple(sorted(contributed))
        for e in contributed:
            counts[e] += 1
    return EmotionalProfile(
        fractions={e: counts[e] / n for e in EMOTIONS},
        n=n,
        emotional_word_count=emotional,
        member_emotions=member_emotions,
    )


def random_baseline(
    emotional_word_count: int,
    lex: AffectLexicon,
    trials: int = 1000,
    seed: int = 0,
    with_replacement: bool = False,
) -> tuple[dict[str, float], dict[str, float]]:
    """Mean and sample std (ddof=1) of r_i over random lexicon draws.

    Each trial samples `emotional_word_count` stems uniformly from the
    lexicon stems eliciting at least one emotion and uses that same
    count as the denominator. Trial t draws from its own RNG seeded with
    seed+t, so a parallel execution reproduces the sequential result.
    """
    if emotional_word_count < 1:
        raise AnalysisError("baseline requires at least one emotional word")
    pool = lex.emotional_stems()
    if not with_replacement and len(pool) < emotional_word_count:
        raise AnalysisError(
            f"lexicon has only {len(pool)} emotional stems; "
            f"cannot draw {emotional_word_count} without replacement"
        )
    emo_sets = [lex.emotions[s] for s in pool]
    per_emotion: dict[str, list[float]] = {e: [] for e in EMOTIONS}
    indices = range(len(pool))
    for t in range(trials):
        rng = random.Random(seed + t)
        if with_replacement:
            draw = rng.choices(indices, k=emotional_word_count)
        else:
            draw = rng.sample(indices, emotional_word_count)
        counts = {e: 0 for e in EMOTIONS}
        for i in draw:
            for e in emo_sets[i]:
                counts[e] += 1
        for e in EMOTIONS:
            per_emotion[e].append(counts[e] / emotional_word_count)
    means = {e: math.fsum(xs) / trials for e, xs in per_emotion.items()}
    stds = {}
    for e, xs in per_emotion.items():
        if trials < 2:
            stds[e] = 0.0
        else:
            mu = means[e]
            stds[e] = math.sqrt(math.fsum((x - mu) ** 2 for x in xs) / (trials - 1))
    return means, stds


def z_scores(
    fractions: dict[str, float],
    baseline_mean: dict[str, float],
    baseline_std: dict[str, float],
) -> dict[str, float]:
    """z_i = (r_i - mean_i)/std_i; zero-variance baselines give 0 when
    the observation matches the mean and a signed infinity otherwise."""
    z = {}
    for e in EMOTIONS:
        r, mu, sd = fractions[e], baseline_mean[e], baseline_std[e]
        if sd > 0:
            z[e] = (r - mu) / sd
        elif r == mu:
            z[e] = 0.0
        else:
            z[e] = math.copysign(math.inf, r - mu)
    return z


def build_profile(
    frame: SemanticFrame,
    net: CooccurrenceNetwork,
    lex: AffectLexicon,
    trials: int = 1000,
    seed: int = 0,
    antonym_map: dict[str, str] | None = None,
    suppress_negated: bool = False,
    with_replacement: bool = False,
) -> EmotionalProfile:
    """Full profile: fractions, baseline statistics and z-scores."""
    profile = emotional_profile(
        frame, net, lex, antonym_map=antonym_map, suppress_negated=suppress_negated
    )
    means, stds = random_baseline(
        profile.emotional_word_count, lex, trials=trials, seed=seed,
        with_replacement=with_replacement,
    )
    profile.baseline_mean = means
    profile.baseline_std = stds
    profile.z = z_scores(profile.fractions, means, stds)
    profile.trials = trials
    profile.seed = seed
    return profile


def _z_json(value: float) -> float | str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def flower_export(
    z: dict[str, float],
    path: str | Path,
    threshold: float = SIGNIFICANCE_THRESHOLD,
    svg_path: str | Path | None = None,
    metadata: dict | None = None,
) -> dict:
    """Write flower-plot JSON: one petal per emotion in wheel order.

    Infinite z-scores are emitted as the strings "inf"/"-inf". When
    svg_path is given, a self-contained polar rendering with a shaded
    rejection disc is written alongside.
    """
    missing = [e for e in EMOTIONS if e not in z]
    if missing:
        raise AnalysisError(f"z-scores missing for emotions: {missing}")
    petals = [
        {
            "emotion": e,
            "z": _z_json(z[e]),
            "significant": abs(z[e]) >= threshold,
        }
        for e in EMOTIONS
    ]
    obj = {"threshold": threshold, "petals": petals}
    if metadata:
        obj["metadata"] = metadata
    Path(path).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
    if svg_path is not None:
        Path(svg_path).write_text(flower_svg(z, threshold), encoding="utf-8")
    return obj


_PETAL_COLORS = {
    "anger": "#e53e30",
    "anticipation": "#f29c39",
    "joy": "#f5d93b",
    "trust": "#9ac13c",
    "fear": "#2e8b57",
    "surprise": "#3b9dd9",
    "sadness": "#3b5bd9",
    "disgust": "#8e44ad",
}


def flower_svg(z: dict[str, float], threshold: float = SIGNIFICANCE_THRESHOLD) -> str:
    """Self-contained SVG: petals as wedges scaled by |z|, shaded
    rejection disc of radius = threshold."""
    size = 420
    cx = cy = size / 2
    max_r = size / 2 - 50
    finite = [abs(v) for v in z.values() if not math.isinf(v)]
    z_cap = max([threshold * 1.5] + finite)
    scale = max_r / z_cap
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    step = 2 * math.pi / len(EMOTIONS)
    half = step * 0.38
    for i, emo in enumerate(EMOTIONS):
        val = z[emo]
        mag = z_cap if math.isinf(val) else abs(val)
        r = max(mag, 0.05) * scale
        angle = -math.pi / 2 + i * step
        x1 = cx + r * math.cos(angle - half)
        y1 = cy + r * math.sin(angle - half)
        x2 = cx + r * math.cos(angle + half)
        y2 = cy + r * math.sin(angle + half)
        opacity = "0.9" if abs(val) >= threshold else "0.45"
        parts.append(
            f'<path d="M {cx:.1f} {cy:.1f} Q {x1:.1f} {y1:.1f} '
            f"{cx + r * math.cos(angle):.1f} {cy + r * math.sin(angle):.1f} "
            f'Q {x2:.1f} {y2:.1f} {cx:.1f} {cy:.1f} Z" '
            f'fill="{_PETAL_COLORS[emo]}" fill-opacity="{opacity}" class="petal"/>'
        )
        lx = cx + (max_r + 28) * math.cos(angle)
        ly = cy + (max_r + 28) * math.sin(angle)
        sig = "*" if abs(val) >= threshold else ""
        shown = "inf" if math.isinf(val) else f"{val:.2f}"
        parts.append(
            f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="11" text-anchor="middle" '
            f'font-family="sans-serif">{emo} {shown}{sig}</text>'
        )
    parts.append(
        f'<circle cx="{cx}" cy="{cy}" r="{threshold * scale:.1f}" fill="#888888" '
        f'fill-opacity="0.25" stroke="#555555" stroke-dasharray="4 3" class="rejection"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
