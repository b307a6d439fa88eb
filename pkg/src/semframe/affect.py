"""Valence and emotion lexicons merged onto stems.

Raw lexicon words are stemmed; words colliding under one stem merge by
arithmetic-mean valence and set-union emotions. Valence labels come from
the quartiles of the merged stem-level distribution, so they do not
depend on any particular corpus. The eight basic emotions sit on a wheel
with fixed opposites, which drives negation handling downstream.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .errors import DataError
from .porter import porter_stem

__all__ = [
    "EMOTIONS",
    "PLUTCHIK_OPPOSITE",
    "AffectLexicon",
    "load_lexicons",
    "load_antonyms",
    "antonym_emotions",
]

# wheel order used everywhere an emotion octet is emitted
EMOTIONS = ("anger", "anticipation", "joy", "trust", "fear", "surprise", "sadness", "disgust")

PLUTCHIK_OPPOSITE = {
    "joy": "sadness",
    "sadness": "joy",
    "trust": "disgust",
    "disgust": "trust",
    "fear": "anger",
    "anger": "fear",
    "anticipation": "surprise",
    "surprise": "anticipation",
}

# sentiment polarity rows appear in emotion lexicon files; they are
# parsed but never treated as emotions
_POLARITY_CATEGORIES = {"positive", "negative"}


def _quartiles(values: list[float]) -> tuple[float, float]:
    """25th and 75th percentiles, linear interpolation between ranks."""
    xs = sorted(values)
    n = len(xs)
    if n == 1:
        return xs[0], xs[0]

    def pct(q: float) -> float:
        pos = (n - 1) * q
        lo = int(pos)
        hi = min(lo + 1, n - 1)
        frac = pos - lo
        return xs[lo] * (1 - frac) + xs[hi] * frac

    return pct(0.25), pct(0.75)


@dataclass
class AffectLexicon:
    """Stem-level affect data; immutable after load, safe to share."""

    valence: dict[str, float]
    emotions: dict[str, frozenset[str]]
    valence_quartiles: tuple[float, float]
    arousal: dict[str, float] = field(default_factory=dict)
    dominance: dict[str, float] = field(default_factory=dict)

    def valence_label(self, stem: str) -> str:
        """positive/negative/neutral; unknown stems are neutral.

        Boundaries are inclusive and positive is checked first, which
        matters for degenerate single-valued lexicons.
        """
        if stem not in self.valence:
            return "neutral"
        v = self.valence[stem]
        q1, q3 = self.valence_quartiles
        if v >= q3:
            return "positive"
        if v <= q1:
            return "negative"
        return "neutral"

    def emotions_of(self, stem: str) -> frozenset[str]:
        return self.emotions.get(stem, frozenset())

    def emotional_stems(self) -> list[str]:
        """Stems eliciting at least one emotion, lexicographically sorted."""
        return sorted(s for s, e in self.emotions.items() if e)


def antonym_emotions(emotions: frozenset[str] | set[str]) -> frozenset[str]:
    """Map each emotion to its wheel opposite (an involution)."""
    return frozenset(PLUTCHIK_OPPOSITE[e] for e in emotions)


def _parse_float(raw: str, path: Path, lineno: int, what: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise DataError(f"{path}:{lineno}: {what} is not a number: {raw!r}") from None


def load_lexicons(
    vad_path: str | Path,
    emolex_path: str | Path,
    stemmer: Callable[[str], str] = porter_stem,
) -> AffectLexicon:
    """Load a valence lexicon and an emotion lexicon onto stems.

    VAD file: tab-separated word, valence, arousal, dominance (header
    row optional). Emotion file: tab-separated word, category, 0|1, one
    row per pair; 'positive'/'negative' polarity rows are ignored.
    """
    vad_path = Path(vad_path)
    emolex_path = Path(emolex_path)

    val_acc: dict[str, list[float]] = defaultdict(list)
    aro_acc: dict[str, list[float]] = defaultdict(list)
    dom_acc: dict[str, list[float]] = defaultdict(list)
    try:
        lines = vad_path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataError(f"{vad_path}: {e}") from e
    except UnicodeDecodeError as e:
        raise DataError(f"{vad_path}: invalid UTF-8 ({e})") from e
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 4:
            raise DataError(f"{vad_path}:{n}: expected 4 tab-separated fields, got {len(fields)}")
        word, v_raw, a_raw, d_raw = fields
        if n == 1:
            try:
                float(v_raw)
            except ValueError:
                continue  # header row
        stem = stemmer(word.strip().lower())
        val_acc[stem].append(_parse_float(v_raw, vad_path, n, "valence"))
        aro_acc[stem].append(_parse_float(a_raw, vad_path, n, "arousal"))
        dom_acc[stem].append(_parse_float(d_raw, vad_path, n, "dominance"))
    if not val_acc:
        raise DataError(f"{vad_path}: empty valence lexicon")

    emo_acc: dict[str, set[str]] = defaultdict(set)
    try:
        lines = emolex_path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataError(f"{emolex_path}: {e}") from e
    except UnicodeDecodeError as e:
        raise DataError(f"{emolex_path}: invalid UTF-8 ({e})") from e
    seen_any = False
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 3:
            raise DataError(f"{emolex_path}:{n}: expected 3 tab-separated fields, got {len(fields)}")
        word, category, flag = (f.strip() for f in fields)
        category = category.lower()
        if flag not in ("0", "1"):
            if n == 1:
                continue  # header row
            raise DataError(f"{emolex_path}:{n}: association flag must be 0 or 1, got {flag!r}")
        seen_any = True
        if category in _POLARITY_CATEGORIES:
            continue
        if category not in EMOTIONS:
            raise DataError(f"{emolex_path}:{n}: unknown emotion {category!r}")
        if flag == "1":
            emo_acc[stemmer(word.lower())].add(category)
    if not seen_any:
        raise DataError(f"{emolex_path}: empty emotion lexicon")

    valence = {s: sum(vs) / len(vs) for s, vs in val_acc.items()}
    q1, q3 = _quartiles(list(valence.values()))
    return AffectLexicon(
        valence=valence,
        emotions={s: frozenset(es) for s, es in emo_acc.items()},
        valence_quartiles=(q1, q3),
        arousal={s: sum(vs) / len(vs) for s, vs in aro_acc.items()},
        dominance={s: sum(vs) / len(vs) for s, vs in dom_acc.items()},
    )


def load_antonyms(
    path: str | Path,
    stemmer: Callable[[str], str] = porter_stem,
) -> dict[str, str]:
    """Optional word-level antonym pairs, one whitespace-separated pair
    per line; '#' comments allowed. Returned map is symmetric on stems."""
    p = Path(path)
    pairs: dict[str, str] = {}
    try:
        lines = p.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataError(f"{p}: {e}") from e
    for n, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DataError(f"{p}:{n}: expected two words per line")
        a, b = (stemmer(w.lower()) for w in parts)
        pairs[a] = b
        pairs[b] = a
    return pairs
