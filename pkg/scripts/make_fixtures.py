#!/usr/bin/env python3
"""Regenerate the synthetic test fixtures in tests/data/fixtures/.

Five small corpora (one reference + four boards with different emotional
mixes), a matching valence lexicon and emotion lexicon, and the run
config wiring them together. Everything is generated from a fixed seed
so the files are byte-stable across regenerations.

Run from the repository root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import csv
import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "data" / "fixtures"

# raw word forms per emotion; several share a Porter stem on purpose
# (happy/happiness, sad/sadness/sadly ...) to exercise lexicon merging
EMOTION_WORDS = {
    "joy": [
        "happy", "happiness", "glad", "cheerful", "cheer", "delight",
        "delighted", "smile", "smiling", "laugh", "laughter", "sunny",
        "bright", "joyful", "joy", "warmth", "wonderful", "merry",
        "playful", "radiant", "festive", "pleased", "pleasure", "grin",
        "celebrate", "celebration",
    ],
    "sadness": [
        "sad", "sadness", "sadly", "cry", "crying", "tears", "tearful",
        "lonely", "loneliness", "gloomy", "gloom", "empty", "emptiness",
        "sorrow", "sorrowful", "miserable", "misery", "grief", "mourning",
        "weeping", "despair", "heartbroken", "hollow", "aching", "regret",
        "regretful",
    ],
    "fear": [
        "afraid", "fearful", "panic", "panicking", "worry", "worried",
        "dread", "dreadful", "scared", "scary", "nervous", "terror",
        "terrified", "anxious", "shaking", "trembling", "horror",
        "horrified", "frightened", "alarmed", "uneasy",
    ],
    "anger": [
        "angry", "anger", "rage", "raging", "furious", "fury", "bitter",
        "bitterness", "annoyed", "annoying", "temper", "irritated",
        "irritating", "outrage", "outraged", "resent", "resentful",
        "hostile", "hatred", "hateful", "wrath",
    ],
    "trust": [
        "trust", "trusting", "trusted", "friend", "friendly", "friendship",
        "safe", "safety", "secure", "security", "comfort", "comforting",
        "support", "supportive", "believe", "belief", "honest", "honesty",
        "faithful", "faith", "loyal", "loyalty", "reliable", "calm",
        "calming", "reassure", "reassuring", "gentle",
    ],
    "disgust": [
        "disgust", "disgusting", "disgusted", "gross", "filthy", "filth",
        "rotten", "nasty", "sour", "foul", "vile", "repulsive",
        "sickening", "stink", "stinking", "loathing", "loathe",
        "revolting", "slimy", "greasy",
    ],
    "surprise": [
        "surprise", "surprising", "surprised", "sudden", "suddenly",
        "shock", "shocking", "shocked", "amazed", "amazing", "amazement",
        "astonished", "astonishing", "unexpected", "startled", "startling",
        "marvel", "stunned", "gasp",
    ],
    "anticipation": [
        "plan", "planning", "planned", "hope", "hoping", "hopeful",
        "expect", "expected", "expectation", "tomorrow", "future",
        "waiting", "await", "eager", "eagerness", "ready", "prepare",
        "prepared", "preparing", "forecast", "upcoming", "anticipate",
        "anticipation",
    ],
}

# words carrying more than one emotion (set-union merging downstream)
MULTI_EMOTION = {
    "love": ("joy", "trust"),
    "loving": ("joy", "trust"),
    "beloved": ("joy", "trust"),
    "betrayed": ("anger", "sadness", "disgust"),
    "betrayal": ("anger", "sadness", "disgust"),
    "alone": ("sadness", "fear"),
    "darkness": ("sadness", "fear"),
    "pain": ("sadness", "fear"),
    "painful": ("sadness", "fear"),
    "sick": ("disgust", "sadness"),
    "sickness": ("disgust", "sadness"),
    "tired": ("sadness",),
    "peace": ("joy", "trust"),
    "peaceful": ("joy", "trust"),
    "miracle": ("joy", "surprise", "anticipation"),
    "thunder": ("fear", "surprise"),
    "storm": ("fear", "surprise"),
}

# lexicon-only words widening the random-baseline pool
EXTRA_LEXICON = {
    "joy": ["ecstatic", "jubilant", "elated", "gleeful", "triumphant",
            "exuberant", "euphoric", "overjoyed"],
    "sadness": ["dejected", "forlorn", "dismal", "woeful", "anguished",
                "crestfallen", "mournful", "desolate"],
    "fear": ["petrified", "apprehensive", "jittery", "panicky", "timid",
             "fearsome", "spooked"],
    "anger": ["irate", "livid", "incensed", "seething", "vexed",
              "indignant", "enraged"],
    "trust": ["steadfast", "trustworthy", "credible", "devoted",
              "dependable", "earnest", "sincere"],
    "disgust": ["putrid", "rancid", "squalid", "odious", "repugnant",
                "grimy", "fetid"],
    "surprise": ["flabbergasted", "astounded", "dumbfounded", "bewildered",
                 "speechless", "thunderstruck"],
    "anticipation": ["imminent", "forthcoming", "expectant", "impending",
                     "promising", "budding"],
}

NEUTRAL_WORDS = [
    "house", "garden", "water", "window", "door", "table", "wall", "road",
    "street", "paint", "brush", "wood", "tool", "nail", "hammer", "book",
    "letter", "paper", "morning", "evening", "night", "kitchen", "floor",
    "ceiling", "yard", "fence", "roof", "coffee", "bread", "river",
    "mountain", "city", "village", "train", "bus", "shoes", "coat",
    "pocket", "clock", "mirror", "candle", "blanket", "pillow", "chair",
]

VERBS = [
    "want", "need", "know", "think", "make", "take", "keep", "find",
    "look", "walk", "talk", "tell", "help", "work", "sleep", "live",
    "leave", "stay", "remember", "forget", "write", "read", "try",
    "start", "finish", "visit", "call", "answer", "ask", "carry",
]

FEEL_FORMS = ["feel", "feels", "feeling", "feelings"]

VALENCE_RANGE = {
    "joy": (0.72, 0.96), "trust": (0.66, 0.92), "anticipation": (0.55, 0.85),
    "surprise": (0.40, 0.70), "anger": (0.05, 0.30), "fear": (0.05, 0.32),
    "sadness": (0.04, 0.28), "disgust": (0.03, 0.25),
}


def build_lexicon_rows(rng: random.Random):
    """(word, valence, arousal, dominance) and (word, emotion-set) rows."""
    emotions: dict[str, set[str]] = {}
    for emo, words in EMOTION_WORDS.items():
        for w in words:
            emotions.setdefault(w, set()).add(emo)
    for w, emos in MULTI_EMOTION.items():
        emotions.setdefault(w, set()).update(emos)
    for emo, words in EXTRA_LEXICON.items():
        for w in words:
            emotions.setdefault(w, set()).add(emo)

    vad_rows = []
    for w in sorted(emotions):
        emos = emotions[w]
        lo = min(VALENCE_RANGE[e][0] for e in emos)
        hi = max(VALENCE_RANGE[e][1] for e in emos)
        if {"joy", "trust", "anticipation"} & emos and {"sadness", "fear", "disgust", "anger"} & emos:
            lo, hi = 0.35, 0.65  # genuinely mixed words sit mid-scale
        vad_rows.append(
            (w, round(rng.uniform(lo, hi), 3), round(rng.uniform(0.2, 0.9), 3),
             round(rng.uniform(0.2, 0.8), 3))
        )
    for w in sorted(set(NEUTRAL_WORDS + VERBS + FEEL_FORMS)):
        vad_rows.append(
            (w, round(rng.uniform(0.38, 0.62), 3), round(rng.uniform(0.1, 0.6), 3),
             round(rng.uniform(0.2, 0.8), 3))
        )
    return vad_rows, emotions


def write_lexicons(rng: random.Random) -> None:
    lex_dir = FIXTURES / "lexicons"
    lex_dir.mkdir(parents=True, exist_ok=True)
    vad_rows, emotions = build_lexicon_rows(rng)

    with open(lex_dir / "vad.tsv", "w", encoding="utf-8", newline="") as fh:
        fh.write("word\tvalence\tarousal\tdominance\n")
        for w, v, a, d in vad_rows:
            fh.write(f"{w}\t{v}\t{a}\t{d}\n")

    all_emos = sorted({e for es in emotions.values() for e in es})
    with open(lex_dir / "emolex.tsv", "w", encoding="utf-8", newline="") as fh:
        for w in sorted(emotions):
            es = emotions[w]
            for e in all_emos:
                fh.write(f"{w}\t{e}\t{1 if e in es else 0}\n")
            # polarity rows are present in real emotion lexicons; the
            # loader must parse and ignore them
            positive = bool({"joy", "trust", "anticipation"} & es)
            fh.write(f"{w}\tpositive\t{1 if positive else 0}\n")
            fh.write(f"{w}\tnegative\t{0 if positive else 1}\n")


def sentence(rng: random.Random, mix: dict[str, float]) -> str:
    """One raw sentence; themes weighted per corpus."""
    def emo_word() -> str:
        theme = rng.choices(list(mix), weights=list(mix.values()))[0]
        pool = EMOTION_WORDS[theme] + [w for w, es in MULTI_EMOTION.items() if theme in es]
        return rng.choice(pool)

    templates = [
        lambda: f"I {rng.choice(FEEL_FORMS)} {emo_word()} {rng.choice(['today', 'now', 'again'])}.",
        lambda: f"I {rng.choice(FEEL_FORMS)} so {emo_word()} about the {rng.choice(NEUTRAL_WORDS)}.",
        lambda: f"I was {emo_word()} all {rng.choice(['day', 'week', 'winter'])}.",
        lambda: f"I am not {emo_word()} anymore.",
        lambda: f"There is no {emo_word()} left in the {rng.choice(NEUTRAL_WORDS)}.",
        lambda: f"You {rng.choice(VERBS)} the {rng.choice(NEUTRAL_WORDS)} every {rng.choice(['morning', 'evening', 'day'])}.",
        lambda: f"We {rng.choice(VERBS)} and {rng.choice(VERBS)} near the {rng.choice(NEUTRAL_WORDS)}.",
        lambda: f"My {rng.choice(NEUTRAL_WORDS)} was {emo_word()} and {emo_word()}.",
        lambda: f"The {rng.choice(NEUTRAL_WORDS)} {rng.choice(['looks', 'seems', 'felt'])} {emo_word()}!",
        lambda: f"I {rng.choice(VERBS)} you, and I {rng.choice(FEEL_FORMS)} {emo_word()}.",
        lambda: f"Why do I {rng.choice(FEEL_FORMS)} {emo_word()} when you {rng.choice(VERBS)}?",
        lambda: f"I love the {rng.choice(NEUTRAL_WORDS)} and the {rng.choice(NEUTRAL_WORDS)}.",
        lambda: f"I {rng.choice(VERBS)} the {rng.choice(NEUTRAL_WORDS)}, I {rng.choice(VERBS)}.",
        lambda: f"Don't {rng.choice(VERBS)} before {rng.choice(['tomorrow', 'dawn', 'dinner'])}.",
        lambda: f"It's {emo_word()}, {emo_word()} and {emo_word()}.",
        lambda: f"Check http://example.org/{rng.randint(1, 99)} for 42 things.",
    ]
    weights = [12, 8, 8, 7, 6, 7, 6, 5, 5, 8, 6, 5, 8, 4, 4, 2]
    return rng.choices(templates, weights=weights)[0]()


def document(rng: random.Random, mix: dict[str, float]) -> str:
    return " ".join(sentence(rng, mix) for _ in range(rng.randint(2, 4)))


BOARDS = {
    # label -> (format, number of docs, emotion mix)
    "reference": ("txt", 48, {"sadness": 2, "trust": 3, "joy": 2, "anticipation": 1, "fear": 1}),
    "board_joy": ("jsonl", 120, {"joy": 5, "anticipation": 3, "surprise": 1, "trust": 1}),
    "board_sad": ("csv", 120, {"sadness": 5, "fear": 3, "disgust": 1, "anger": 1}),
    "board_fear": ("jsonl", 120, {"fear": 5, "sadness": 2, "surprise": 2, "anger": 1}),
    "board_mix": ("jsonl", 130, {"sadness": 3, "trust": 3, "joy": 1, "fear": 1, "anticipation": 1}),
}


def write_corpora(rng: random.Random) -> None:
    corp_dir = FIXTURES / "corpora"
    corp_dir.mkdir(parents=True, exist_ok=True)
    for label, (fmt, n_docs, mix) in BOARDS.items():
        docs = [(f"{label}_{i:03d}", document(rng, mix)) for i in range(n_docs)]
        if fmt == "txt":
            d = corp_dir / label
            d.mkdir(parents=True, exist_ok=True)
            for doc_id, text in docs:
                (d / f"{doc_id}.txt").write_text(text + "\n", encoding="utf-8")
        elif fmt == "jsonl":
            with open(corp_dir / f"{label}.jsonl", "w", encoding="utf-8") as fh:
                for doc_id, text in docs:
                    fh.write(json.dumps({"id": doc_id, "text": text}) + "\n")
        elif fmt == "csv":
            with open(corp_dir / f"{label}.csv", "w", encoding="utf-8", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["id", "text"])
                writer.writerows(docs)


def write_config() -> None:
    cfg = {
        "corpora": [
            {"label": "reference", "path": "corpora/reference", "format": "txt"},
            {"label": "board_joy", "path": "corpora/board_joy.jsonl", "format": "jsonl"},
            {"label": "board_sad", "path": "corpora/board_sad.csv", "format": "csv"},
            {"label": "board_fear", "path": "corpora/board_fear.jsonl", "format": "jsonl"},
            {"label": "board_mix", "path": "corpora/board_mix.jsonl", "format": "jsonl"},
        ],
        "reference_label": "reference",
        "target_word": "feel",
        "vad_lexicon": "lexicons/vad.tsv",
        "emotion_lexicon": "lexicons/emolex.tsv",
        "seed": 7,
        "trials": 1000,
        "lda_iterations": 300,
        "top_k": 15,
    }
    (FIXTURES / "config.json").write_text(json.dumps(cfg, indent=2) + "\n", encoding="utf-8")


def check_fixture_properties() -> None:
    """The fixtures must actually support the full pipeline."""
    sys.path.insert(0, str(ROOT / "src"))
    from semframe.cooccur import (
        baseline_link_budget,
        build_network,
        count_bigrams,
        count_stem_frequencies,
        threshold_top_m,
    )
    from semframe.graphan import closeness, semantic_frame
    from semframe.text_pipeline import read_corpus, tokenize_corpus

    tokenized = {}
    for label, (fmt, _, _) in BOARDS.items():
        path = FIXTURES / "corpora" / (label if fmt == "txt" else f"{label}.{fmt}")
        tokenized[label] = tokenize_corpus(read_corpus(path, fmt, label))
    budget = baseline_link_budget(tokenized["reference"])
    print(f"link budget from reference: {budget}")
    for label, corpus in tokenized.items():
        counts = count_bigrams(corpus)
        distinct = sum(1 for p in counts if p[0] != p[1])
        net = build_network(threshold_top_m(counts, budget), counts, label)
        assert "feel" in net.nodes, f"{label}: 'feel' missing from network"
        frame = semantic_frame(net, "feel")
        clos = closeness(net)
        top_clos = max(sorted(net.nodes), key=clos.get)
        top_freq = max(sorted(net.nodes), key=count_stem_frequencies(corpus).get)
        print(f"  {label}: distinct={distinct} edges={len(net.edges)} "
              f"nodes={len(net.nodes)} frame={len(frame.members) - 1} "
              f"top_freq={top_freq} top_clos={top_clos}")
        if label != "reference":
            assert distinct >= budget, f"{label} has fewer bigrams than the budget"
        assert len(frame.members) - 1 >= 12, f"{label}: frame too small"
        assert top_freq == "i", f"{label}: expected 'i' as most frequent stem"
        # the first-person pronoun should be the most central concept in
        # every fixture network, like a personal-narrative corpus
        assert top_clos == "i", f"{label}: expected 'i' as closeness argmax"


def main() -> None:
    rng = random.Random(20240424)
    write_lexicons(rng)
    write_corpora(rng)
    write_config()
    check_fixture_properties()
    print(f"fixtures written under {FIXTURES}")


if __name__ == "__main__":
    main()
