"""Emotional profiles, random baselines, z-scores and flower export."""

import json
import math
import random
import xml.etree.ElementTree as ET

import pytest

from conftest import make_net
from semframe.affect import EMOTIONS, load_lexicons
from semframe.errors import AnalysisError
from semframe.graphan import semantic_frame
from semframe.profiling import (
    build_profile,
    emotional_profile,
    flower_export,
    flower_svg,
    random_baseline,
    z_scores,
)


def write_lexicon(tmp_path, entries):
    """entries: word -> (valence, emotion set)"""
    vad = tmp_path / "vad.tsv"
    emo = tmp_path / "emolex.tsv"
    vad.write_text(
        "".join(f"{w}\t{v}\t0.5\t0.5\n" for w, (v, _) in entries.items()), encoding="utf-8"
    )
    rows = []
    for w, (_, es) in entries.items():
        for e in EMOTIONS:
            rows.append(f"{w}\t{e}\t{1 if e in es else 0}\n")
    emo.write_text("".join(rows), encoding="utf-8")
    return load_lexicons(vad, emo)


@pytest.fixture
def hand_lexicon(tmp_path):
    return write_lexicon(
        tmp_path,
        {
            "happy": (0.9, {"joy"}),
            "gloom": (0.1, {"sadness"}),
            "safe": (0.8, {"trust"}),
            "shock": (0.3, {"surprise"}),
            "stone": (0.5, set()),
            "alpha": (0.6, {"joy"}),
            "bravo": (0.4, {"sadness"}),
        },
    )


def hand_frame():
    """feel + 5 members; "not" is adjacent to happi but not to feel."""
    net = make_net(
        ("feel", "happi"),
        ("feel", "gloom"),
        ("feel", "safe"),
        ("feel", "stone"),
        ("feel", "shock"),
        ("happi", "not"),
    )
    return net, semantic_frame(net, "feel")


def test_hand_frame_exact_fractions(hand_lexicon):
    net, frame = hand_frame()
    prof = emotional_profile(frame, net, hand_lexicon)
    assert prof.n == 5
    assert prof.emotional_word_count == 4  # stone elicits nothing
    # negation flip: happi {joy} gains sadness because of the (happi,not)
    # edge in the full network, even though "not" is outside the frame
    assert prof.fractions == {
        "anger": 0.0,
        "anticipation": 0.0,
        "joy": 1 / 5,
        "trust": 1 / 5,
        "fear": 0.0,
        "surprise": 1 / 5,
        "sadness": 2 / 5,
        "disgust": 0.0,
    }
    assert prof.member_emotions["happi"] == ("joy", "sadness")


def test_suppress_negated_drops_own_emotions(hand_lexicon):
    net, frame = hand_frame()
    prof = emotional_profile(frame, net, hand_lexicon, suppress_negated=True)
    # happi contributes only the flipped sadness
    assert prof.fractions["joy"] == 0.0
    assert prof.fractions["sadness"] == 2 / 5


def test_word_level_antonyms_take_precedence(hand_lexicon):
    net, frame = hand_frame()
    prof = emotional_profile(frame, net, hand_lexicon, antonym_map={"happi": "shock"})
    # happi's negation now contributes shock's surprise, not wheel-sadness
    assert prof.fractions["sadness"] == 1 / 5
    assert prof.fractions["surprise"] == 2 / 5


def test_negation_via_no_also_flips(hand_lexicon):
    net = make_net(("feel", "happi"), ("happi", "no"))
    prof = emotional_profile(semantic_frame(net, "feel"), net, hand_lexicon)
    assert prof.fractions["sadness"] == 1.0  # flipped
    assert prof.fractions["joy"] == 1.0


def test_all_members_unknown_gives_zero_profile(hand_lexicon):
    net = make_net(("feel", "xx"), ("feel", "yy"))
    prof = emotional_profile(semantic_frame(net, "feel"), net, hand_lexicon)
    assert all(v == 0.0 for v in prof.fractions.values())
    assert prof.emotional_word_count == 0


def test_degenerate_frame_errors(hand_lexicon):
    net = make_net(("feel", "happi"))
    frame = semantic_frame(net, "feel")
    stripped = type(frame)(target="feel", members=frozenset({"feel"}), induced_edges=())
    with pytest.raises(AnalysisError):
        emotional_profile(stripped, net, hand_lexicon)


def test_target_not_counted_in_profile(tmp_path):
    lex = write_lexicon(tmp_path, {"feel": (0.5, {"joy"}), "stone": (0.5, set())})
    net = make_net(("feel", "stone"))
    prof = emotional_profile(semantic_frame(net, "feel"), net, lex)
    assert prof.n == 1
    assert prof.fractions["joy"] == 0.0  # the target's own emotions do not count


def test_monotonicity_adding_emotional_member(hand_lexicon):
    net1, frame1 = hand_frame()
    m1 = emotional_profile(frame1, net1, hand_lexicon)
    net2 = make_net(*net1.edges, ("alpha", "feel"))
    frame2 = semantic_frame(net2, "feel")
    m2 = emotional_profile(frame2, net2, hand_lexicon)
    for e in EMOTIONS:
        count1 = round(m1.fractions[e] * m1.n)
        count2 = round(m2.fractions[e] * m2.n)
        if e == "joy":
            assert count2 == count1 + 1
        else:
            assert count2 >= count1


def test_denominator_consistency(lexicon, reference_network):
    frame = semantic_frame(reference_network, "feel")
    prof = emotional_profile(frame, reference_network, lexicon)
    total = sum(round(v * prof.n) for v in prof.fractions.values())
    assert total <= 8 * prof.n


def test_baseline_degenerate_all_joy(tmp_path):
    lex = write_lexicon(
        tmp_path, {w: (0.5, {"joy"}) for w in ["alpha", "bravo", "delta", "gamma"]}
    )
    means, stds = random_baseline(3, lex, trials=50, seed=0)
    assert means["joy"] == 1.0 and stds["joy"] == 0.0
    assert means["fear"] == 0.0 and stds["fear"] == 0.0


def test_baseline_two_stem_bernoulli(tmp_path):
    lex = write_lexicon(tmp_path, {"alpha": (0.5, {"joy"}), "bravo": (0.5, {"sadness"})})
    means, stds = random_baseline(1, lex, trials=1000, seed=5)
    assert abs(means["joy"] - 0.5) <= 0.05
    assert abs(stds["joy"] - 0.5) <= 0.01
    assert means["joy"] + means["sadness"] == pytest.approx(1.0)


def test_baseline_insufficient_pool_errors(tmp_path):
    lex = write_lexicon(tmp_path, {"alpha": (0.5, {"joy"})})
    with pytest.raises(AnalysisError):
        random_baseline(5, lex, trials=10, seed=0)
    # with replacement the same draw is allowed
    means, _ = random_baseline(5, lex, trials=10, seed=0, with_replacement=True)
    assert means["joy"] == 1.0


GOLDEN_BASELINE = {
    "mean": {
        "anger": 0.11862,
        "anticipation": 0.09546,
        "joy": 0.16440000000000002,
        "trust": 0.14708000000000002,
        "fear": 0.15522,
        "surprise": 0.09854,
        "sadness": 0.16786,
        "disgust": 0.12708,
    },
    "std": {
        "anger": 0.03918202178079675,
        "anticipation": 0.036170384248673616,
        "joy": 0.044688220338664604,
        "trust": 0.043198839564735296,
        "fear": 0.04331544560347761,
        "surprise": 0.03657876988645745,
        "sadness": 0.045658570992806,
        "disgust": 0.042090916422017295,
    },
}


def test_baseline_golden_vector_bundled_lexicon(lexicon):
    means, stds = random_baseline(50, lexicon, trials=1000, seed=1234)
    assert means == GOLDEN_BASELINE["mean"]
    assert stds == GOLDEN_BASELINE["std"]


def test_baseline_matches_hypergeometric_analytics(lexicon):
    """Independent route: without-replacement draws have known mean p and
    std sqrt(p(1-p)/n * (S-n)/(S-1)); the empirical statistics over 1000
    trials must sit within tight sampling error of those values."""
    pool = lexicon.emotional_stems()
    s = len(pool)
    n = 50
    means, stds = random_baseline(n, lexicon, trials=1000, seed=1234)
    for e in EMOTIONS:
        p = sum(1 for w in pool if e in lexicon.emotions[w]) / s
        exact_std = math.sqrt(p * (1 - p) / n * (s - n) / (s - 1))
        assert abs(means[e] - p) <= 4 * exact_std / math.sqrt(1000) + 1e-12
        assert abs(stds[e] - exact_std) <= 0.15 * exact_std


def test_baseline_order_independent_given_trial_seeds(lexicon):
    """Trials computed out of order then aggregated in index order must
    reproduce the sequential statistics bit for bit."""
    n, trials, seed = 12, 100, 77
    means, stds = random_baseline(n, lexicon, trials=trials, seed=seed)
    pool = lexicon.emotional_stems()
    per_trial = {}
    for t in reversed(range(trials)):  # deliberately reversed execution
        rng = random.Random(seed + t)
        draw = rng.sample(range(len(pool)), n)
        counts = {e: 0 for e in EMOTIONS}
        for i in draw:
            for e in lexicon.emotions[pool[i]]:
                counts[e] += 1
        per_trial[t] = {e: counts[e] / n for e in EMOTIONS}
    for e in EMOTIONS:
        xs = [per_trial[t][e] for t in range(trials)]
        mu = math.fsum(xs) / trials
        sd = math.sqrt(math.fsum((x - mu) ** 2 for x in xs) / (trials - 1))
        assert means[e] == mu
        assert stds[e] == sd


def test_baseline_seed_determinism(lexicon):
    a = random_baseline(20, lexicon, trials=200, seed=3)
    b = random_baseline(20, lexicon, trials=200, seed=3)
    assert a == b
    c = random_baseline(20, lexicon, trials=200, seed=4)
    assert c != a


def test_z_scores_arithmetic():
    fr = {e: 0.0 for e in EMOTIONS}
    mu = {e: 0.0 for e in EMOTIONS}
    sd = {e: 0.0 for e in EMOTIONS}
    fr["joy"], mu["joy"], sd["joy"] = 0.5, 0.3, 0.1
    fr["fear"], mu["fear"], sd["fear"] = 0.3, 0.3, 0.05
    fr["anger"], mu["anger"] = 0.2, 0.1  # sd 0 -> infinite sentinel
    z = z_scores(fr, mu, sd)
    assert z["joy"] == pytest.approx(2.0)
    assert z["fear"] == 0.0
    assert z["anger"] == math.inf
    assert z["sadness"] == 0.0  # 0 == 0 with sd 0


def test_flower_export_octet_order_and_flags(tmp_path):
    z = {e: 0.0 for e in EMOTIONS}
    z["sadness"] = 3.1
    z["joy"] = -2.5
    z["anger"] = -math.inf
    out = tmp_path / "flower.json"
    svg = tmp_path / "flower.svg"
    flower_export(z, out, svg_path=svg, metadata={"corpus": "x"})
    obj = json.loads(out.read_text())
    assert [p["emotion"] for p in obj["petals"]] == list(EMOTIONS)
    flags = {p["emotion"]: p["significant"] for p in obj["petals"]}
    assert flags["sadness"] and flags["joy"] and flags["anger"]
    assert not flags["trust"]
    byname = {p["emotion"]: p["z"] for p in obj["petals"]}
    assert byname["anger"] == "-inf"  # sentinel flagged in output
    assert obj["threshold"] == 1.96
    assert obj["metadata"] == {"corpus": "x"}

    root = ET.fromstring(svg.read_text())
    petals = [el for el in root.iter() if el.get("class") == "petal"]
    discs = [el for el in root.iter() if el.get("class") == "rejection"]
    assert len(petals) == 8 and len(discs) == 1


def test_flower_export_all_zero(tmp_path):
    z = {e: 0.0 for e in EMOTIONS}
    obj = flower_export(z, tmp_path / "f.json")
    assert all(not p["significant"] for p in obj["petals"])


def test_flower_export_requires_all_emotions(tmp_path):
    with pytest.raises(AnalysisError):
        flower_export({"joy": 1.0}, tmp_path / "f.json")


def test_flower_svg_is_deterministic():
    z = {e: float(i) - 3.5 for i, e in enumerate(EMOTIONS)}
    assert flower_svg(z) == flower_svg(z)


def test_build_profile_end_to_end(lexicon, reference_network):
    frame = semantic_frame(reference_network, "feel")
    prof = build_profile(frame, reference_network, lexicon, trials=300, seed=11)
    assert prof.trials == 300 and prof.seed == 11
    assert set(prof.z) == set(EMOTIONS)
    again = build_profile(frame, reference_network, lexicon, trials=300, seed=11)
    assert prof.z == again.z
