"""Stemmer conformance against the frozen reference vectors and the
independent table-driven oracle."""

from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from porter_oracle import oracle_stem
from semframe.porter import porter_stem

REFERENCE = Path(__file__).parent / "data" / "porter_reference.tsv"


def load_reference():
    pairs = []
    for line in REFERENCE.read_text(encoding="utf-8").splitlines():
        word, stem = line.split("\t")
        pairs.append((word, stem))
    return pairs


def test_reference_file_is_large_enough():
    assert len(load_reference()) >= 20000


def test_full_conformance_against_reference_file():
    mismatches = [
        (w, expected, porter_stem(w))
        for w, expected in load_reference()
        if porter_stem(w) != expected
    ]
    assert mismatches == []


def test_idempotent_on_reference_stems():
    bad = [(w, s) for w, s in load_reference() if porter_stem(s) != s]
    assert bad == []


@pytest.mark.parametrize(
    "word,stem",
    [
        ("feelings", "feel"),
        ("feeling", "feel"),
        ("feels", "feel"),
        ("feel", "feel"),
        ("caresses", "caress"),
        ("ponies", "poni"),
        ("sadness", "sad"),
        ("sad", "sad"),
        ("happy", "happi"),
        ("happiness", "happi"),
        ("a", "a"),
        ("at", "at"),
        ("relational", "relat"),
        ("electriciti", "electr"),
        ("hopefulness", "hope"),
        ("controll", "control"),
    ],
)
def test_known_stems(word, stem):
    assert porter_stem(word) == stem


def test_non_alphabetic_returned_unchanged():
    assert porter_stem("x42y") == "x42y"
    assert porter_stem("can't") == "can't"
    assert porter_stem("") == ""
    assert porter_stem("cafés") == "cafés"


@settings(max_examples=500, deadline=None)
@given(st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=18))
def test_agrees_with_independent_oracle(word):
    assert porter_stem(word) == oracle_stem(word)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="aeiouybcdlmnstz", min_size=3, max_size=12))
def test_stem_never_longer_than_word(word):
    assert len(porter_stem(word)) <= len(word)
