import math

import pytest
from hypothesis import given, strategies as st

from mailfeat.features.readability import (
    ReadabilityCounts,
    compute_readability_suite,
    fog_index,
    readability_counts,
)
from mailfeat.resources import load_lexicon
from mailfeat.textkit import count_syllables, tokenize

from oracles import readability_oracle, rel_close


def _counts(W, S, Sy, C, Sim, M, Ch, L):
    return ReadabilityCounts(n_words=W, n_sentences=S, n_syllables=Sy, n_complex_words=C,
                             n_simple_words=Sim, n_monosyllable_words=M, n_chars_in_words=Ch,
                             n_letters_in_words=L)


def _as_dict(c):
    return {"W": c.n_words, "S": c.n_sentences, "Sy": c.n_syllables, "C": c.n_complex_words,
            "Sim": c.n_simple_words, "M": c.n_monosyllable_words, "Ch": c.n_chars_in_words,
            "L": c.n_letters_in_words}


def test_three_word_sentence_counts():
    c = readability_counts(tokenize("The cat sat."))
    assert (c.n_words, c.n_sentences, c.n_syllables) == (3, 1, 3)
    assert (c.n_complex_words, c.n_simple_words, c.n_monosyllable_words) == (0, 3, 3)
    assert (c.n_chars_in_words, c.n_letters_in_words) == (9, 9)


def test_stopword_removal_keeps_sentence_count():
    tk = tokenize("The cat sat. It is on the mat.")
    full = readability_counts(tk)
    kept = readability_counts(tk, True, load_lexicon("stopwords"))
    assert kept.n_sentences == full.n_sentences == 2
    assert kept.n_words < full.n_words


def test_reference_counts():
    c = _counts(30, 3, 45, 6, 24, 18, 150, 150)
    r = compute_readability_suite(c, c)
    assert r["R07"] == pytest.approx(12.0)
    assert r["R09"] == pytest.approx(69.785)
    expected = readability_oracle(_as_dict(c), _as_dict(c))
    for i, e in enumerate(expected, 1):
        assert rel_close(r[f"R{i:02d}"], e), i


def test_zero_words_or_sentences_give_zero():
    for c in (ReadabilityCounts(), _counts(0, 2, 0, 0, 0, 0, 0, 0), _counts(5, 0, 5, 0, 5, 5, 20, 20)):
        r = compute_readability_suite(c, c)
        assert len(r) == 23
        assert all(v == 0 for v in r.values())


@st.composite
def counts(draw):
    W = draw(st.integers(1, 60))
    S = draw(st.integers(1, 60))
    syl = draw(st.lists(st.integers(1, 6), min_size=W, max_size=W))
    lengths = [draw(st.integers(max(1, s), 15)) for s in syl]
    L = sum(draw(st.integers(0, n)) for n in lengths)
    return _counts(W, S, sum(syl), sum(s >= 3 for s in syl), sum(s <= 2 for s in syl),
                   sum(s == 1 for s in syl), sum(lengths), L)


@given(counts(), counts())
def test_suite_matches_oracle(a, b):
    r = compute_readability_suite(a, b)
    expected = readability_oracle(_as_dict(a), _as_dict(b))
    for i, e in enumerate(expected, 1):
        assert rel_close(r[f"R{i:02d}"], e, rel=1e-9, abs_floor=1e-9), i
    assert all(math.isfinite(v) for v in r.values())


@given(counts())
def test_simple_fog_identity(c):
    r = compute_readability_suite(c, c)
    W = c.n_words
    assert r["R07"] - r["R17"] == pytest.approx(40 * (c.n_complex_words - c.n_simple_words) / W, abs=1e-9)
    assert fog_index(c) == pytest.approx(r["R07"])


_words = st.sampled_from(["the", "cat", "beautiful", "table", "elephant", "ran", "a", "understanding", "go"])


@given(st.lists(st.lists(_words, min_size=1, max_size=10), min_size=1, max_size=5))
def test_duplication_invariance(sents):
    text = " ".join(" ".join(s).capitalize() + "." for s in sents)
    stop = load_lexicon("stopwords")
    one = tokenize(text)
    two = tokenize(text + "\n\n" + text)
    r1 = compute_readability_suite(readability_counts(one), readability_counts(one, True, stop))
    r2 = compute_readability_suite(readability_counts(two), readability_counts(two, True, stop))
    for i in range(1, 5):  # simple and complex word counts double
        assert r2[f"R{i:02d}"] == 2 * r1[f"R{i:02d}"]
    for i in range(5, 24):  # every ratio-based index is unchanged
        assert r2[f"R{i:02d}"] == pytest.approx(r1[f"R{i:02d}"], rel=1e-9, abs=1e-12)


@given(st.text(max_size=300))
def test_suite_finite_on_any_text(text):
    tk = tokenize(text)
    r = compute_readability_suite(readability_counts(tk), readability_counts(tk, True))
    assert all(math.isfinite(v) for v in r.values())
    assert r["R01"] + r["R03"] == len(tk.tokens)


def test_syllables_feed_counts():
    tk = tokenize("Beautiful tables")
    c = readability_counts(tk)
    assert c.n_syllables == count_syllables("beautiful") + count_syllables("tables")
