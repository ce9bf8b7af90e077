import math
import random

import pytest
from hypothesis import given, strategies as st

from mailfeat.features.lexical import compute_lexical_suite, frequency_spectrum

from oracles import lexical_oracle, rel_close


def _suite(tokens):
    return compute_lexical_suite(frequency_spectrum(tokens))


def _values(tokens):
    r = _suite(tokens)
    return [r[f"L0{i}"] for i in range(1, 8)]


def test_aba():
    r = _suite(["a", "b", "a"])
    assert (r["L01"], r["L02"], r["L03"]) == (2, 1, 1)
    assert r["L04"] == pytest.approx(-(2 / 3) * math.log2(2 / 3) - (1 / 3) * math.log2(1 / 3))
    assert r["L05"] == pytest.approx(1e4 * 2 / 9)
    assert r["L06"] == 0.5
    assert r["L07"] == pytest.approx(200 * math.log(3))


def test_single_type():
    r = _suite(["a"] * 4)
    assert r["L05"] == 7500
    assert r["L04"] == 0
    assert r["L06"] == 0
    assert r["L07"] == pytest.approx(100 * math.log(4))


def test_all_hapax_clamps_honore():
    r = _suite(list("abcd"))
    assert r["L04"] == pytest.approx(2.0)
    assert r["L05"] == 0
    assert r["L07"] == pytest.approx(100 * math.log(4) / 0.01)
    assert math.isfinite(r["L07"])


def test_empty():
    assert _values([]) == [0, 0, 0, 0, 0, 0, 0]


def test_case_folding():
    assert _values(["The", "the", "THE"]) == _values(["the"] * 3)


def test_200_token_brute_force():
    rng = random.Random(7)
    tokens = [rng.choice("alpha beta gamma delta eps zeta eta theta iota kappa lam mu".split())
              for _ in range(200)]
    for got, want in zip(_values(tokens), lexical_oracle(tokens)):
        assert rel_close(got, want)


_tokens = st.lists(st.sampled_from(list("abcdefghij") + ["Ab", "AB"]), max_size=80)


@given(_tokens)
def test_matches_oracle(tokens):
    for got, want in zip(_values(tokens), lexical_oracle(tokens)):
        assert rel_close(got, want, abs_floor=1e-9)


@given(_tokens)
def test_spectrum_identities(tokens):
    fs = frequency_spectrum(tokens)
    assert sum(fs.spectrum.values()) == fs.V
    assert sum(i * v for i, v in fs.spectrum.items()) == fs.N == len(tokens)
    r = compute_lexical_suite(fs)
    assert r["L02"] + r["L03"] <= r["L01"]
    if fs.V:
        assert -1e-12 <= r["L04"] <= math.log2(fs.V) + 1e-12
        assert r["L05"] >= 0


@given(_tokens, st.randoms(use_true_random=False))
def test_relabeling_invariance(tokens, rnd):
    vocab = sorted({t.lower() for t in tokens})
    fresh = [f"w{i}" for i in range(len(vocab))]
    rnd.shuffle(fresh)
    mapping = dict(zip(vocab, fresh))
    renamed = [mapping[t.lower()] for t in tokens]
    rnd.shuffle(renamed)
    for a, b in zip(_values(tokens), _values(renamed)):
        assert rel_close(a, b, abs_floor=1e-9)


@given(_tokens.filter(bool))
def test_duplication(tokens):
    one, two = _suite(tokens), _suite(tokens + tokens)
    assert two["L01"] == one["L01"]
    assert two["L02"] == 0
    assert two["L03"] == one["L02"]
    assert two["L04"] == pytest.approx(one["L04"], abs=1e-9)
