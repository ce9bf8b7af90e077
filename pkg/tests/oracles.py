"""Brute-force reference computations, kept independent of the package code."""

import math
from fractions import Fraction


def readability_oracle(with_sw, without_sw):
    """Both args are dicts W, S, Sy, C, Sim, M, Ch, L. Exact rationals where possible."""

    def paired(c):
        W, S = c["W"], c["S"]
        if W == 0 or S == 0:
            return [0.0] * 10
        wps = Fraction(W, S)
        spw = Fraction(c["Sy"], W)
        fog = Fraction(2, 5) * (wps + Fraction(100 * c["C"], W))
        return [
            float(c["Sim"]),
            float(c["C"]),
            float(spw),
            float(fog),
            float(Fraction("206.835") - Fraction("1.015") * wps - Fraction("84.6") * spw),
            1.0430 * math.sqrt(30.0 * c["C"] / S) + 3.1291,
            float(20 - Fraction(150 * c["M"], W) / 10),
            float(Fraction("0.39") * wps + Fraction("11.8") * spw - Fraction("15.59")),
            float(Fraction(2, 5) * (wps + Fraction(100 * c["Sim"], W))),
            float(1 / fog) if fog > 0 else 0.0,
        ]

    out = []
    for a, b in zip(paired(with_sw), paired(without_sw)):
        out += [a, b]
    c = with_sw
    if c["W"] == 0 or c["S"] == 0:
        return out + [0.0, 0.0, 0.0]
    W, S = c["W"], c["S"]
    out.append(3 + math.sqrt(30.0 * c["C"] / S))
    out.append(float(Fraction("4.71") * Fraction(c["Ch"], W) + Fraction(W, 2 * S) - Fraction("21.43")))
    out.append(float(Fraction("0.0588") * Fraction(100 * c["L"], W)
                     - Fraction("0.296") * Fraction(100 * S, W) - Fraction("15.8")))
    return out


def lexical_oracle(tokens):
    """[V, V1, V2, entropy_bits, yule_k, sichel_s, honore_r] by direct counting."""
    toks = [t.lower() for t in tokens]
    N = len(toks)
    if N == 0:
        return [0, 0, 0, 0.0, 0.0, 0.0, 0.0]
    types = sorted(set(toks))
    freq = {t: toks.count(t) for t in types}
    V = len(types)
    v1 = sum(1 for t in types if freq[t] == 1)
    v2 = sum(1 for t in types if freq[t] == 2)
    entropy = 0.0
    for t in types:
        p = freq[t] / N
        entropy -= p * math.log(p, 2)
    s2 = sum(freq[t] ** 2 for t in types)
    yule = float(Fraction(10000 * (s2 - N), N * N))
    denom = 1 - v1 / V
    if denom < 0.01:
        denom = 0.01
    honore = 100 * math.log(N) / denom
    return [V, v1, v2, entropy, yule, v2 / V, honore]


def tfisf_oracle(sentences, stopwords=()):
    """sentences: list of lists of lowercase terms."""
    S = len(sentences)
    if S == 0:
        return 0.0
    sents = [[t for t in s if t not in stopwords] for s in sentences]
    terms = sorted({t for s in sents for t in s})
    if not terms:
        return 0.0
    total = 0.0
    for t in terms:
        tf = sum(s.count(t) for s in sents)
        sf = sum(1 for s in sents if t in s)
        total += tf * math.log(S / sf)
    return total / len(terms)


def rel_close(a, b, rel=1e-9, abs_floor=1e-12):
    return abs(a - b) <= max(rel * max(abs(a), abs(b)), abs_floor)
