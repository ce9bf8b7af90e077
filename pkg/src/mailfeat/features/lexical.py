"""Lexical diversity features L01-L07 from the token frequency spectrum."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

__all__ = ["FrequencySpectrum", "compute_lexical_suite", "frequency_spectrum"]

HONORE_MIN_DENOMINATOR = 0.01


@dataclass(frozen=True)
class FrequencySpectrum:
    N: int = 0
    V: int = 0
    spectrum: dict[int, int] = field(default_factory=dict)  # i -> V(i, N)

    def v(self, i: int) -> int:
        return self.spectrum.get(i, 0)


def frequency_spectrum(tokens: Iterable[str]) -> FrequencySpectrum:
    counts = Counter(t.lower() for t in tokens)
    spectrum = Counter(counts.values())
    return FrequencySpectrum(
        N=sum(counts.values()),
        V=len(counts),
        spectrum=dict(sorted(spectrum.items())),
    )


def compute_lexical_suite(fs: FrequencySpectrum) -> dict:
    """Vocabulary size, hapax/dislegomena, entropy (bits), Yule's K, Sichel's S, Honore's R."""
    N, V = fs.N, fs.V
    if N == 0:
        return {f"L{i:02d}": 0 if i <= 3 else 0.0 for i in range(1, 8)}
    v1, v2 = fs.v(1), fs.v(2)
    entropy = -sum(vi * (i / N) * math.log2(i / N) for i, vi in fs.spectrum.items())
    m2 = sum(i * i * vi for i, vi in fs.spectrum.items())
    yule_k = 1e4 * (m2 - N) / (N * N)
    honore = 100 * math.log(N) / max(1 - v1 / V, HONORE_MIN_DENOMINATOR)
    return {
        "L01": V,
        "L02": v1,
        "L03": v2,
        "L04": max(entropy, 0.0),
        "L05": yule_k,
        "L06": v2 / V,
        "L07": honore,
    }
