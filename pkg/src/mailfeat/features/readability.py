"""Readability features R01-R23."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..resources import Lexicon, load_lexicon
from ..textkit import TokenizedText, count_syllables

__all__ = ["ReadabilityCounts", "compute_readability_suite", "readability_counts", "fog_index"]


@dataclass(frozen=True)
class ReadabilityCounts:
    n_words: int = 0
    n_sentences: int = 0
    n_chars_in_words: int = 0
    n_letters_in_words: int = 0
    n_syllables: int = 0
    n_simple_words: int = 0
    n_complex_words: int = 0
    n_monosyllable_words: int = 0
    stopwords_removed: bool = False


def readability_counts(tk: TokenizedText, drop_stopwords: bool = False,
                       stopwords: Optional[Lexicon] = None) -> ReadabilityCounts:
    """Word, syllable and character totals; sentence count is never filtered."""
    words = tk.lower_tokens
    if drop_stopwords:
        stop = (stopwords or load_lexicon("stopwords")).entries
        words = [w for w in words if w not in stop]
    syl = [count_syllables(w) for w in words]
    return ReadabilityCounts(
        n_words=len(words),
        n_sentences=len(tk.sentences),
        n_chars_in_words=sum(len(w) for w in words),
        n_letters_in_words=sum(c.isalpha() for w in words for c in w),
        n_syllables=sum(syl),
        n_simple_words=sum(s <= 2 for s in syl),
        n_complex_words=sum(s >= 3 for s in syl),
        n_monosyllable_words=sum(s == 1 for s in syl),
        stopwords_removed=drop_stopwords,
    )


def fog_index(c: ReadabilityCounts) -> float:
    W, S = c.n_words, c.n_sentences
    if not W or not S:
        return 0.0
    return 0.4 * (W / S + 100 * c.n_complex_words / W)


def _family(c: ReadabilityCounts) -> list[float]:
    """The ten indices reported for both the full and the stopword-free counts."""
    W, S = c.n_words, c.n_sentences
    if not W or not S:
        return [0.0] * 10
    Sy, C, Sim, M = c.n_syllables, c.n_complex_words, c.n_simple_words, c.n_monosyllable_words
    fi = fog_index(c)
    return [
        float(Sim),
        float(C),
        Sy / W,
        fi,
        206.835 - 1.015 * (W / S) - 84.6 * (Sy / W),
        1.0430 * math.sqrt(C * 30 / S) + 3.1291,
        20 - (M * 150 / W) / 10,
        0.39 * (W / S) + 11.8 * (Sy / W) - 15.59,
        0.4 * (W / S + 100 * Sim / W),
        1 / fi if fi > 0 else 0.0,
    ]


def compute_readability_suite(with_sw: ReadabilityCounts, without_sw: ReadabilityCounts) -> dict:
    """R01..R23: ten paired indices (with, without stopwords), then SMOG-I, ARI, CLI."""
    values = []
    for a, b in zip(_family(with_sw), _family(without_sw)):
        values += [a, b]

    W, S = with_sw.n_words, with_sw.n_sentences
    if W and S:
        C, Ch, L = with_sw.n_complex_words, with_sw.n_chars_in_words, with_sw.n_letters_in_words
        values += [
            3 + math.sqrt(C * 30 / S),
            4.71 * (Ch / W) + 0.5 * (W / S) - 21.43,
            0.0588 * (100 * L / W) - 0.296 * (100 * S / W) - 15.8,
        ]
    else:
        values += [0.0, 0.0, 0.0]
    return {f"R{i:02d}": v for i, v in enumerate(values, 1)}
