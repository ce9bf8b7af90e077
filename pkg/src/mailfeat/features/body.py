"""Body features B01-B59 over the analysis text and the raw HTML part."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from ..eml import EmailParts
from ..resources import Lexicon, Resources, load_lexicon
from ..textkit import (
    TokenizedText,
    html_tag_stats,
    longest_run,
    raw_words,
    strip_html,
    tokenize,
    word_shape_stats,
)

__all__ = ["AnalysisText", "analysis_text", "count_lexicon_hits", "extract_body_features", "tf_isf"]


@dataclass(frozen=True)
class AnalysisText:
    text: str
    tk: TokenizedText


def analysis_text(parts: EmailParts) -> AnalysisText:
    """Plain-text body when it has content, else the stripped HTML body."""
    text = parts.text_body if parts.text_body.strip() else strip_html(parts.html_body)
    return AnalysisText(text, tokenize(text))


def count_lexicon_hits(tk: TokenizedText, lex: Lexicon) -> int:
    """Occurrences of lexicon entries, with multiplicity.

    Multi-word entries match contiguous lowercase token runs; overlapping
    matches of different entries each count.
    """
    toks = tk.lower_tokens
    by_len: dict[int, set] = {}
    for seq in lex.sequences:
        by_len.setdefault(len(seq), set()).add(seq)
    hits = 0
    for n, seqs in by_len.items():
        for i in range(len(toks) - n + 1):
            if tuple(toks[i:i + n]) in seqs:
                hits += 1
    return hits


def tf_isf(tk: TokenizedText, drop_stopwords: bool = False, stopwords: Optional[Lexicon] = None) -> float:
    """Mean over distinct terms of ``tf * ln(S / sf)``.

    ``S`` is the sentence count of the original segmentation and ``sf`` the
    number of sentences containing the term. Stopword removal only filters
    the terms.
    """
    n_sent = len(tk.sentences)
    if n_sent == 0:
        return 0.0
    stop = frozenset()
    if drop_stopwords:
        stop = (stopwords or load_lexicon("stopwords")).entries
    tf: Counter = Counter()
    sf: Counter = Counter()
    for sent in tk.sentence_tokens():
        terms = [t.lower() for t in sent if t.lower() not in stop]
        tf.update(terms)
        sf.update(set(terms))
    if not tf:
        return 0.0
    return sum(tf[t] * math.log(n_sent / sf[t]) for t in tf) / len(tf)


def _avg(num: float, den: float) -> float:
    return num / den if den else 0.0


def extract_body_features(parts: EmailParts, at: Optional[AnalysisText] = None,
                          resources: Optional[Resources] = None) -> dict:
    res = resources or Resources()
    at = at or analysis_text(parts)
    text, tk = at.text, at.tk
    cc = tk.char_counts
    html = html_tag_stats(parts.html_body)
    words = raw_words(text)
    shape = word_shape_stats(words)
    tokens = tk.tokens
    n_tok = len(tokens)
    lengths = [len(t) for t in tokens]
    n_sent = len(tk.sentences)
    n_para = len(tk.paragraphs)
    starts = [s[0][0] for s in tk.sentence_tokens()]

    values = [
        count_lexicon_hits(tk, res.spam_words),
        count_lexicon_hits(tk, res.function_words),
        html.n_anchors,
        html.n_unique_anchors,
        html.n_non_anchor_tags,
        html.n_images,
        html.n_all_tags,
        shape.n_alnum_mixed_words,
        tf_isf(tk, False),
        tf_isf(tk, True, res.stopwords),
        n_tok - len(set(tk.lower_tokens)),
        min(lengths, default=0),
        cc.lower,
        longest_run(text, str.isupper),
        len(text.splitlines()),
        cc.digit,
        cc.whitespace,
        cc.upper,
        cc.total_chars,
        cc.tabs,
        cc.special,
        cc.alpha,
        n_tok,
        _avg(sum(lengths), n_tok),
        sum(n > 6 for n in lengths),
        sum(1 <= n <= 3 for n in lengths),
        text.count("'"),
        text.count(","),
        text.count("."),
        text.count(";"),
        text.count("?"),
        len(re.findall(r"\?{2,}", text)),
        text.count("!"),
        len(re.findall(r"!{2,}", text)),
        text.count(":"),
        len(re.findall(r"\.{3,}", text)),
        n_sent,
        n_para,
        _avg(n_sent, n_para),
        _avg(n_tok, n_para),
        _avg(cc.total_chars, n_para),
        _avg(n_tok, n_sent),
        sum(s.isupper() for s in starts),
        sum(s.islower() for s in starts),
        text.count("$"),
        shape.n_capitalized_words,
        shape.n_all_upper_words,
        shape.n_digit_words,
        shape.n_letter_only_words,
        shape.n_single_letter_words,
        shape.n_single_digit_words,
        shape.n_single_char_words,
        shape.max_upper_to_lower_ratio,
        shape.min_char_diversity,
        shape.max_upper_to_all_ratio,
        shape.max_digit_to_all_ratio,
        shape.max_nonalnum_to_all_ratio,
        shape.max_repeated_char_run,
        shape.max_word_length,
    ]
    assert len(values) == 59
    return {f"B{i:02d}": v for i, v in enumerate(values, 1)}
