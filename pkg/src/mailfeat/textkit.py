"""Deterministic text primitives shared by the payload extractors."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

__all__ = [
    "CharCounts",
    "HtmlStats",
    "TokenizedText",
    "WordShapeStats",
    "count_syllables",
    "html_tag_stats",
    "longest_run",
    "raw_words",
    "strip_html",
    "tokenize",
    "word_shape_stats",
]

_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")
# terminal punctuation run, optional closing quotes/brackets, then space or end
_BOUNDARY = re.compile(r"[.?!]+['\"’”)\]]*(?=\s|$)")
_PARAGRAPH_BREAK = re.compile(r"\n[^\S\n]*\n\s*")
_VOWEL_GROUP = re.compile(r"[aeiouy]+")


class CharCounts(NamedTuple):
    total_chars: int = 0
    alpha: int = 0
    digit: int = 0
    upper: int = 0
    lower: int = 0
    whitespace: int = 0
    tabs: int = 0
    special: int = 0


@dataclass(frozen=True)
class TokenizedText:
    """Tokens (case preserved) with sentence and paragraph spans.

    ``sentences`` holds half-open token ranges, ``paragraphs`` half-open
    sentence ranges.
    """

    tokens: tuple[str, ...] = ()
    sentences: tuple[tuple[int, int], ...] = ()
    paragraphs: tuple[tuple[int, int], ...] = ()
    char_counts: CharCounts = CharCounts()

    @property
    def lower_tokens(self) -> list[str]:
        return [t.lower() for t in self.tokens]

    def sentence_tokens(self) -> list[tuple[str, ...]]:
        return [self.tokens[a:b] for a, b in self.sentences]


def _char_counts(text: str) -> CharCounts:
    alpha = digit = upper = lower = ws = tabs = special = 0
    for ch in text:
        if ch.isalpha():
            alpha += 1
            if ch.isupper():
                upper += 1
            elif ch.islower():
                lower += 1
        elif ch.isdigit():
            digit += 1
        elif ch.isspace():
            ws += 1
            if ch == "\t":
                tabs += 1
        else:
            special += 1
    return CharCounts(len(text), alpha, digit, upper, lower, ws, tabs, special)


def _is_abbreviation(text: str, start: int, run: str) -> bool:
    # "J. Smith", "e.g. this": a lone letter before a single period
    if run != ".":
        return False
    if start < 1 or not text[start - 1].isalpha():
        return False
    return start < 2 or not text[start - 2].isalnum()


def tokenize(text: str) -> TokenizedText:
    """Split text into word tokens, sentences and paragraphs.

    A blank line ends both the paragraph and the sentence in progress.
    Sentences and paragraphs without any token are dropped, so every span
    is non-empty and together they cover all tokens.
    """
    tokens: list[str] = []
    sentences: list[tuple[int, int]] = []
    paragraphs: list[tuple[int, int]] = []

    pos = 0
    blocks = []
    for m in _PARAGRAPH_BREAK.finditer(text):
        blocks.append(text[pos:m.start()])
        pos = m.end()
    blocks.append(text[pos:])

    for block in blocks:
        para_start = len(sentences)
        matches = list(_TOKEN.finditer(block))
        cuts = [
            m.end() for m in _BOUNDARY.finditer(block)
            if not _is_abbreviation(block, m.start(), m.group().rstrip("'\"’”)]"))
        ]
        sent_start = len(tokens)
        ci = 0
        for m in matches:
            while ci < len(cuts) and cuts[ci] <= m.start():
                if len(tokens) > sent_start:
                    sentences.append((sent_start, len(tokens)))
                    sent_start = len(tokens)
                ci += 1
            tokens.append(m.group())
        if len(tokens) > sent_start:
            sentences.append((sent_start, len(tokens)))
        if len(sentences) > para_start:
            paragraphs.append((para_start, len(sentences)))

    return TokenizedText(tuple(tokens), tuple(sentences), tuple(paragraphs), _char_counts(text))


def raw_words(text: str) -> list[str]:
    """Whitespace-delimited chunks with case and punctuation kept."""
    return text.split()


def count_syllables(word: str) -> int:
    """Vowel-group syllable estimate with a silent-final-e rule and a floor of 1."""
    w = word.lower()
    if not any(ch.isalpha() for ch in w):
        return 1
    n = len(_VOWEL_GROUP.findall(w))
    if w.endswith("e") and not w.endswith("le"):
        n -= 1
    return max(n, 1)


def longest_run(s: str, pred=None) -> int:
    """Length of the longest run of equal characters (or of chars matching ``pred``)."""
    best = cur = 0
    prev = None
    for ch in s:
        if pred is None:
            cur = cur + 1 if ch == prev else 1
        else:
            cur = cur + 1 if pred(ch) else 0
        prev = ch
        best = max(best, cur)
    return best


@dataclass
class WordShapeStats:
    n_chars: int = 0
    n_capitalized_words: int = 0
    n_all_upper_words: int = 0
    n_digit_words: int = 0
    n_letter_only_words: int = 0
    n_alnum_mixed_words: int = 0
    n_single_letter_words: int = 0
    n_single_digit_words: int = 0
    n_single_char_words: int = 0
    max_upper_to_lower_ratio: float = 0.0
    min_char_diversity: float = 0.0
    max_upper_to_all_ratio: float = 0.0
    max_digit_to_all_ratio: float = 0.0
    max_nonalnum_to_all_ratio: float = 0.0
    max_repeated_char_run: int = 0
    max_word_length: int = 0


def word_shape_stats(words: Iterable[str], text: Optional[str] = None) -> WordShapeStats:
    """Per-word shape counts and extremes over case-preserved words.

    ``n_chars`` is ``len(text)`` when the source text is given, otherwise the
    summed word lengths. A word with no lowercase letters has an
    upper-to-lower ratio equal to its uppercase count.
    """
    words = [w for w in words if w]
    st = WordShapeStats()
    st.n_chars = len(text) if text is not None else sum(map(len, words))
    if not words:
        return st

    diversity = []
    for w in words:
        n = len(w)
        upper = sum(c.isupper() for c in w)
        lower = sum(c.islower() for c in w)
        digits = sum(c.isdigit() for c in w)
        nonalnum = sum(not c.isalnum() for c in w)
        has_alpha = any(c.isalpha() for c in w)

        st.n_capitalized_words += w[0].isupper()
        st.n_all_upper_words += w.isupper()
        st.n_digit_words += w.isdigit()
        st.n_letter_only_words += w.isalpha()
        st.n_alnum_mixed_words += w.isalnum() and has_alpha and digits > 0
        if n == 1:
            st.n_single_char_words += 1
            st.n_single_letter_words += w.isalpha()
            st.n_single_digit_words += w.isdigit()

        st.max_upper_to_lower_ratio = max(st.max_upper_to_lower_ratio, upper / (lower or 1))
        st.max_upper_to_all_ratio = max(st.max_upper_to_all_ratio, upper / n)
        st.max_digit_to_all_ratio = max(st.max_digit_to_all_ratio, digits / n)
        st.max_nonalnum_to_all_ratio = max(st.max_nonalnum_to_all_ratio, nonalnum / n)
        st.max_repeated_char_run = max(st.max_repeated_char_run, longest_run(w))
        st.max_word_length = max(st.max_word_length, n)
        diversity.append(len(set(w)) / n)

    st.min_char_diversity = min(diversity)
    return st


# --- HTML -------------------------------------------------------------------

_COMMENT = re.compile(r"<!--.*?(?:-->|$)", re.S)
_OPEN_TAG = re.compile(r"<([A-Za-z][A-Za-z0-9:_-]*)((?:\"[^\"]*\"|'[^']*'|[^'\">])*)>?")
_HREF = re.compile(r"""\bhref\s*=\s*(?:"([^"]*)"|'([^']*)'|([^\s"'>]+))""", re.I)


@dataclass(frozen=True)
class HtmlStats:
    n_anchors: int = 0
    n_unique_anchors: int = 0
    n_non_anchor_tags: int = 0
    n_images: int = 0
    n_all_tags: int = 0


def html_tag_stats(html: str) -> HtmlStats:
    """Count opening tags with a tolerant scan (no DOM).

    Anchors are keyed by trimmed, lowercased href; anchors without an href
    share one key. Comments and declarations are ignored.
    """
    if not html:
        return HtmlStats()
    html = _COMMENT.sub(" ", html)
    anchors = images = total = 0
    hrefs = set()
    for m in _OPEN_TAG.finditer(html):
        name = m.group(1).lower()
        total += 1
        if name == "a":
            anchors += 1
            h = _HREF.search(m.group(2) or "")
            hrefs.add(None if h is None else next(g for g in h.groups() if g is not None).strip().lower())
        elif name == "img":
            images += 1
    return HtmlStats(
        n_anchors=anchors,
        n_unique_anchors=len(hrefs),
        n_non_anchor_tags=total - anchors,
        n_images=images,
        n_all_tags=total,
    )


_SCRIPT_STYLE = re.compile(r"<(script|style)\b[^>]*>.*?(?:</\1\s*>|$)", re.S | re.I)
_BREAKS = re.compile(r"<br\b[^>]*>|</p\s*>|</div\s*>", re.I)
_ANY_TAG = re.compile(r"</?[A-Za-z!?][^>]*>?")
_ENTITY = re.compile(r"&(?:(amp|lt|gt|quot|nbsp)|#(\d+)|#[xX]([0-9A-Fa-f]+));?")
_NAMED = {"amp": "&", "lt": "<", "gt": ">", "quot": '"', "nbsp": " "}


def _codepoint(n: int) -> str:
    if n <= 0 or n > 0x10FFFF or 0xD800 <= n <= 0xDFFF:
        return "�"
    return chr(n)


def _entity(m: re.Match) -> str:
    named, dec, hexa = m.groups()
    if named:
        return _NAMED[named]
    return _codepoint(int(dec) if dec else int(hexa, 16))


def strip_html(html: str) -> str:
    """Visible text of an HTML fragment, newline at ``<br>``, ``</p>``, ``</div>``."""
    if not html:
        return ""
    text = _COMMENT.sub("", html)
    text = _SCRIPT_STYLE.sub("", text)
    text = _BREAKS.sub("\n", text)
    text = _ANY_TAG.sub("", text)
    text = _ENTITY.sub(_entity, text)
    return re.sub(r"[^\S\n]+", " ", text)
