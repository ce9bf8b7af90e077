"""Header features H01-H49: date parts, domain flags, structure, subject shape."""

from __future__ import annotations

from dataclasses import dataclass
from email.utils import parsedate_tz
from typing import Iterable, Optional

from ..eml import Address, ParsedEmail, parse_address_list
from ..resources import DomainKeywordTable, load_domain_table
from ..textkit import raw_words, word_shape_stats

__all__ = ["DateParts", "domain_flag", "extract_header_features", "parse_date_header"]


@dataclass(frozen=True)
class DateParts:
    year: int = 0
    month: int = 0
    day: int = 0
    hour: int = 0
    minute: int = 0
    second: int = 0
    valid: bool = False


_INVALID = DateParts()


def parse_date_header(value: Optional[str]) -> DateParts:
    """Split a Date header into the sender's literal clock fields.

    The zone offset is parsed but not applied. Anything unparseable, or with
    out-of-range fields, comes back as all zeros with ``valid=False``.
    """
    if not value:
        return _INVALID
    try:
        parsed = parsedate_tz(value)
    except Exception:
        return _INVALID
    if parsed is None:
        return _INVALID
    year, month, day, hour, minute, second = parsed[:6]
    if not (1 <= month <= 12 and 1 <= day <= 31 and 0 <= hour <= 23
            and 0 <= minute <= 59 and 0 <= second <= 60 and year > 0):
        return _INVALID
    return DateParts(year, month, day, hour, minute, second, True)


def _domain_matches(domain: str, pattern: str) -> bool:
    if pattern.startswith("."):
        label = pattern[1:]
        return domain.endswith(pattern) or label in domain.split(".")
    return pattern in domain


def domain_flag(addrs: Iterable, keyword: str, table: Optional[DomainKeywordTable] = None) -> int:
    """1 if any address's domain matches one of the keyword's patterns.

    ``addrs`` may hold :class:`Address` tuples or bare addr-spec strings.
    Malformed addresses (not exactly one ``@``) are only searched, as whole
    strings, for the ``localhost`` keyword.
    """
    table = table or load_domain_table()
    patterns = table[keyword]
    for a in addrs:
        spec = a.addr_spec if isinstance(a, Address) else str(a)
        if spec.count("@") != 1:
            if keyword == "localhost" and any(p.lstrip(".") in spec.lower() for p in patterns):
                return 1
            continue
        domain = spec.rsplit("@", 1)[1].strip().lower()
        if any(_domain_matches(domain, p) for p in patterns):
            return 1
    return 0


_FROM_KEYS = ("google", "aol", "gov", "hotmail", "mil", "yahoo", "example")  # H07-H13
_TO_KEYS = ("hotmail", "yahoo", "example", "msn", "localhost", "google", "aol", "gov", "mil")  # H14-H22
_REPLY_KEYS = ("google", "hotmail", "mil", "yahoo", "aol", "gov")  # H24-H29


def _subject_features(subject: str) -> list:
    st = word_shape_stats(raw_words(subject), text=subject)
    return [
        st.n_chars, st.n_capitalized_words, st.n_all_upper_words, st.n_digit_words,
        st.n_letter_only_words, st.n_alnum_mixed_words, st.n_single_letter_words,
        st.n_single_digit_words, st.n_single_char_words, st.max_upper_to_lower_ratio,
        st.min_char_diversity, st.max_upper_to_all_ratio, st.max_digit_to_all_ratio,
        st.max_nonalnum_to_all_ratio, st.max_repeated_char_run, st.max_word_length,
    ]


def extract_header_features(email: ParsedEmail, domains: Optional[DomainKeywordTable] = None) -> dict:
    domains = domains or load_domain_table()
    parts = email.parts
    date = parse_date_header(email.header("Date"))
    reply_to = parse_address_list(email.header("Reply-To"))
    types = email.content_types()

    values = [date.year, date.month, date.day, date.hour, date.minute, date.second]
    values += [domain_flag(parts.from_addr, k, domains) for k in _FROM_KEYS]
    values += [domain_flag(parts.to_addrs, k, domains) for k in _TO_KEYS]
    values.append(len(parts.to_addrs))
    values += [domain_flag(reply_to, k, domains) for k in _REPLY_KEYS]
    values.append(int(email.header("X-Mailman-Version") is not None))
    values += [int(t in types) for t in ("text/plain", "multipart/mixed", "multipart/alternative")]
    values += _subject_features(parts.subject)
    assert len(values) == 49
    return {f"H{i:02d}": v for i, v in enumerate(values, 1)}
