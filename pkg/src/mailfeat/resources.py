"""Lexicons, stopwords and the domain keyword table, with file loaders."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources as importlib_resources
from pathlib import Path
from typing import Mapping, Optional, Union

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from .textkit import tokenize

__all__ = [
    "DOMAIN_KEYWORDS",
    "DomainKeywordTable",
    "Lexicon",
    "ResourceError",
    "Resources",
    "load_domain_table",
    "load_lexicon",
]

DOMAIN_KEYWORDS = ("google", "aol", "gov", "hotmail", "mil", "yahoo", "example", "msn", "localhost")

PathLike = Union[str, Path]


class ResourceError(ValueError):
    """A lexicon or config file is missing or unusable."""


@dataclass(frozen=True)
class Lexicon:
    """Lowercase entries; multi-word entries are stored as token tuples."""

    name: str
    entries: frozenset[str]
    source_path: Optional[str] = None

    @cached_property
    def sequences(self) -> frozenset[tuple[str, ...]]:
        out = set()
        for entry in self.entries:
            toks = tuple(t.lower() for t in tokenize(entry).tokens)
            if toks:
                out.add(toks)
        return frozenset(out)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries


def _read_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.lower())
    return out


def load_lexicon(name: str, path: Optional[PathLike] = None) -> Lexicon:
    """Load a one-entry-per-line list; ``path=None`` loads the shipped ``<name>.txt``."""
    if path is None:
        text = importlib_resources.files("mailfeat.data").joinpath(f"{name}.txt").read_text("utf-8")
        source = f"mailfeat/data/{name}.txt"
    else:
        try:
            text = Path(path).read_text("utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ResourceError(f"cannot read {name} list {path}: {exc}") from exc
        source = str(path)
    entries = _read_lines(text)
    if not entries:
        raise ResourceError(f"{name} list {source} has no entries")
    return Lexicon(name, frozenset(entries), source)


@dataclass(frozen=True)
class DomainKeywordTable:
    patterns: Mapping[str, tuple[str, ...]]

    def __getitem__(self, keyword: str) -> tuple[str, ...]:
        return self.patterns[keyword]


def load_domain_table(path: Optional[PathLike] = None) -> DomainKeywordTable:
    """Read the keyword table; a user file overrides only the keys it names."""
    default = importlib_resources.files("mailfeat.data").joinpath("domains.toml").read_text("utf-8")
    table = {k: tuple(v) for k, v in tomllib.loads(default).items()}
    if path is not None:
        try:
            user = tomllib.loads(Path(path).read_text("utf-8"))
        except (OSError, UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
            raise ResourceError(f"cannot read domain table {path}: {exc}") from exc
        for key, value in user.items():
            key = key.lower()
            if key not in DOMAIN_KEYWORDS:
                raise ResourceError(f"unknown domain keyword {key!r} in {path}")
            if isinstance(value, str):
                value = [value]
            if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
                raise ResourceError(f"domain keyword {key!r} must map to a list of strings")
            table[key] = tuple(v.strip().lower() for v in value if v.strip())
    return DomainKeywordTable(table)


@dataclass(frozen=True)
class Resources:
    """Everything the extractors read besides the email itself. Immutable."""

    spam_words: Lexicon = field(default_factory=lambda: load_lexicon("spam_words"))
    function_words: Lexicon = field(default_factory=lambda: load_lexicon("function_words"))
    stopwords: Lexicon = field(default_factory=lambda: load_lexicon("stopwords"))
    domains: DomainKeywordTable = field(default_factory=load_domain_table)

    @classmethod
    def load(cls, spam_words: Optional[PathLike] = None, function_words: Optional[PathLike] = None,
             stopwords: Optional[PathLike] = None, domains: Optional[PathLike] = None) -> "Resources":
        return cls(
            spam_words=load_lexicon("spam_words", spam_words),
            function_words=load_lexicon("function_words", function_words),
            stopwords=load_lexicon("stopwords", stopwords),
            domains=load_domain_table(domains),
        )
