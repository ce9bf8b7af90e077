"""The registry of all 140 features: IDs, labels, groups and selection."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable

__all__ = [
    "GROUPS",
    "FeatureCatalog",
    "FeatureDef",
    "UnknownSelector",
    "catalog_json",
    "catalog_markdown",
    "full_catalog",
    "resolve_selection",
]

BOOL = "boolean01"
COUNT = "count"
REAL = "real"

GROUPS = ("HeaderMetadata", "HeaderSubject", "Body", "Readability", "Lexical", "Attachment")
# umbrella names following the header / payload / attachment hierarchy
ALIASES = {
    "header": ("HeaderMetadata", "HeaderSubject"),
    "payload": ("Body", "Readability", "Lexical"),
}


class UnknownSelector(ValueError):
    def __init__(self, name: str):
        super().__init__(f"unknown feature group or id: {name!r}")
        self.name = name


@dataclass(frozen=True)
class FeatureDef:
    id: str
    name: str
    group: str
    value_kind: str
    source: str  # which published list the label comes from
    row: int  # 1-based position within that list


_HEADER_ROWS = [
    ("Year", COUNT), ("Month", COUNT), ("Day", COUNT), ("Hour", COUNT),
    ("Minute", COUNT), ("Second", COUNT),
    ("From Google?", BOOL), ("From AOL?", BOOL), ("From Gov?", BOOL),
    ("From HTML?", BOOL), ("From MIL?", BOOL), ("From Yahoo?", BOOL),
    ("From Example?", BOOL),
    ("To Hotmail?", BOOL), ("To Yahoo?", BOOL), ("To Example?", BOOL),
    ("To MSN?", BOOL), ("To Localhost?", BOOL), ("To Google?", BOOL),
    ("To AOL?", BOOL), ("To Gov?", BOOL), ("To MIL?", BOOL),
    ("Count of “To” Email", COUNT),
    ("Replay to Google?", BOOL), ("Replay to Hotmail?", BOOL), ("Replay to MIL?", BOOL),
    ("Replay to Yahoo?", BOOL), ("Replay to AOL?", BOOL), ("Replay to Gov?", BOOL),
    ("X-Mailman-Version", BOOL),
    ("Exist Text/Plain?", BOOL), ("Exist Multipart/Mixed?", BOOL),
    ("Exist Multipart/Alternative?", BOOL),
    # subject rows start here (row 34)
    ("No. of characters.", COUNT),
    ("No. of capitalised words.", COUNT),
    ("No. of words in all uppercase.", COUNT),
    ("No. of words that are digits.", COUNT),
    ("No. of words containing only letters.", COUNT),
    ("No. of words containing letters and numbers.", COUNT),
    ("No. of words that are single letters.", COUNT),
    ("No. of words that are single digits.", COUNT),
    ("No. of words that are single characters.", COUNT),
    ("Max ratio of uppercase to lowercase letters of each word", REAL),
    ("Min character diversity of each word.", REAL),
    ("Max ratio of uppercase letters to all characters of each word.", REAL),
    ("Max ratio of digit characters to all characters of each word.", REAL),
    ("Max ratio of non-alphanumerics to all characters of each word", REAL),
    ("Max of the longest repeated character.", COUNT),
    ("Max of the character lengths of words.", COUNT),
]
_FIRST_SUBJECT_ROW = 34

_BODY_ROWS = [
    ("Count of Spam Words", COUNT),
    ("Count of Function Words", COUNT),
    ("Count of HTML Anchor", COUNT),
    ("Count of Unique HTML Anchor", COUNT),
    ("Count of HTML Not Anchor", COUNT),
    ("Count of HTML Image", COUNT),
    ("Count of HTML All Tags", COUNT),
    ("Count of Alpha-numeric Words", COUNT),
    ("TF-ISF", REAL),
    ("TF•ISF without stopwords", REAL),
    ("Count of duplicate words.", COUNT),
    ("Minimum word length", COUNT),
    ("Count of lowercase letters", COUNT),
    ("Longest sequence of adjacent capital letters", COUNT),
    ("Count of lines", COUNT),
    ("Total No. of digit character", COUNT),
    ("Total No. of white space", COUNT),
    ("Total No. of upper case character", COUNT),
    ("Total No. of characters", COUNT),
    ("Total No. of tabs", COUNT),
    ("Total No. of special characters", COUNT),
    ("Total number of alpha characters", COUNT),
    ("Total No. of words", COUNT),
    ("Average word length", REAL),
    ("Words longer than 6 characters", COUNT),
    ("Total No. of words (1 - 3 Characters)", COUNT),
    ("No. of single quotes", COUNT),
    ("No. of commas", COUNT),
    ("No. of periods", COUNT),
    ("No. of semi-colons", COUNT),
    ("Number of question marks", COUNT),
    ("No. of multiple question marks", COUNT),
    ("No. of exclamation marks", COUNT),
    ("No. of multiple exclamation marks", COUNT),
    ("No. of colons", COUNT),
    ("No. of ellipsis", COUNT),
    ("Total No. of sentences", COUNT),
    ("Total No. of paragraphs", COUNT),
    ("Average No. of sentences per paragraph", REAL),
    ("Average number of words pre paragraph", REAL),
    ("Average No. of character per paragraph", REAL),
    ("Average No. of word per sentences", REAL),
    ("No. of sentence begin with upper case", COUNT),
    ("No. of sentence begin with lower case", COUNT),
    ("Character frequency “$”", COUNT),
    ("No. of capitalized words.", COUNT),
    ("No. of words in all uppercase.", COUNT),
    ("Number of words that are digits.", COUNT),
    ("No. of words containing only letters.", COUNT),
    ("No. of words that are single letters.", COUNT),
    ("No. of words that are single digits.", COUNT),
    ("Number of words that are single characters.", COUNT),
    ("Max ratio of uppercase letters to lowercase letters of each word.", REAL),
    ("Min of character diversity of each word.", REAL),
    ("Max ratio of uppercase letters to all characters of each word.", REAL),
    ("Max ratio of digit characters to all characters of each word.", REAL),
    ("Max ratio of non-alphanumerics to all characters of each word.", REAL),
    ("Max of the longest repeating character.", COUNT),
    ("Max of the character lengths of words.", COUNT),
]


def _pair(label: str, kind: str) -> list[tuple[str, str]]:
    return [(f"{label} (with stopwords)", kind), (f"{label} (without stopwords)", kind)]


_READABILITY_ROWS = [
    *_pair("Number of simple words", COUNT),
    *_pair("Number of complex words", COUNT),
    *_pair("Word length", REAL),
    *_pair("Fog Index (FI)", REAL),
    *_pair("Flesch Reading Ease Score (FRES)", REAL),
    *_pair("SMOG index", REAL),
    *_pair("FORCAST index", REAL),
    *_pair("Flesch-Kincaid Readability Index (FKRI)", REAL),
    *_pair("Simple Word FI", REAL),
    *_pair("Inverse FI", REAL),
    ("SMOG-I", REAL),
    ("Automated Readability Index (ARI)", REAL),
    ("Coleman-Liau Index (CLI)", REAL),
]

_LEXICAL_ROWS = [
    ("Vocabulary Richness", COUNT),
    ("Hapax legomena", COUNT),
    ("Hapax dislegomena", COUNT),
    ("Entropy", REAL),
    ("YuleK", REAL),
    ("SichelS", REAL),
    ("Honore", REAL),
]

_ATTACHMENT_ROWS = [
    ("Number of all attachment files", COUNT),
    ("Number of unique content types of attachment files", COUNT),
]


@dataclass(frozen=True)
class FeatureCatalog:
    defs: tuple[FeatureDef, ...]

    def __len__(self) -> int:
        return len(self.defs)

    def __iter__(self):
        return iter(self.defs)

    def __getitem__(self, feature_id: str) -> FeatureDef:
        return self.by_id[feature_id]

    @property
    def by_id(self) -> dict[str, FeatureDef]:
        return {d.id: d for d in self.defs}

    @property
    def ids(self) -> list[str]:
        return [d.id for d in self.defs]

    def group(self, *groups: str) -> list[FeatureDef]:
        return [d for d in self.defs if d.group in groups]


@lru_cache(maxsize=None)
def full_catalog() -> FeatureCatalog:
    defs = []
    for i, (name, kind) in enumerate(_HEADER_ROWS, 1):
        group = "HeaderSubject" if i >= _FIRST_SUBJECT_ROW else "HeaderMetadata"
        defs.append(FeatureDef(f"H{i:02d}", name, group, kind, "header", i))
    for i, (name, kind) in enumerate(_BODY_ROWS, 1):
        defs.append(FeatureDef(f"B{i:02d}", name, "Body", kind, "body", i))
    for i, (name, kind) in enumerate(_READABILITY_ROWS, 1):
        defs.append(FeatureDef(f"R{i:02d}", name, "Readability", kind, "readability", i))
    for i, (name, kind) in enumerate(_LEXICAL_ROWS, 1):
        defs.append(FeatureDef(f"L{i:02d}", name, "Lexical", kind, "lexical", i))
    for i, (name, kind) in enumerate(_ATTACHMENT_ROWS, 1):
        defs.append(FeatureDef(f"A{i:02d}", name, "Attachment", kind, "attachment", i))
    return FeatureCatalog(tuple(defs))


def resolve_selection(selectors: Iterable[str]) -> list[FeatureDef]:
    """Expand group names and feature IDs into catalog-ordered definitions.

    Matching is case-insensitive. An empty list selects everything; any
    unknown entry raises :class:`UnknownSelector`.
    """
    cat = full_catalog()
    groups = {g.lower(): (g,) for g in GROUPS}
    groups.update(ALIASES)
    ids = {d.id.lower(): d.id for d in cat}

    wanted: set[str] = set()
    empty = True
    for raw in selectors:
        key = raw.strip().lower()
        if not key:
            continue
        empty = False
        if key in ids:
            wanted.add(ids[key])
        elif key in groups:
            wanted.update(d.id for d in cat.group(*groups[key]))
        else:
            raise UnknownSelector(raw)
    if empty:
        return list(cat.defs)
    return [d for d in cat if d.id in wanted]


def catalog_json(defs: Iterable[FeatureDef] = None, indent: int = 2) -> str:
    """The ``features.json`` dump: id, name, group, value_kind per feature."""
    defs = full_catalog().defs if defs is None else defs
    keep = ("id", "name", "group", "value_kind")
    return json.dumps([{k: asdict(d)[k] for k in keep} for d in defs], indent=indent, ensure_ascii=False)


# computation notes for the feature dictionary, where the label alone is ambiguous
NOTES = {
    "H01": "Date header, sender's local clock; 0 for H01-H06 when unparseable",
    "H07": "From domain contains google/gmail",
    "H09": "domain ends in .gov or has a gov label",
    "H10": "read as the Hotmail flag",
    "H11": "domain ends in .mil or has a mil label",
    "H18": "malformed addresses are searched whole for localhost",
    "H23": "number of To mailboxes (Cc not included)",
    "H24": "Reply-To flags H24-H29 use the same keyword table",
    "H30": "1 if the header is present",
    "H31": "1 if any MIME part has this content type (H31-H33)",
    "H34": "length of the decoded Subject",
    "H35": "H35-H49 over whitespace-delimited Subject words",
    "H43": "word without lowercase letters divides by 1",
    "H44": "distinct characters / length, minimum over words",
    "B01": "tokens (and multi-word phrases) in the spam word list",
    "B02": "tokens in the function word list",
    "B03": "B03-B07 over the raw HTML part; unique anchors keyed by lowercased href",
    "B08": "whitespace-delimited words mixing letters and digits",
    "B09": "mean over distinct terms of tf * ln(S / sf)",
    "B10": "as B09 after dropping stopwords",
    "B11": "tokens minus distinct lowercased tokens",
    "B15": "newline-delimited lines",
    "B21": "characters that are not letters, digits or whitespace",
    "B32": "runs of 2+ question marks, one per run",
    "B34": "runs of 2+ exclamation marks, one per run",
    "B36": "runs of 3+ periods, one per run",
    "B41": "total characters / paragraphs",
    "R05": "syllables / words",
    "R07": "0.4 (W/S + 100 C/W)",
    "R09": "206.835 - 1.015 W/S - 84.6 Sy/W",
    "R11": "1.0430 sqrt(30 C/S) + 3.1291",
    "R13": "20 - (150 M/W)/10, M = monosyllables",
    "R15": "0.39 W/S + 11.8 Sy/W - 15.59",
    "R17": "0.4 (W/S + 100 Sim/W)",
    "R19": "1 / FI, 0 when FI = 0",
    "R21": "3 + sqrt(30 C/S)",
    "R22": "4.71 Ch/W + 0.5 W/S - 21.43",
    "R23": "0.0588 (100 L/W) - 0.296 (100 S/W) - 15.8",
    "L01": "distinct lowercased tokens V",
    "L04": "bits: -sum p log2 p",
    "L05": "1e4 (sum i^2 V(i) - N) / N^2",
    "L06": "V(2) / V",
    "L07": "100 ln N / max(1 - V(1)/V, 0.01)",
    "A01": "parts with attachment disposition, a filename, or non-text outside multipart/alternative",
    "A02": "distinct lowercased content types; missing type counts as application/octet-stream",
}


def catalog_markdown() -> str:
    """The feature dictionary as a Markdown table."""
    lines = [
        "# Feature dictionary",
        "",
        "Generated by `mailfeat catalog --markdown`. `Source`/`Row` give the",
        "published list and position each feature comes from.",
        "",
        "| ID | Group | Kind | Source | Row | Label | Computation |",
        "|----|-------|------|--------|-----|-------|-------------|",
    ]
    for d in full_catalog():
        label = d.name.replace("|", "\\|")
        lines.append(f"| {d.id} | {d.group} | {d.value_kind} | {d.source} | {d.row} | {label} | {NOTES.get(d.id, '')} |")
    return "\n".join(lines) + "\n"
