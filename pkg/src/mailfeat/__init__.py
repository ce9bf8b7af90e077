"""Feature extraction for spam-detection datasets built from EML corpora."""

from .catalog import FeatureCatalog, FeatureDef, UnknownSelector, full_catalog, resolve_selection
from .corpus import CorpusRunConfig, FeatureVector, RunReport, emit_csv, run_extraction, scan_corpus
from .eml import MalformedMessage, ParsedEmail, RawMessage, header_value, parse_eml
from .extract import extract_features
from .resources import Resources

__version__ = "0.1.0"

__all__ = [
    "CorpusRunConfig",
    "FeatureCatalog",
    "FeatureDef",
    "FeatureVector",
    "MalformedMessage",
    "ParsedEmail",
    "RawMessage",
    "Resources",
    "RunReport",
    "UnknownSelector",
    "emit_csv",
    "extract_features",
    "full_catalog",
    "header_value",
    "parse_eml",
    "resolve_selection",
    "run_extraction",
    "scan_corpus",
]
