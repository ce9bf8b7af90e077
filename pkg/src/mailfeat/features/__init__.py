from .attachment import extract_attachment_features
from .body import AnalysisText, analysis_text, count_lexicon_hits, extract_body_features, tf_isf
from .header import DateParts, domain_flag, extract_header_features, parse_date_header
from .lexical import FrequencySpectrum, compute_lexical_suite, frequency_spectrum
from .readability import ReadabilityCounts, compute_readability_suite, readability_counts

__all__ = [
    "AnalysisText",
    "DateParts",
    "FrequencySpectrum",
    "ReadabilityCounts",
    "analysis_text",
    "compute_lexical_suite",
    "compute_readability_suite",
    "count_lexicon_hits",
    "domain_flag",
    "extract_attachment_features",
    "extract_body_features",
    "extract_header_features",
    "frequency_spectrum",
    "parse_date_header",
    "readability_counts",
    "tf_isf",
]
