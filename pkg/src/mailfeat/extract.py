"""Run the selected extractors over one parsed email."""

from __future__ import annotations

from typing import Optional, Sequence

from .catalog import FeatureDef, resolve_selection
from .eml import ParsedEmail
from .features import (
    analysis_text,
    compute_lexical_suite,
    compute_readability_suite,
    extract_attachment_features,
    extract_body_features,
    extract_header_features,
    frequency_spectrum,
    readability_counts,
)
from .resources import Resources

__all__ = ["extract_features"]


def extract_features(email: ParsedEmail, selection: Optional[Sequence[FeatureDef]] = None,
                     resources: Optional[Resources] = None) -> dict:
    """Feature ID -> value for every selected feature, in selection order.

    Groups with no selected feature are not computed at all.
    """
    selection = resolve_selection([]) if selection is None else selection
    res = resources or Resources()
    wanted = {d.group for d in selection}
    out: dict = {}

    if wanted & {"HeaderMetadata", "HeaderSubject"}:
        out.update(extract_header_features(email, res.domains))
    if wanted & {"Body", "Readability", "Lexical"}:
        at = analysis_text(email.parts)
        if "Body" in wanted:
            out.update(extract_body_features(email.parts, at, res))
        if "Readability" in wanted:
            out.update(compute_readability_suite(
                readability_counts(at.tk, False),
                readability_counts(at.tk, True, res.stopwords),
            ))
        if "Lexical" in wanted:
            out.update(compute_lexical_suite(frequency_spectrum(at.tk.lower_tokens)))
    if "Attachment" in wanted:
        out.update(extract_attachment_features(email.parts.attachments))
    return {d.id: out[d.id] for d in selection}
