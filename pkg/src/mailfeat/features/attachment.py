"""Attachment features A01-A02."""

from __future__ import annotations

from typing import Iterable

from ..eml import AttachmentInfo

__all__ = ["extract_attachment_features"]


def extract_attachment_features(attachments: Iterable[AttachmentInfo]) -> dict:
    attachments = list(attachments)
    return {
        "A01": len(attachments),
        "A02": len({a.content_type.lower() for a in attachments}),
    }
