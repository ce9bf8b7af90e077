from hypothesis import given, strategies as st

from mailfeat.eml import AttachmentInfo, parse_eml
from mailfeat.features.attachment import extract_attachment_features

from conftest import CORPUS


def _att(ct):
    return AttachmentInfo("f", ct, 1)


def test_no_attachments():
    assert extract_attachment_features([]) == {"A01": 0, "A02": 0}


def test_two_pngs():
    assert extract_attachment_features([_att("image/png"), _att("IMAGE/PNG")]) == {"A01": 2, "A02": 1}


def test_three_distinct_types_fixture():
    parts = parse_eml((CORPUS / "ham/f08_three_attach.eml").read_bytes()).parts
    assert extract_attachment_features(parts.attachments) == {"A01": 3, "A02": 3}


def test_inline_image_counts():
    parts = parse_eml((CORPUS / "spam/f18_inline_image.eml").read_bytes()).parts
    assert extract_attachment_features(parts.attachments)["A01"] >= 1


@given(st.lists(st.sampled_from(["image/png", "application/pdf", "text/csv", "Image/Png"]), max_size=10))
def test_unique_types_bounded(types):
    a = extract_attachment_features([_att(t) for t in types])
    assert a["A02"] <= a["A01"] == len(types)
    assert (a["A02"] == 0) == (a["A01"] == 0)
