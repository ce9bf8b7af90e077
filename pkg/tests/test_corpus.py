import csv
import json
import os
import subprocess

import pytest

from mailfeat.catalog import resolve_selection
from mailfeat.corpus import (
    CorpusNotFound,
    CorpusRunConfig,
    EmptyCorpus,
    FeatureVector,
    OutputNotWritable,
    emit_csv,
    format_value,
    run_extraction,
    scan_corpus,
)

from conftest import CORPUS


def _run(tmp_path, name="out", **kw):
    cfg = CorpusRunConfig(corpus_dir=CORPUS, output_csv=tmp_path / f"{name}.csv",
                          error_file=tmp_path / f"{name}.log", **kw)
    return run_extraction(cfg), cfg


def test_scan_filters_and_sorts(tmp_path):
    for name in ("a.eml", "B.EML", "c.txt"):
        (tmp_path / name).write_bytes(b"Subject: x\r\n\r\n")
    assert [p.name for p in scan_corpus(tmp_path)] == ["B.EML", "a.eml"]


def test_scan_errors(tmp_path):
    with pytest.raises(CorpusNotFound):
        scan_corpus(tmp_path / "missing")
    (tmp_path / "note.txt").write_text("x")
    with pytest.raises(EmptyCorpus):
        scan_corpus(tmp_path)


def test_scan_matches_find_listing():
    out = subprocess.run(["find", ".", "-type", "f", "-iname", "*.eml"], cwd=CORPUS,
                         capture_output=True, check=True, env={**os.environ, "LC_ALL": "C"})
    listed = sorted(line[2:] for line in out.stdout.decode().splitlines())
    got = [p.relative_to(CORPUS).as_posix() for p in scan_corpus(CORPUS)]
    assert got == listed
    assert len(got) == 20


def test_emit_csv_header_only(tmp_path):
    sel = resolve_selection(["Attachment"])
    emit_csv([], sel, tmp_path / "x.csv")
    assert (tmp_path / "x.csv").read_bytes() == b"email_id,A01,A02\n"


def test_emit_csv_row(tmp_path):
    sel = resolve_selection(["Attachment"])
    emit_csv([FeatureVector("x.eml", [("A01", 2), ("A02", 1)])], sel, tmp_path / "x.csv")
    assert (tmp_path / "x.csv").read_bytes() == b"email_id,A01,A02\nx.eml,2,1\n"


def test_emit_csv_unwritable(tmp_path):
    with pytest.raises(OutputNotWritable):
        emit_csv([], resolve_selection(["A01"]), tmp_path / "nodir" / "x.csv")


@pytest.mark.parametrize("value, kind, text", [
    (69.785, "real", "69.785"), (12.0, "real", "12"), (0.0, "real", "0"), (-0.0000001, "real", "0"),
    (1 / 3, "real", "0.333333"), (3, "count", "3"), (True, "boolean01", "1"),
])
def test_format_value(value, kind, text):
    assert format_value(value, kind) == text


def test_format_value_rejects_non_finite():
    with pytest.raises(ValueError):
        format_value(float("nan"), "real")


def test_run_skips_truncated_file(tmp_path):
    report, cfg = _run(tmp_path)
    assert (report.total_emails, report.succeeded, report.failed) == (20, 19, 1)
    rows = list(csv.reader(cfg.output_csv.open(encoding="utf-8")))
    assert len(rows) == 20 and len(rows[0]) == 141
    assert "spam/f20_truncated.eml" not in [r[0] for r in rows]
    (line,) = cfg.error_file.read_text("utf-8").splitlines()
    assert line.startswith("spam/f20_truncated.eml\tMalformedMessage\t")


def test_rows_in_scan_order(tmp_path):
    _, cfg = _run(tmp_path)
    ids = [r[0] for r in csv.reader(cfg.output_csv.open(encoding="utf-8"))][1:]
    expected = [p.relative_to(CORPUS).as_posix() for p in scan_corpus(CORPUS)]
    assert ids == [e for e in expected if not e.endswith("f20_truncated.eml")]


def test_deterministic_and_worker_independent(tmp_path):
    _, a = _run(tmp_path, "a")
    _, b = _run(tmp_path, "b")
    _, c = _run(tmp_path, "c", worker_count=4)
    assert a.output_csv.read_bytes() == b.output_csv.read_bytes() == c.output_csv.read_bytes()
    assert a.error_file.read_bytes() == c.error_file.read_bytes()


def test_label_from_dir(tmp_path):
    _, cfg = _run(tmp_path, label_mode="from_subdir", selection=["A01"])
    rows = list(csv.reader(cfg.output_csv.open(encoding="utf-8")))
    assert rows[0] == ["email_id", "A01", "label"]
    assert {r[0].split("/")[0] == r[2] for r in rows[1:]} == {True}
    assert {r[2] for r in rows[1:]} == {"ham", "spam"}


def test_zero_row_policy(tmp_path):
    report, cfg = _run(tmp_path, on_error="zero-row", selection=["Lexical"])
    rows = {r[0]: r[1:] for r in csv.reader(cfg.output_csv.open(encoding="utf-8"))}
    assert report.failed == 1
    assert rows["spam/f20_truncated.eml"] == ["0"] * 7


def test_default_output_location(tmp_path):
    corpus = tmp_path / "c"
    corpus.mkdir()
    (corpus / "m.eml").write_bytes(b"Subject: hi\r\n\r\nHello there.")
    cfg = CorpusRunConfig(corpus_dir=corpus, selection=["A01"])
    run_extraction(cfg)
    assert (corpus / "mailfeat_out" / "features.csv").read_text() == "email_id,A01\nm.eml,0\n"
    assert (corpus / "mailfeat_out" / "errors.log").read_text() == ""


def test_output_not_writable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cfg = CorpusRunConfig(corpus_dir=CORPUS, output_csv=blocker / "out.csv", error_file=tmp_path / "e.log")
    with pytest.raises(OutputNotWritable):
        run_extraction(cfg)


def test_dump_parts(tmp_path):
    _run(tmp_path, selection=["A01"], dump_parts_dir=tmp_path / "parts")
    data = json.loads((tmp_path / "parts" / "ham" / "f01_plain.eml.parts.json").read_text("utf-8"))
    assert data["subject"] == "Lunch on Friday"
    assert len(list((tmp_path / "parts").rglob("*.json"))) == 19


def test_invalid_config():
    with pytest.raises(ValueError):
        CorpusRunConfig(corpus_dir=CORPUS, worker_count=0)
    with pytest.raises(ValueError):
        CorpusRunConfig(corpus_dir=CORPUS, on_error="explode")
    with pytest.raises(ValueError):
        CorpusRunConfig(corpus_dir=CORPUS, label_mode="guess")


def test_progress_callback(tmp_path):
    seen = []
    cfg = CorpusRunConfig(corpus_dir=CORPUS, output_csv=tmp_path / "o.csv", error_file=tmp_path / "e.log",
                          selection=["A01"])
    run_extraction(cfg, progress=lambda k, n: seen.append((k, n)))
    assert seen == [(k, 20) for k in range(1, 21)]
