"""Corpus driver: scan a folder of EML files and write the feature CSV."""

from __future__ import annotations

import csv
import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TextIO, Union

from .catalog import REAL, FeatureDef, resolve_selection
from .eml import MalformedMessage, RawMessage, parse_eml
from .extract import extract_features
from .resources import Resources

__all__ = [
    "CorpusError",
    "CorpusNotFound",
    "CorpusRunConfig",
    "EmptyCorpus",
    "FeatureVector",
    "OutputNotWritable",
    "RunReport",
    "emit_csv",
    "format_value",
    "run_extraction",
    "scan_corpus",
]

log = logging.getLogger(__name__)

DEFAULT_OUT_DIR = "mailfeat_out"


class CorpusError(Exception):
    pass


class CorpusNotFound(CorpusError):
    pass


class EmptyCorpus(CorpusError):
    pass


class OutputNotWritable(OSError):
    pass


@dataclass
class CorpusRunConfig:
    corpus_dir: Path
    selection: Sequence[str] = ()
    output_csv: Optional[Path] = None
    error_file: Optional[Path] = None
    label_mode: str = "none"  # "none" | "from_subdir"
    spam_words: Optional[Path] = None
    function_words: Optional[Path] = None
    stopwords: Optional[Path] = None
    domains: Optional[Path] = None
    worker_count: int = 1
    on_error: str = "skip"  # "skip" | "zero-row"
    dump_parts_dir: Optional[Path] = None

    def __post_init__(self):
        self.corpus_dir = Path(self.corpus_dir)
        out_dir = self.corpus_dir / DEFAULT_OUT_DIR
        self.output_csv = Path(self.output_csv) if self.output_csv else out_dir / "features.csv"
        self.error_file = Path(self.error_file) if self.error_file else out_dir / "errors.log"
        if self.label_mode not in ("none", "from_subdir"):
            raise ValueError(f"label_mode must be 'none' or 'from_subdir', not {self.label_mode!r}")
        if self.on_error not in ("skip", "zero-row"):
            raise ValueError(f"on_error must be 'skip' or 'zero-row', not {self.on_error!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be a positive integer")


@dataclass
class FeatureVector:
    email_id: str
    values: list[tuple[str, Union[int, float]]]
    label: Optional[str] = None


@dataclass
class RunReport:
    total_emails: int = 0
    succeeded: int = 0
    failed: int = 0
    errors: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0


def scan_corpus(corpus_dir: Union[str, Path]) -> list[Path]:
    """All ``*.eml`` files below ``corpus_dir`` (any case), sorted by relative path."""
    root = Path(corpus_dir)
    if not root.is_dir():
        raise CorpusNotFound(f"corpus directory not found: {root}")
    found = [p for p in root.rglob("*") if p.suffix.lower() == ".eml" and p.is_file()]
    if not found:
        raise EmptyCorpus(f"no .eml files under {root}")
    return sorted(found, key=lambda p: p.relative_to(root).as_posix().encode("utf-8"))


def format_value(value, kind: str) -> str:
    """Integers bare; reals with at most 6 decimals and no trailing zeros."""
    if kind != REAL:
        return str(int(value))
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"non-finite feature value {value!r}")
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


class _CsvSink:
    def __init__(self, handle: TextIO, selection: Sequence[FeatureDef], with_label: bool):
        self.kinds = [d.value_kind for d in selection]
        self.ids = [d.id for d in selection]
        self.with_label = with_label
        self.writer = csv.writer(handle, lineterminator="\n")
        self.writer.writerow(["email_id", *self.ids] + (["label"] if with_label else []))

    def write(self, row: FeatureVector) -> None:
        if [fid for fid, _ in row.values] != self.ids:
            raise ValueError(f"row {row.email_id} does not match the selection")
        cells = [row.email_id] + [format_value(v, k) for (_, v), k in zip(row.values, self.kinds)]
        if self.with_label:
            cells.append(row.label or "")
        self.writer.writerow(cells)


def emit_csv(rows: Iterable[FeatureVector], selection: Sequence[FeatureDef],
             path: Union[str, Path], with_label: Optional[bool] = None) -> None:
    rows = list(rows)
    if with_label is None:
        with_label = any(r.label is not None for r in rows)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            sink = _CsvSink(fh, selection, with_label)
            for row in rows:
                sink.write(row)
    except OSError as exc:
        raise OutputNotWritable(f"cannot write {path}: {exc}") from exc


# --- per-email work -----------------------------------------------------------

_state: dict = {}


def _init_worker(state: dict) -> None:
    _state.clear()
    _state.update(state)


def _dump_parts(email, email_id: str, out_dir: Path) -> None:
    target = out_dir / f"{email_id}.parts.json"
    target.parent.mkdir(parents=True, exist_ok=True)
    parts = asdict(email.parts)
    target.write_text(json.dumps(parts, indent=2, ensure_ascii=False), encoding="utf-8")


def _process(path: str):
    root: Path = _state["root"]
    p = Path(path)
    email_id = p.relative_to(root).as_posix()
    rel_parts = p.relative_to(root).parts
    label = rel_parts[0] if len(rel_parts) > 1 else ""
    try:
        email = parse_eml(RawMessage.from_path(p))
        values = extract_features(email, _state["selection"], _state["resources"])
        if _state.get("dump_dir") is not None:
            _dump_parts(email, email_id, _state["dump_dir"])
    except MalformedMessage as exc:
        return email_id, None, label, ("MalformedMessage", str(exc))
    except OSError as exc:
        return email_id, None, label, ("ReadError", str(exc))
    except Exception as exc:  # one bad email must not sink the run
        return email_id, None, label, ("ExtractionError", f"{type(exc).__name__}: {exc}")
    return email_id, list(values.items()), label, None


def _results(paths: list[Path], state: dict, workers: int):
    args = [str(p) for p in paths]
    if workers == 1 or len(paths) == 1:
        _init_worker(state)
        yield from map(_process, args)
        return
    chunk = max(1, len(args) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(state,)) as ex:
        # map() yields in submission order, so rows keep scan order
        yield from ex.map(_process, args, chunksize=chunk)


def _open_output(path: Path) -> TextIO:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise OutputNotWritable(f"cannot write {path}: {exc}") from exc


def run_extraction(cfg: CorpusRunConfig, progress: Optional[Callable[[int, int], None]] = None,
                   resources: Optional[Resources] = None) -> RunReport:
    """Extract the selected features for every email in the corpus.

    Failed emails go to the error file and, under the default ``skip``
    policy, are left out of the CSV. Output is identical for any worker count.
    """
    start = time.perf_counter()
    selection = resolve_selection(cfg.selection)
    if resources is None:
        resources = Resources.load(cfg.spam_words, cfg.function_words, cfg.stopwords, cfg.domains)
    paths = scan_corpus(cfg.corpus_dir)

    csv_fh = _open_output(cfg.output_csv)
    try:
        err_fh = _open_output(cfg.error_file)
    except OutputNotWritable:
        csv_fh.close()
        raise

    state = {
        "root": cfg.corpus_dir,
        "selection": selection,
        "resources": resources,
        "dump_dir": cfg.dump_parts_dir,
    }
    report = RunReport(total_emails=len(paths))
    with_label = cfg.label_mode == "from_subdir"
    zeros = [(d.id, 0) for d in selection]
    with csv_fh, err_fh:
        sink = _CsvSink(csv_fh, selection, with_label)
        for k, (email_id, values, label, error) in enumerate(_results(paths, state, cfg.worker_count), 1):
            if error is None:
                report.succeeded += 1
                sink.write(FeatureVector(email_id, values, label if with_label else None))
            else:
                kind, message = error
                message = " ".join(message.split())
                report.failed += 1
                report.errors.append((email_id, kind, message))
                err_fh.write(f"{email_id}\t{kind}\t{message}\n")
                log.warning("%s: %s: %s", email_id, kind, message)
                if cfg.on_error == "zero-row":
                    sink.write(FeatureVector(email_id, zeros, label if with_label else None))
            if progress is not None:
                progress(k, len(paths))
    report.elapsed = time.perf_counter() - start
    return report
