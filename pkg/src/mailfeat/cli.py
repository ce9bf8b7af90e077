"""``mailfeat`` command line: ``extract`` a corpus, dump the ``catalog``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .catalog import UnknownSelector, catalog_json, catalog_markdown, full_catalog, resolve_selection
from .corpus import CorpusError, CorpusRunConfig, OutputNotWritable, run_extraction
from .resources import ResourceError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CORPUS = 2


def _split_features(value: Optional[str]) -> list[str]:
    if not value:
        return []
    return [s.strip() for s in value.split(",") if s.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mailfeat", description="Extract spam-detection features from EML corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("extract", help="extract features from a folder of .eml files")
    ex.add_argument("--corpus", required=True, type=Path, help="corpus folder (scanned recursively)")
    ex.add_argument("--features", help="comma-separated groups and/or feature IDs (default: all 140)")
    ex.add_argument("--out", type=Path, help="CSV path (default: <corpus>/mailfeat_out/features.csv)")
    ex.add_argument("--errors", type=Path, help="error file (default: <corpus>/mailfeat_out/errors.log)")
    ex.add_argument("--label-from-dir", action="store_true", help="add a label column from the first sub-folder")
    ex.add_argument("--spam-words", type=Path, help="spam word list, one entry per line")
    ex.add_argument("--function-words", type=Path, help="function word list, one entry per line")
    ex.add_argument("--stopwords", type=Path, help="stopword list, one entry per line")
    ex.add_argument("--domains", type=Path, help="TOML domain keyword table")
    ex.add_argument("--workers", type=int, default=1, help="parallel worker processes (default: 1)")
    ex.add_argument("--on-error", choices=("skip", "zero-row"), default="skip",
                    help="drop failed emails from the CSV or write an all-zero row")
    ex.add_argument("--dump-parts", type=Path, metavar="DIR",
                    help="debug: write each email's split parts as JSON under DIR")
    ex.add_argument("-q", "--quiet", action="store_true", help="no progress output")

    cat = sub.add_parser("catalog", help="print the feature dictionary")
    fmt = cat.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable features.json output")
    fmt.add_argument("--markdown", action="store_true", help="the Markdown feature dictionary")
    return parser


def _progress(k: int, n: int) -> None:
    step = max(1, n // 100)
    if k % step == 0 or k == n:
        print(f"{k}/{n} processed", file=sys.stderr, flush=True)


def _cmd_extract(args) -> int:
    if args.workers < 1:
        print("mailfeat: --workers must be a positive integer", file=sys.stderr)
        return EXIT_CONFIG
    try:
        features = _split_features(args.features)
        resolve_selection(features)
        cfg = CorpusRunConfig(
            corpus_dir=args.corpus,
            selection=features,
            output_csv=args.out,
            error_file=args.errors,
            label_mode="from_subdir" if args.label_from_dir else "none",
            spam_words=args.spam_words,
            function_words=args.function_words,
            stopwords=args.stopwords,
            domains=args.domains,
            worker_count=args.workers,
            on_error=args.on_error,
            dump_parts_dir=args.dump_parts,
        )
        report = run_extraction(cfg, progress=None if args.quiet else _progress)
    except (UnknownSelector, ResourceError, OutputNotWritable, ValueError) as exc:
        print(f"mailfeat: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CorpusError as exc:
        print(f"mailfeat: {exc}", file=sys.stderr)
        return EXIT_CORPUS

    if not args.quiet:
        print(
            f"{report.succeeded}/{report.total_emails} emails written to {cfg.output_csv}"
            f" ({report.failed} failed, see {cfg.error_file}) in {report.elapsed:.2f}s",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.json:
        print(catalog_json())
        return EXIT_OK
    if args.markdown:
        sys.stdout.write(catalog_markdown())
        return EXIT_OK
    for d in full_catalog():
        print(f"{d.id}\t{d.group}\t{d.value_kind}\t{d.name}")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "extract":
        return _cmd_extract(args)
    return _cmd_catalog(args)


if __name__ == "__main__":
    sys.exit(main())
