"""Command-line interface.

Subcommands: transform (extreme-point compression), mine (top-k contrast
patterns), oracle (exhaustive reference), features (pattern feature matrix),
evaluate (kNN cross-validation). Set TRENDCONTRAST_LOG=debug|info|warning to
control log verbosity. All numeric output uses 6 decimal places.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import features as feat
from .errors import ConfigError, Error
from .extremes import shrink_dataset
from .miner import ALL_STRATEGIES, MineResult, RunReport, TopKSet, mine
from .model import (
    BinaryDataset,
    Pattern,
    format_pattern,
    load_dataset,
    read_labeled_rows,
    parse_rows,
)
from .oracle import enumerate_supports, oracle_topk

LOG_ENV = "TRENDCONTRAST_LOG"
logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """One CLI invocation. Defaults mirror the common experiment settings
    (minden 0.01, k 10, compression on, grouped fusion, all pruning)."""

    command: str
    input_path: Path
    positive_labels: frozenset[str]
    minden: float = 0.01
    k: int = 10
    max_len: int | None = None
    epe: bool = True
    fusion: str = "grouped"
    pruning: frozenset[str] = field(default_factory=lambda: frozenset(ALL_STRATEGIES))
    sort: str = "desc"
    mode: str = feat.MODE_DENSITY
    seed: int = 0
    folds: int = 5
    neighbors: int = 10
    out: Path | None = None
    report_dir: Path | None = None
    patterns_path: Path | None = None


def _fmt6(x: float) -> str:
    return f"{x:.6f}"


def _entry_payload(entries) -> list[dict]:
    return [
        {
            "pattern": list(e.pattern),
            "direction": e.direction,
            "r_plus": round(e.r_plus, 6),
            "r_minus": round(e.r_minus, 6),
            "contrast": round(e.contrast, 6),
        }
        for e in entries
    ]


def _write_json(payload, out: Path | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load_patterns(path: Path) -> list[Pattern]:
    payload = json.loads(path.read_text())
    try:
        return [tuple(int(r) for r in obj["pattern"]) for obj in payload]
    except (TypeError, KeyError) as exc:
        raise ConfigError(f"{path}: not a mined-pattern JSON document") from exc


def _mined_patterns(config: RunConfig, dataset: BinaryDataset) -> list[Pattern]:
    if config.patterns_path is not None:
        return _load_patterns(config.patterns_path)
    result = mine(
        dataset, config.minden, config.k, config.max_len,
        epe=config.epe, fusion=config.fusion, pruning=config.pruning, sort=config.sort,
    )
    return [e.pattern for e in result.topk]


def _feature_dataset(config: RunConfig, dataset: BinaryDataset) -> BinaryDataset:
    return shrink_dataset(dataset) if config.epe else dataset


def _run_transform(config: RunConfig) -> None:
    fmt, rows = read_labeled_rows(config.input_path)
    dataset = parse_rows(rows, config.positive_labels)
    shrunk = shrink_dataset(dataset)
    by_row = sorted(shrunk.all_series(), key=lambda s: int(s.sid[1:]))
    out_fp = config.out.open("w", newline="") if config.out else sys.stdout
    try:
        if fmt == "tsv":
            for s in by_row:
                out_fp.write("\t".join([s.label] + [_fmt6(v) for v in s.values]) + "\n")
        else:
            writer = csv.writer(out_fp)
            width = max(len(s.values) for s in by_row)
            writer.writerow(["label"] + [f"v{i}" for i in range(1, width + 1)])
            for s in by_row:
                writer.writerow([s.label] + [_fmt6(v) for v in s.values])
    finally:
        if config.out:
            out_fp.close()


def _run_mine(config: RunConfig) -> RunReport:
    dataset = load_dataset(config.input_path, config.positive_labels)
    result: MineResult = mine(
        dataset, config.minden, config.k, config.max_len,
        epe=config.epe, fusion=config.fusion, pruning=config.pruning, sort=config.sort,
    )
    _write_json(_entry_payload(result.topk), config.out)
    if config.report_dir is not None:
        from .report import write_report_files

        paths = write_report_files(result.report, result.topk, config.report_dir)
        logger.info("report written: %s", ", ".join(str(p) for p in paths))
    return result.report


def _run_oracle(config: RunConfig) -> None:
    dataset = load_dataset(config.input_path, config.positive_labels)
    if config.epe:
        dataset = shrink_dataset(dataset)
    report = enumerate_supports(dataset, config.minden, config.max_len)
    _write_json(_entry_payload(oracle_topk(report, config.k)), config.out)


def _run_features(config: RunConfig) -> None:
    dataset = load_dataset(config.input_path, config.positive_labels)
    patterns = _mined_patterns(config, dataset)
    matrix = feat.featurize(
        _feature_dataset(config, dataset), patterns, config.minden, config.mode
    )
    out_fp = config.out.open("w", newline="") if config.out else sys.stdout
    try:
        writer = csv.writer(out_fp)
        writer.writerow(["id", "label"] + [format_pattern(p) for p in matrix.columns])
        for i, sid in enumerate(matrix.ids):
            writer.writerow([sid, matrix.labels[i]] + [_fmt6(v) for v in matrix.values[i]])
    finally:
        if config.out:
            out_fp.close()


def _run_evaluate(config: RunConfig) -> None:
    dataset = load_dataset(config.input_path, config.positive_labels)
    patterns = _mined_patterns(config, dataset)
    matrix = feat.featurize(
        _feature_dataset(config, dataset), patterns, config.minden, config.mode
    )
    result = feat.knn_cross_validate(matrix, config.folds, config.neighbors, config.seed)
    print(_fmt6(result.accuracy))
    if config.out is not None:
        payload = {
            "accuracy": round(result.accuracy, 6),
            "folds": [
                {
                    "fold": fr.index,
                    "accuracy": round(fr.accuracy, 6),
                    "test_ids": list(fr.test_ids),
                }
                for fr in result.folds
            ],
        }
        _write_json(payload, config.out)


def run(config: RunConfig) -> RunReport | None:
    """Execute one configured subcommand; returns the mining report if any."""
    if config.command == "transform":
        _run_transform(config)
    elif config.command == "mine":
        return _run_mine(config)
    elif config.command == "oracle":
        _run_oracle(config)
    elif config.command == "features":
        _run_features(config)
    elif config.command == "evaluate":
        _run_evaluate(config)
    else:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"unknown command {config.command!r}")
    return None


def _parse_prune(text: str) -> frozenset[str]:
    if text == "none":
        return frozenset()
    strategies = frozenset(tok.strip() for tok in text.split(",") if tok.strip())
    if not strategies <= ALL_STRATEGIES:
        raise argparse.ArgumentTypeError(
            f"--prune takes a comma list from {sorted(ALL_STRATEGIES)} or 'none'"
        )
    return strategies


def _add_common(parser: argparse.ArgumentParser, *, minden=True) -> None:
    parser.add_argument("--input", required=True, type=Path, help="dataset file (TSV or CSV)")
    parser.add_argument(
        "--positive-labels", required=True,
        help="comma-separated label tokens forming the positive class",
    )
    if minden:
        parser.add_argument("--minden", type=float, default=0.01, help="density threshold (default 0.01)")
    parser.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")


def _add_mining(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, default=10, help="number of patterns to keep (default 10)")
    parser.add_argument("--max-len", type=int, default=None, help="cap on pattern length (default: none)")
    parser.add_argument("--no-epe", action="store_true", help="mine the raw series without compression")
    parser.add_argument("--fusion", choices=["grouped", "all-pairs"], default="grouped")
    parser.add_argument("--prune", type=_parse_prune, default=frozenset(ALL_STRATEGIES),
                        metavar="s1,s2,s3|none")
    parser.add_argument("--sort", choices=["desc", "asc", "none"], default="desc",
                        help="candidate ordering by support rate (default desc)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trendcontrast",
        description="Mine the k most class-contrasting relative-order patterns "
                    "from a binary-labeled time-series file.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="emit the extreme-point-compressed dataset")
    _add_common(p, minden=False)

    p = sub.add_parser("mine", help="mine the top-k contrast patterns")
    _add_common(p)
    _add_mining(p)
    p.add_argument("--report-dir", type=Path, default=None,
                   help="write report.csv and figures into this directory")

    p = sub.add_parser("oracle", help="exhaustive sliding-window reference miner")
    _add_common(p)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--max-len", type=int, required=True, help="longest window length to enumerate")
    p.add_argument("--no-epe", action="store_true")

    for name, extra_help in (("features", "emit the feature matrix as CSV"),
                             ("evaluate", "cross-validate a kNN on pattern features")):
        p = sub.add_parser(name, help=extra_help)
        _add_common(p)
        _add_mining(p)
        p.add_argument("--patterns", type=Path, default=None, dest="patterns_path",
                       help="JSON pattern file from `mine`/`oracle` (default: mine inline)")
        p.add_argument("--mode", choices=list(feat.FEATURE_MODES), default=feat.MODE_DENSITY)
        if name == "evaluate":
            p.add_argument("--folds", type=int, default=5)
            p.add_argument("--neighbors", type=int, default=10)
            p.add_argument("--seed", type=int, default=0)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    labels = frozenset(tok.strip() for tok in args.positive_labels.split(",") if tok.strip())
    config = RunConfig(command=args.command, input_path=args.input, positive_labels=labels)
    for name in ("minden", "k", "max_len", "fusion", "sort", "mode", "seed",
                 "folds", "neighbors", "out", "report_dir", "patterns_path"):
        if hasattr(args, name):
            setattr(config, name, getattr(args, name))
    if getattr(args, "no_epe", False):
        config.epe = False
    if hasattr(args, "prune"):
        config.pruning = args.prune
    return config


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get(LOG_ENV, "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(_config_from_args(args))
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
