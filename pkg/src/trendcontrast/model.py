"""Labeled time series, the two-class collection, and relative-order ranking.

Positions are 1-based throughout the package: a window of length ``m`` ending
at position ``end`` covers values ``end-m+1 .. end``, and an occurrence of a
pattern is identified by the window's last position.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DatasetError, ParseError

Pattern = tuple[int, ...]


def relative_order(values: Sequence) -> Pattern | None:
    """Rank vector of ``values``: position i holds the rank of values[i],
    1 = smallest.

    Returns None when any two values are equal; a window containing a tie
    has no strict rank order and matches no pattern. Works on numbers and on
    rank vectors alike.
    """
    if len(values) < 2:
        raise ValueError("relative order needs at least two values")
    ordered = sorted(values)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            return None
    rank = {v: i + 1 for i, v in enumerate(ordered)}
    return tuple(rank[v] for v in values)


def window_pattern(series: "TimeSeries", end: int, m: int) -> Pattern | None:
    """Relative order of the length-``m`` window of ``series`` ending at
    1-based position ``end``; None when the window contains a tie."""
    n = len(series.values)
    if m < 2:
        raise ValueError(f"window length must be at least 2, got {m}")
    if not m <= end <= n:
        raise ValueError(f"end position {end} out of range for m={m}, n={n}")
    return relative_order(series.values[end - m:end])


def find_occurrences(values: Sequence[float], pattern: Pattern) -> list[int]:
    """All 1-based end positions of windows of ``values`` whose relative
    order equals ``pattern``."""
    m = len(pattern)
    out = []
    for end in range(m, len(values) + 1):
        if relative_order(values[end - m:end]) == pattern:
            out.append(end)
    return out


def format_pattern(pattern: Pattern) -> str:
    """Render a pattern as ``(2,1,3)``."""
    return "(" + ",".join(str(r) for r in pattern) + ")"


@dataclass(frozen=True)
class TimeSeries:
    """One observed sequence with an opaque id and its raw class label."""

    sid: str
    values: tuple[float, ...]
    label: str

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) < 1:
            raise ValueError(f"series {self.sid!r} is empty")
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError(f"series {self.sid!r} contains non-finite value {v!r}")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class BinaryDataset:
    """A two-class collection of time series."""

    positives: tuple[TimeSeries, ...]
    negatives: tuple[TimeSeries, ...]

    def __post_init__(self):
        object.__setattr__(self, "positives", tuple(self.positives))
        object.__setattr__(self, "negatives", tuple(self.negatives))
        if not self.positives or not self.negatives:
            raise DatasetError("both classes must contain at least one series")
        seen = set()
        for s in self.positives + self.negatives:
            if s.sid in seen:
                raise DatasetError(f"duplicate series id {s.sid!r}")
            seen.add(s.sid)

    def all_series(self) -> tuple[TimeSeries, ...]:
        return self.positives + self.negatives

    def total_length(self) -> int:
        return sum(len(s) for s in self.all_series())


def parse_rows(rows: Iterable[Sequence[str]], positive_labels: Iterable[str]) -> BinaryDataset:
    """Build a dataset from token rows ``[label, v1, v2, ...]``.

    Rows whose label is in ``positive_labels`` form the positive class, the
    rest the negative class. Ids are assigned ``t1, t2, ...`` in row order.
    Raises ParseError with a 1-based row/column location on a bad token.
    """
    positive_labels = frozenset(positive_labels)
    positives, negatives = [], []
    for row_no, row in enumerate(rows, start=1):
        tokens = [t.strip() for t in row if t.strip() != ""]
        if len(tokens) < 2:
            raise ParseError(f"row {row_no}: need a label and at least one value")
        label = tokens[0]
        values = []
        for col_no, tok in enumerate(tokens[1:], start=2):
            try:
                v = float(tok)
            except ValueError:
                raise ParseError(f"row {row_no}, column {col_no}: not a number: {tok!r}") from None
            if not math.isfinite(v):
                raise ParseError(f"row {row_no}, column {col_no}: non-finite value {tok!r}")
            values.append(v)
        series = TimeSeries(f"t{row_no}", tuple(values), label)
        (positives if label in positive_labels else negatives).append(series)
    return BinaryDataset(tuple(positives), tuple(negatives))


def read_labeled_rows(path: str | Path) -> tuple[str, list[list[str]]]:
    """Read rows from a delimited file and report its format.

    Two layouts are accepted: tab-separated ``label<TAB>v1<TAB>v2...`` with no
    header (UCR archive convention), and comma-separated with a single header
    line. Returns ("tsv"|"csv", rows).
    """
    path = Path(path)
    with path.open(newline="") as fp:
        first = fp.readline()
        if first == "":
            raise ParseError(f"{path}: empty file")
        fp.seek(0)
        if "\t" in first:
            rows = [line.rstrip("\n").split("\t") for line in fp if line.strip()]
            return "tsv", rows
        reader = csv.reader(fp)
        rows = [row for row in reader if any(cell.strip() for cell in row)]
        return "csv", rows[1:]  # drop the header line


def load_dataset(path: str | Path, positive_labels: Iterable[str]) -> BinaryDataset:
    """Read a dataset file (see read_labeled_rows) and split it into classes."""
    _, rows = read_labeled_rows(path)
    return parse_rows(rows, positive_labels)
