"""Exhaustive sliding-window reference for supports and top-k contrasts.

The oracle computes every window's relative order directly, without fusion,
pruning, or occurrence reuse, and is the ground truth the miner is checked
against. It only ranks windows that actually occur, so its cost is bounded
by the number of windows rather than by the number of possible patterns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError
from .model import BinaryDataset, Pattern, relative_order
from .occurrence import FORWARD, REVERSE, PatternStats, support_rate


@dataclass(frozen=True)
class OracleEntry:
    pattern: Pattern
    contrast: float
    direction: str
    r_plus: float
    r_minus: float


@dataclass
class OracleReport:
    """Per-length pattern statistics plus tie-free window counts."""

    stats: dict[int, dict[Pattern, PatternStats]] = field(default_factory=dict)
    window_counts: dict[tuple[str, int], int] = field(default_factory=dict)


def enumerate_supports(dataset: BinaryDataset, minden: float, max_len: int) -> OracleReport:
    """Tally every tie-free window of every series for lengths 2..max_len.

    The dataset is consumed as given; apply extreme-point compression
    beforehand when comparing against the default mining pipeline.
    """
    if max_len < 2:
        raise ValueError(f"max_len must be at least 2, got {max_len}")
    if not 0.0 <= minden <= 1.0:
        raise ConfigError(f"minden must lie in [0, 1], got {minden}")
    supports: dict[int, dict[Pattern, dict[str, int]]] = {}
    counts: dict[tuple[str, int], int] = {}
    for s in dataset.all_series():
        n = len(s.values)
        for m in range(2, min(max_len, n) + 1):
            tally = 0
            for end in range(m, n + 1):
                order = relative_order(s.values[end - m:end])
                if order is None:
                    continue
                tally += 1
                per_series = supports.setdefault(m, {}).setdefault(order, {})
                per_series[s.sid] = per_series.get(s.sid, 0) + 1
            counts[(s.sid, m)] = tally
    report = OracleReport(window_counts=counts)
    for m, patterns in supports.items():
        report.stats[m] = {
            p: support_rate(per_series, dataset, minden)
            for p, per_series in sorted(patterns.items())
        }
    return report


def oracle_topk(report: OracleReport, k: int, min_len: int = 3) -> list[OracleEntry]:
    """The k best positive-contrast patterns in the report.

    Patterns shorter than ``min_len`` are skipped by default because the
    miner scores only fused candidates (length >= 3); the two length-2
    patterns act purely as seeds there. Ordering is (contrast desc, length
    asc, ranks lex asc).
    """
    if k < 1:
        raise ConfigError(f"k must be at least 1, got {k}")
    entries: list[OracleEntry] = []
    for m in sorted(report.stats):
        if m < min_len:
            continue
        for pattern, stats in report.stats[m].items():
            forward = stats.r_plus - stats.r_minus
            if forward > 0:
                entries.append(OracleEntry(pattern, forward, FORWARD, stats.r_plus, stats.r_minus))
            elif forward < 0:
                entries.append(OracleEntry(pattern, -forward, REVERSE, stats.r_plus, stats.r_minus))
    entries.sort(key=lambda e: (-e.contrast, len(e.pattern), e.pattern))
    return entries[:k]
