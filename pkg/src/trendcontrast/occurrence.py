"""Incremental occurrence joins and per-pattern support statistics.

For each (pattern, series) pair the engine keeps the sorted list ``ends`` of
1-based end positions of all occurrences, plus two shrinking pools: positions
still available to serve as the prefix of a longer pattern and positions
still available to serve as its suffix. A super-pattern occurrence is a
prefix position l and a suffix position l+1; matched positions are consumed
from the pools, which is safe because a position pair can match for exactly
one super-pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ConfigError
from .model import BinaryDataset, Pattern, TimeSeries

FORWARD = "forward"
REVERSE = "reverse"
DIRECTIONS = (FORWARD, REVERSE)


class SeriesOccurrences:
    """Occurrence end positions of one pattern in one series, with the
    prefix/suffix pools still available for extension joins."""

    __slots__ = ("ends", "prefix_avail", "suffix_avail")

    def __init__(self, ends: Iterable[int]):
        self.ends = list(ends)
        self.prefix_avail = list(self.ends)
        self.suffix_avail = list(self.ends)

    @property
    def support(self) -> int:
        return len(self.ends)

    def __repr__(self) -> str:  # debug dumps for golden comparisons
        return f"L={self.ends} P={self.prefix_avail} S={self.suffix_avail}"


def seed_length2(series: TimeSeries) -> tuple[SeriesOccurrences, SeriesOccurrences]:
    """Occurrence lists of the two length-2 patterns in one scan.

    An adjacent pair t[i] < t[i+1] is an occurrence of (1,2) ending at i+1,
    a falling pair one of (2,1); equal pairs match neither.
    """
    rising: list[int] = []
    falling: list[int] = []
    v = series.values
    for i in range(len(v) - 1):
        if v[i] < v[i + 1]:
            rising.append(i + 2)
        elif v[i] > v[i + 1]:
            falling.append(i + 2)
    return SeriesOccurrences(rising), SeriesOccurrences(falling)


def src_fuse(
    p_occ: SeriesOccurrences,
    q_occ: SeriesOccurrences,
    fused: Sequence[Pattern],
    values: Sequence[float],
) -> tuple[list[list[int]], int]:
    """Join p's prefix pool with q's suffix pool for one series.

    ``fused`` holds the fusion outputs: one pattern for the general case, two
    (u, v) for the special case. General case: every matched pair yields an
    occurrence of u. Special case: the window's first and last values decide
    between u (first < last) and v (first > last); on a tie the position is
    an occurrence of neither and both pool entries are kept.

    Returns (new end lists per fused pattern, number of join steps). When
    either pool is empty the join is skipped outright and zero steps are
    reported.
    """
    outs: list[list[int]] = [[] for _ in fused]
    pav = p_occ.prefix_avail
    sav = q_occ.suffix_avail
    if not pav or not sav:
        return outs, 0
    m = len(fused[0]) - 1  # length of the patterns being extended
    special = len(fused) == 2
    keep_p: list[int] = []
    keep_s: list[int] = []
    i = j = steps = 0
    while i < len(pav) and j < len(sav):
        steps += 1
        a = pav[i]
        b = sav[j]
        if a + 1 < b:
            keep_p.append(a)
            i += 1
        elif a + 1 > b:
            keep_s.append(b)
            j += 1
        else:
            if special:
                first = values[b - m - 1]
                last = values[b - 1]
                if first < last:
                    outs[0].append(b)
                elif first > last:
                    outs[1].append(b)
                else:
                    # boundary tie: matches neither output; keep both entries
                    keep_p.append(a)
                    keep_s.append(b)
            else:
                outs[0].append(b)
            i += 1
            j += 1
    keep_p.extend(pav[i:])
    keep_s.extend(sav[j:])
    p_occ.prefix_avail = keep_p
    q_occ.suffix_avail = keep_s
    return outs, steps


@dataclass(frozen=True)
class PatternStats:
    """Per-series support/density/count of one pattern plus its class rates."""

    support: dict[str, int]
    density: dict[str, float]
    count: dict[str, int]
    r_plus: float
    r_minus: float


def support_rate(
    supports: Mapping[str, int], dataset: BinaryDataset, minden: float
) -> PatternStats:
    """Derive densities, counts and the two class support rates.

    ``supports`` maps series id to occurrence count; missing ids count as 0.
    A series counts when its density strictly exceeds ``minden``; the class
    rate is the counting fraction of the class.
    """
    if not 0.0 <= minden <= 1.0:
        raise ConfigError(f"minden must lie in [0, 1], got {minden}")
    support: dict[str, int] = {}
    density: dict[str, float] = {}
    count: dict[str, int] = {}

    def tally(group: tuple[TimeSeries, ...]) -> float:
        hits = 0
        for s in group:
            sup = supports.get(s.sid, 0)
            den = sup / len(s.values)
            support[s.sid] = sup
            density[s.sid] = den
            count[s.sid] = 1 if den > minden else 0
            hits += count[s.sid]
        return hits / len(group)

    r_plus = tally(dataset.positives)
    r_minus = tally(dataset.negatives)
    return PatternStats(support, density, count, r_plus, r_minus)


def contrast(stats: PatternStats, direction: str) -> float:
    """Signed contrast: r_plus - r_minus forward, r_minus - r_plus reverse."""
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    if direction == FORWARD:
        return stats.r_plus - stats.r_minus
    return stats.r_minus - stats.r_plus
