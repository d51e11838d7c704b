"""Top-k contrast pattern mining.

Mining runs two passes over the (optionally compressed) dataset: a forward
pass scoring candidates by rate(positives) - rate(negatives), then a reverse
pass with the classes swapped. Each pass grows candidates level by level:
the two length-2 patterns seed the levels, cross-group fusion proposes
length-(m+1) candidates, the occurrence join computes their supports from
the parents' occurrence pools, and pruning discards candidates that cannot
beat the running bound c_min (the smallest contrast in the current top-k
set once it is full).

Pruning strategies:
  s1  (forward only)  rate in the pass's first class is 0
  s2  (forward)       rate in the first class <= c_min, once c_min > 0
  s3  (reverse)       same bound as s2, applied with classes swapped
"""

from __future__ import annotations

import bisect
import logging
import time
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ConfigError
from .extremes import shrink_dataset
from .fusion import GROUP_RISING, all_fusion_pairs, fuse, group_fusion_pairs, group_of
from .model import BinaryDataset, Pattern, TimeSeries, format_pattern
from .occurrence import FORWARD, REVERSE, SeriesOccurrences, seed_length2, src_fuse

logger = logging.getLogger(__name__)

ALL_STRATEGIES = frozenset({"s1", "s2", "s3"})
FUSION_MODES = ("grouped", "all-pairs")
SORT_MODES = ("desc", "asc", "none")


@dataclass(frozen=True)
class TopKEntry:
    """One mined pattern with its class rates and signed contrast."""

    pattern: Pattern
    contrast: float
    direction: str
    r_plus: float
    r_minus: float

    def sort_key(self):
        return (-self.contrast, len(self.pattern), self.pattern)


class TopKSet:
    """Bounded set of the highest-contrast patterns.

    Entries stay sorted by (contrast desc, length asc, ranks lex asc).
    c_min is 0 until the set is full, then the smallest kept contrast; an
    offer must strictly beat c_min to evict the worst entry, so equal-
    contrast incumbents stay.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ConfigError(f"k must be at least 1, got {capacity}")
        self.capacity = capacity
        self.entries: list[TopKEntry] = []

    @property
    def c_min(self) -> float:
        if len(self.entries) < self.capacity:
            return 0.0
        return self.entries[-1].contrast

    def offer(self, entry: TopKEntry) -> bool:
        """Insert ``entry`` if it qualifies; returns True when inserted."""
        if entry.contrast <= 0:
            return False
        if len(self.entries) >= self.capacity:
            if not entry.contrast > self.c_min:
                return False
            self.entries.pop()
        bisect.insort(self.entries, entry, key=TopKEntry.sort_key)
        return True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass
class LevelReport:
    """Counters for one candidate level of one pass."""

    direction: str
    length: int
    group1: int
    group2: int
    examined: int
    pruned_s1: int
    pruned_s2: int
    pruned_s3: int
    dropped: int
    c_min: float
    pruned_at_bound: int = 0       # prunes that fired while c_min > 0
    pruned_live_at_bound: int = 0  # of those, candidates with occurrences in D1

    @property
    def pruned(self) -> int:
        return self.pruned_s1 + self.pruned_s2 + self.pruned_s3


@dataclass
class RunReport:
    """Per-level candidate and pruning counts for a whole mining run."""

    levels: list[LevelReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def candidates_examined(self) -> int:
        return sum(lv.examined for lv in self.levels)

    @property
    def prunes_at_positive_cmin(self) -> int:
        return sum(lv.pruned_at_bound for lv in self.levels)

    @property
    def total_pruned(self) -> int:
        return sum(lv.pruned for lv in self.levels)

    @property
    def peak_length(self) -> int:
        lengths = [lv.length for lv in self.levels if lv.examined]
        return max(lengths, default=2)


@dataclass(frozen=True)
class FusionRecord:
    """One fusion examined during a pass, with rates in the pass's first class."""

    direction: str
    prefix: Pattern
    suffix: Pattern
    child: Pattern
    prefix_rate: float
    suffix_rate: float
    child_rate: float


@dataclass(frozen=True)
class CandidateRecord:
    """Occurrence snapshot of a candidate kept during a pass."""

    direction: str
    pattern: Pattern
    occurrences: dict[str, tuple[int, ...]]


@dataclass
class MiningTrace:
    """Optional collector of per-fusion and per-candidate diagnostics."""

    fusions: list[FusionRecord] = field(default_factory=list)
    candidates: list[CandidateRecord] = field(default_factory=list)


@dataclass
class MineResult:
    topk: TopKSet
    report: RunReport


def apply_pruning(
    r_d1: float, c_min: float, direction: str, strategies: frozenset[str]
) -> str | None:
    """Name of the pruning strategy that discards a candidate, or None.

    ``r_d1`` is the candidate's support rate in the pass's first class. The
    bound strategies (s2 forward, s3 reverse) only fire once c_min > 0.
    """
    if "s1" in strategies and r_d1 == 0:
        return "s1"
    bound = "s2" if direction == FORWARD else "s3"
    if bound in strategies and c_min > 0 and r_d1 <= c_min:
        return bound
    return None


class _Candidate:
    __slots__ = ("pattern", "occ1", "occ2", "r1")

    def __init__(self, pattern, occ1, occ2, r1):
        self.pattern = pattern
        self.occ1 = occ1  # SeriesOccurrences per series of the pass's D1
        self.occ2 = occ2  # likewise for D2
        self.r1 = r1


def _class_rate(occ: list[SeriesOccurrences], series: tuple[TimeSeries, ...], minden: float) -> float:
    hits = 0
    for o, s in zip(occ, series):
        if o.support / len(s.values) > minden:
            hits += 1
    return hits / len(series)


def _rate_from_lists(ends: list[list[int]], series: tuple[TimeSeries, ...], minden: float) -> float:
    hits = 0
    for lst, s in zip(ends, series):
        if len(lst) / len(s.values) > minden:
            hits += 1
    return hits / len(series)


def _snapshot(pattern, occ1, occ2, d1, d2, direction) -> CandidateRecord:
    occurrences = {s.sid: tuple(o.ends) for s, o in zip(d1, occ1)}
    occurrences.update({s.sid: tuple(o.ends) for s, o in zip(d2, occ2)})
    return CandidateRecord(direction, pattern, occurrences)


def contrast_pass(
    d1: tuple[TimeSeries, ...],
    d2: tuple[TimeSeries, ...],
    minden: float,
    k: int,
    topk: TopKSet,
    direction: str,
    strategies: frozenset[str],
    *,
    fusion: str = "grouped",
    sort: str = "desc",
    max_len: int | None = None,
    report: RunReport | None = None,
    trace: MiningTrace | None = None,
) -> TopKSet:
    """One mining pass scoring candidates by rate(d1) - rate(d2).

    The pass seeds the two length-2 patterns, then grows levels until either
    group's candidate set empties or ``max_len`` is reached. Offers into
    ``topk`` start at length 3; the seeds only anchor the levels.
    """
    seeds1, seeds2 = [], []
    for s in d1:
        rising, falling = seed_length2(s)
        seeds1.append((rising, falling))
    for s in d2:
        rising, falling = seed_length2(s)
        seeds2.append((rising, falling))
    cand_rising = _Candidate(
        (1, 2), [p[0] for p in seeds1], [p[0] for p in seeds2], 0.0
    )
    cand_falling = _Candidate(
        (2, 1), [p[1] for p in seeds1], [p[1] for p in seeds2], 0.0
    )
    cand_rising.r1 = _class_rate(cand_rising.occ1, d1, minden)
    cand_falling.r1 = _class_rate(cand_falling.occ1, d1, minden)
    if trace is not None:
        for c in (cand_rising, cand_falling):
            trace.candidates.append(_snapshot(c.pattern, c.occ1, c.occ2, d1, d2, direction))

    g1 = [cand_rising]
    g2 = [cand_falling]
    m = 2
    debug = logger.isEnabledFor(logging.DEBUG)

    while g1 and g2 and (max_len is None or m < max_len):
        new1: list[_Candidate] = []
        new2: list[_Candidate] = []
        examined = pruned_s1 = pruned_s2 = pruned_s3 = dropped = 0
        pruned_at_bound = pruned_live_at_bound = 0

        if fusion == "grouped":
            pair_stream: Iterable = ((p, q) for p, q, _ in group_fusion_pairs(g1, g2))
        else:
            pair_stream = all_fusion_pairs(g1 + g2)

        for p_cand, q_cand in pair_stream:
            fused = fuse(p_cand.pattern, q_cand.pattern)
            if fused is None:
                continue
            joined1 = [
                src_fuse(po, qo, fused, s.values)[0]
                for po, qo, s in zip(p_cand.occ1, q_cand.occ1, d1)
            ]
            survivors = []
            for w_idx, w in enumerate(fused):
                examined += 1
                ends1 = [lists[w_idx] for lists in joined1]
                r1 = _rate_from_lists(ends1, d1, minden)
                if trace is not None:
                    trace.fusions.append(
                        FusionRecord(direction, p_cand.pattern, q_cand.pattern, w, p_cand.r1, q_cand.r1, r1)
                    )
                reason = apply_pruning(r1, topk.c_min, direction, strategies)
                if reason is not None:
                    if reason == "s1":
                        pruned_s1 += 1
                    elif reason == "s2":
                        pruned_s2 += 1
                    else:
                        pruned_s3 += 1
                    if topk.c_min > 0:
                        pruned_at_bound += 1
                        if any(ends1):
                            pruned_live_at_bound += 1
                    continue
                survivors.append((w_idx, w, ends1, r1))
            if not survivors:
                continue
            joined2 = [
                src_fuse(po, qo, fused, s.values)[0]
                for po, qo, s in zip(p_cand.occ2, q_cand.occ2, d2)
            ]
            for w_idx, w, ends1, r1 in survivors:
                ends2 = [lists[w_idx] for lists in joined2]
                r2 = _rate_from_lists(ends2, d2, minden)
                score = r1 - r2
                r_plus, r_minus = (r1, r2) if direction == FORWARD else (r2, r1)
                topk.offer(TopKEntry(w, score, direction, r_plus, r_minus))
                if debug:
                    logger.debug(
                        "%s level %d: %s r1=%.4f r2=%.4f L1=%s L2=%s",
                        direction, m + 1, format_pattern(w), r1, r2, ends1, ends2,
                    )
                if not any(ends1) and not any(ends2):
                    # No occurrence anywhere: no descendant can ever gain
                    # support, so the pattern is dead weight in the level
                    # loop and keeping it could stop the loop terminating.
                    dropped += 1
                    continue
                cand = _Candidate(
                    w,
                    [SeriesOccurrences(lst) for lst in ends1],
                    [SeriesOccurrences(lst) for lst in ends2],
                    r1,
                )
                (new1 if group_of(w) == GROUP_RISING else new2).append(cand)
                if trace is not None:
                    trace.candidates.append(_snapshot(w, cand.occ1, cand.occ2, d1, d2, direction))

        if sort == "desc":
            key = lambda c: (-c.r1, c.pattern)
        elif sort == "asc":
            key = lambda c: (c.r1, c.pattern)
        else:
            key = None
        if key is not None:
            new1.sort(key=key)
            new2.sort(key=key)

        if report is not None:
            report.levels.append(
                LevelReport(
                    direction=direction,
                    length=m + 1,
                    group1=len(new1),
                    group2=len(new2),
                    examined=examined,
                    pruned_s1=pruned_s1,
                    pruned_s2=pruned_s2,
                    pruned_s3=pruned_s3,
                    dropped=dropped,
                    c_min=topk.c_min,
                    pruned_at_bound=pruned_at_bound,
                    pruned_live_at_bound=pruned_live_at_bound,
                )
            )
        g1, g2 = new1, new2
        m += 1

    return topk


def mine(
    dataset: BinaryDataset,
    minden: float,
    k: int,
    max_len: int | None = None,
    *,
    epe: bool = True,
    fusion: str = "grouped",
    pruning: Iterable[str] = ALL_STRATEGIES,
    sort: str = "desc",
    trace: MiningTrace | None = None,
) -> MineResult:
    """Mine the k highest-contrast patterns of ``dataset``.

    The dataset is compressed to its extreme points first unless ``epe`` is
    False; grouped fusion is only complete on compressed data, so disabling
    compression falls back to all-pairs fusion with a warning. ``pruning``
    selects the active strategies (s1/s2 apply to the forward pass, s3 to
    the reverse pass); pass an empty set to disable pruning entirely.
    """
    if not 0.0 <= minden <= 1.0:
        raise ConfigError(f"minden must lie in [0, 1], got {minden}")
    if max_len is not None and max_len < 2:
        raise ConfigError(f"max_len must be at least 2, got {max_len}")
    if fusion not in FUSION_MODES:
        raise ConfigError(f"fusion must be one of {FUSION_MODES}, got {fusion!r}")
    if sort not in SORT_MODES:
        raise ConfigError(f"sort must be one of {SORT_MODES}, got {sort!r}")
    strategies = frozenset(pruning)
    if not strategies <= ALL_STRATEGIES:
        raise ConfigError(f"unknown pruning strategies: {sorted(strategies - ALL_STRATEGIES)}")
    if not epe and fusion == "grouped":
        logger.warning(
            "grouped fusion is only complete on extreme-point-compressed data; "
            "falling back to all-pairs fusion"
        )
        fusion = "all-pairs"

    started = time.perf_counter()
    mined = shrink_dataset(dataset) if epe else dataset
    topk = TopKSet(k)
    report = RunReport()
    contrast_pass(
        mined.positives, mined.negatives, minden, k, topk, FORWARD,
        strategies & frozenset({"s1", "s2"}),
        fusion=fusion, sort=sort, max_len=max_len, report=report, trace=trace,
    )
    contrast_pass(
        mined.negatives, mined.positives, minden, k, topk, REVERSE,
        strategies & frozenset({"s3"}),
        fusion=fusion, sort=sort, max_len=max_len, report=report, trace=trace,
    )
    report.elapsed = time.perf_counter() - started
    return MineResult(topk=topk, report=report)
