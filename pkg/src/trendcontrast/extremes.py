"""Compression of a series to its endpoints and local extreme points.

An interior point is kept when it is a local minimum (strictly below one
neighbor, not above the other) or a local maximum (mirror conditions); the
first and last points are always kept. After compression no three consecutive
values of a tie-free series are strictly monotone, which is what licenses the
cross-group fusion strategy in the miner.
"""

from __future__ import annotations

from .model import BinaryDataset, TimeSeries


def extract_extremes(series: TimeSeries) -> TimeSeries:
    """New series holding only endpoints and local minima/maxima of ``series``.

    Length-1 and length-2 inputs pass through unchanged. Plateau boundaries
    satisfy the mixed strict/non-strict conditions, so e.g. (5,5,7) keeps
    both 5s.
    """
    v = series.values
    if len(v) <= 2:
        return series
    kept = [v[0]]
    for i in range(1, len(v) - 1):
        a, b, c = v[i - 1], v[i], v[i + 1]
        is_min = (b < a and b <= c) or (b <= a and b < c)
        is_max = (a < b and c <= b) or (a <= b and c < b)
        if is_min or is_max:
            kept.append(b)
    kept.append(v[-1])
    return TimeSeries(series.sid, tuple(kept), series.label)


def shrink_dataset(dataset: BinaryDataset) -> BinaryDataset:
    """Apply extract_extremes to every series; ids and labels are preserved."""
    return BinaryDataset(
        tuple(extract_extremes(s) for s in dataset.positives),
        tuple(extract_extremes(s) for s in dataset.negatives),
    )
