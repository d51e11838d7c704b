import random

import pytest

from trendcontrast import BinaryDataset, TimeSeries

# Six short series, three per class: a compact dataset whose top patterns
# are known exactly and are reused across the suite as golden values.
DEMO_ROWS = [
    ["+", "4", "2", "6", "5", "9", "8"],
    ["+", "7", "5", "2", "4", "3", "6"],
    ["+", "2", "5", "4", "8", "6", "9"],
    ["-", "4", "7", "3", "6", "1"],
    ["-", "8", "6", "9", "5", "7"],
    ["-", "9", "7", "6", "5", "7", "8"],
]


def build_dataset(rows, positive_labels=("+",)):
    positives, negatives = [], []
    for i, row in enumerate(rows, start=1):
        series = TimeSeries(f"t{i}", tuple(float(v) for v in row[1:]), row[0])
        (positives if row[0] in positive_labels else negatives).append(series)
    return BinaryDataset(tuple(positives), tuple(negatives))


def random_tiefree_dataset(rng: random.Random, n_range=(4, 10), len_range=(8, 40)):
    """Random dataset whose values are distinct within each series, so no
    window contains a tie."""
    n = rng.randint(*n_range)
    n_pos = rng.randint(1, n - 1)
    series = []
    for i in range(n):
        length = rng.randint(*len_range)
        values = rng.sample(range(1, 10_000_000), length)
        label = "+" if i < n_pos else "-"
        series.append(TimeSeries(f"t{i + 1}", tuple(float(v) for v in values), label))
    return BinaryDataset(tuple(series[:n_pos]), tuple(series[n_pos:]))


@pytest.fixture
def demo_dataset():
    return build_dataset(DEMO_ROWS)


@pytest.fixture
def demo_rows():
    return [list(row) for row in DEMO_ROWS]
