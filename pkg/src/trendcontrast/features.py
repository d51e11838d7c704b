"""Pattern-based feature vectors and a small nearest-neighbor evaluator."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, EvaluationError
from .model import BinaryDataset, Pattern, find_occurrences

MODE_DENSITY = "density"
MODE_COUNT = "count"
FEATURE_MODES = (MODE_DENSITY, MODE_COUNT)


@dataclass(frozen=True)
class FeatureMatrix:
    """Per-series feature vectors, one column per pattern."""

    columns: tuple[Pattern, ...]
    ids: tuple[str, ...]
    labels: tuple[str, ...]
    positives: tuple[bool, ...]
    values: np.ndarray


def featurize(
    dataset: BinaryDataset,
    patterns: list[Pattern],
    minden: float,
    mode: str = MODE_DENSITY,
) -> FeatureMatrix:
    """Feature matrix of ``dataset`` over the given pattern columns.

    Density mode stores each pattern's occurrence density in the series;
    count mode stores the 0/1 indicator density > minden. The dataset should
    be preprocessed the same way as for mining (compressed by default).
    """
    if not patterns:
        raise ConfigError("at least one pattern column is required")
    if mode not in FEATURE_MODES:
        raise ConfigError(f"mode must be one of {FEATURE_MODES}, got {mode!r}")
    if not 0.0 <= minden <= 1.0:
        raise ConfigError(f"minden must lie in [0, 1], got {minden}")
    columns = tuple(tuple(p) for p in patterns)
    ids: list[str] = []
    labels: list[str] = []
    positives: list[bool] = []
    rows: list[list[float]] = []
    for series, is_positive in [(s, True) for s in dataset.positives] + [
        (s, False) for s in dataset.negatives
    ]:
        row = []
        for pattern in columns:
            density = len(find_occurrences(series.values, pattern)) / len(series.values)
            row.append(density if mode == MODE_DENSITY else float(density > minden))
        ids.append(series.sid)
        labels.append(series.label)
        positives.append(is_positive)
        rows.append(row)
    return FeatureMatrix(
        columns=columns,
        ids=tuple(ids),
        labels=tuple(labels),
        positives=tuple(positives),
        values=np.asarray(rows, dtype=float),
    )


@dataclass(frozen=True)
class FoldResult:
    index: int
    accuracy: float
    test_ids: tuple[str, ...]


@dataclass(frozen=True)
class CVResult:
    accuracy: float
    folds: tuple[FoldResult, ...]


def knn_cross_validate(
    matrix: FeatureMatrix, folds: int, neighbors: int, seed: int
) -> CVResult:
    """Stratified k-fold cross-validation with a majority-vote kNN.

    Folds are dealt round-robin within each class after a seeded shuffle.
    Distance is Euclidean on the raw feature values; distance ties resolve
    by row order and vote ties go to the positive class, so the result is
    reproducible for a fixed (matrix, folds, neighbors, seed).
    """
    if folds < 2:
        raise ConfigError(f"folds must be at least 2, got {folds}")
    if neighbors < 1:
        raise ConfigError(f"neighbors must be at least 1, got {neighbors}")
    n = len(matrix.ids)
    pos_rows = [i for i, flag in enumerate(matrix.positives) if flag]
    neg_rows = [i for i, flag in enumerate(matrix.positives) if not flag]
    if len(pos_rows) < folds or len(neg_rows) < folds:
        raise EvaluationError(
            f"each class needs at least {folds} rows for {folds}-fold validation"
        )
    rng = random.Random(seed)
    fold_of = [0] * n
    for rows in (pos_rows, neg_rows):
        order = rows[:]
        rng.shuffle(order)
        for position, row in enumerate(order):
            fold_of[row] = position % folds

    X = matrix.values
    y = np.asarray(matrix.positives, dtype=bool)
    fold_results = []
    for f in range(folds):
        test = [i for i in range(n) if fold_of[i] == f]
        train = np.asarray([i for i in range(n) if fold_of[i] != f])
        k_eff = min(neighbors, len(train))
        correct = 0
        for i in test:
            dist = np.sqrt(((X[train] - X[i]) ** 2).sum(axis=1))
            nearest = train[np.argsort(dist, kind="stable")[:k_eff]]
            pos_votes = int(y[nearest].sum())
            predicted = pos_votes * 2 >= k_eff  # vote tie goes to positive
            correct += predicted == y[i]
        fold_results.append(
            FoldResult(f, correct / len(test), tuple(matrix.ids[i] for i in test))
        )
    accuracy = sum(fr.accuracy for fr in fold_results) / folds
    return CVResult(accuracy=accuracy, folds=tuple(fold_results))
