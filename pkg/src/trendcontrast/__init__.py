"""trendcontrast: top-k contrast mining of relative-order patterns in
binary-labeled time series, with an exhaustive verification oracle and a
pattern-feature classification pipeline."""

from .errors import ConfigError, DatasetError, Error, EvaluationError, ParseError
from .extremes import extract_extremes, shrink_dataset
from .features import (
    CVResult,
    FeatureMatrix,
    MODE_COUNT,
    MODE_DENSITY,
    featurize,
    knn_cross_validate,
)
from .fusion import fuse, group_fusion_pairs, group_of, prefix_order, suffix_order
from .miner import (
    MineResult,
    MiningTrace,
    RunReport,
    TopKEntry,
    TopKSet,
    apply_pruning,
    contrast_pass,
    mine,
)
from .model import (
    BinaryDataset,
    Pattern,
    TimeSeries,
    find_occurrences,
    format_pattern,
    load_dataset,
    parse_rows,
    relative_order,
    window_pattern,
)
from .occurrence import (
    FORWARD,
    REVERSE,
    PatternStats,
    SeriesOccurrences,
    contrast,
    seed_length2,
    src_fuse,
    support_rate,
)
from .oracle import OracleEntry, OracleReport, enumerate_supports, oracle_topk

__version__ = "0.1.0"

__all__ = [
    "BinaryDataset",
    "ConfigError",
    "CVResult",
    "DatasetError",
    "Error",
    "EvaluationError",
    "FeatureMatrix",
    "FORWARD",
    "MODE_COUNT",
    "MODE_DENSITY",
    "MineResult",
    "MiningTrace",
    "OracleEntry",
    "OracleReport",
    "ParseError",
    "Pattern",
    "PatternStats",
    "REVERSE",
    "RunReport",
    "SeriesOccurrences",
    "TimeSeries",
    "TopKEntry",
    "TopKSet",
    "apply_pruning",
    "contrast",
    "contrast_pass",
    "enumerate_supports",
    "extract_extremes",
    "featurize",
    "find_occurrences",
    "format_pattern",
    "fuse",
    "group_fusion_pairs",
    "group_of",
    "knn_cross_validate",
    "load_dataset",
    "mine",
    "oracle_topk",
    "parse_rows",
    "prefix_order",
    "relative_order",
    "seed_length2",
    "shrink_dataset",
    "src_fuse",
    "suffix_order",
    "support_rate",
    "window_pattern",
]
