"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all trendcontrast errors."""


class ParseError(Error):
    """A row or value in an input file could not be parsed."""


class DatasetError(Error):
    """The dataset violates a structural requirement (empty class, duplicate ids)."""


class ConfigError(Error):
    """A parameter is outside its valid range or set."""


class EvaluationError(Error):
    """Cross-validation cannot be carried out on the given matrix."""
