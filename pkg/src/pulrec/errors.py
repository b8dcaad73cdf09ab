"""Exception types shared across the package.

The CLI maps ConfigError to exit code 1 and DataError (and subclasses) to
exit code 2; exit code 3 signals a completed run that needed the
all-negatives fallback somewhere.
"""


class PulrecError(Exception):
    """Base class for all package errors."""


class ConfigError(PulrecError):
    """Bad configuration value, unknown key, or inconsistent synthetic spec."""


class DataError(PulrecError):
    """Bad or missing input data, or a degenerate derived artifact."""


class CorpusError(DataError):
    """Malformed corpus file or empty corpus."""


class EmptyCohortError(DataError):
    """A minimum-participation filter removed every MP."""


class VocabularyError(DataError):
    """No terms available to build a vocabulary."""


class DegenerateCentroidError(DataError):
    """Centroid requested for a set of all-empty vectors."""


class TrainingError(DataError):
    """Classifier training preconditions violated (e.g. an empty class)."""


class EvaluationError(DataError):
    """Missing prediction or malformed evaluation input."""
