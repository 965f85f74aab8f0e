"""Exception types raised across the toolkit."""


class QsvmError(Exception):
    """Base class for all toolkit errors."""


class CapacityError(QsvmError, ValueError):
    """Requested qubit count is outside the supported range."""


class QubitIndexError(QsvmError, IndexError):
    """A gate addresses a qubit that does not exist."""


class ShapeError(QsvmError, ValueError):
    """Array dimensions do not agree."""


class UnsupportedFamilyError(QsvmError, ValueError):
    """The feature-map family cannot be used for this operation."""


class DegenerateInputError(QsvmError, ValueError):
    """Input data admits no well-defined result (zero norm, single class, ...)."""


class UndefinedMetricError(QsvmError, ValueError):
    """A metric is undefined for the given labels."""


class DatasetError(QsvmError, ValueError):
    """A dataset file or column is missing or malformed."""
