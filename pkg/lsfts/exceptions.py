"""Error and warning types raised across the package."""

from typing import Optional


class LsftsError(ValueError):
    """Base class for every error raised by lsfts."""


class InvalidGridError(LsftsError):
    pass


class ShapeError(LsftsError):
    pass


class GridMismatchError(ShapeError):
    pass


class NumericError(LsftsError):
    pass


class InvalidOrderError(LsftsError):
    pass


class EmptyWindowError(LsftsError):
    pass


class InvalidBandwidthError(LsftsError):
    pass


class NotPSDError(LsftsError):
    pass


class LagRangeError(LsftsError):
    pass


class HorizonError(LsftsError):
    pass


class DegenerateDirectionError(LsftsError):
    pass


class RankDeficiencyError(LsftsError):
    pass


class UndefinedOrderError(LsftsError):
    pass


class NonstationarityError(LsftsError):
    pass


class OracleUndefinedError(LsftsError):
    pass


class SizeCapError(LsftsError):
    pass


class InvalidTimeError(LsftsError):
    pass


class ConfigError(LsftsError):
    """Malformed LSFTS_* environment variable."""


class UsageError(LsftsError):
    pass


class DataError(LsftsError):
    """
    Malformed input data

    Args:
        message: What is wrong with the data
        line: 1-based line number in the source file, if known
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LsftsWarning(UserWarning):
    pass


class BoundaryWarning(LsftsWarning):
    """u lies outside [C1*h, 1 - C1*h] where the interior rates hold."""


class ClippedEigenvalueWarning(LsftsWarning):
    pass


class AmbiguousSignWarning(LsftsWarning):
    pass


class DegeneratePValueWarning(LsftsWarning):
    pass
