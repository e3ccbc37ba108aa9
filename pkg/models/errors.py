"""Error types and exceptions for liequiver computations."""

from enum import Enum, auto


class LieQuiverErrorType(Enum):
    """Types of errors that can occur while building quivers and relations."""
    INVALID_INPUT = auto()
    NOT_A_ROOT = auto()
    NOT_EXTREMAL = auto()
    NOT_REGULAR = auto()
    NOT_INTERVAL_CLOSED = auto()
    UNSUPPORTED_CASE = auto()
    ZERO_DENOMINATOR = auto()
    CAP_EXCEEDED = auto()
    ORACLE_FAILURE = auto()
    UNKNOWN = auto()


class LieQuiverError(Exception):
    """Exception raised by liequiver services."""

    def __init__(self, error_type: LieQuiverErrorType, message: str):
        self.error_type = error_type
        self.message = message
        super().__init__(self.message)

    def __str__(self) -> str:
        return f"{self.error_type.name}: {self.message}"
