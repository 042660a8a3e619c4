"""
Custom Exceptions for recon-ds
==============================

Defines the error hierarchy raised by the library and the centralized
handler that turns errors into user-facing messages and exit codes.
"""

import logging
from typing import Iterable, Optional

logger = logging.getLogger(__name__)


class ReconError(Exception):
    """Base exception for recon-ds."""

    def __init__(self, message: str, original_error: Exception = None):
        self.message = message
        self.original_error = original_error
        super().__init__(self.message)

    def __str__(self):
        if self.original_error:
            return f"{self.message} (Caused by: {self.original_error})"
        return self.message


class LengthMismatchError(ReconError):
    """Raised when two sequences that must share a length do not."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Length mismatch: {left} != {right}")


class IdenticalInputsError(ReconError):
    """Raised when an operation needs two distinct sequences."""

    def __init__(self, message: str = "Inputs must be distinct sequences"):
        super().__init__(message)


class IndexOutOfRangeError(ReconError):
    """Raised when a 1-based index falls outside its valid range."""

    def __init__(self, name: str, index: int, low: int, high: int):
        self.name = name
        self.index = index
        self.low = low
        self.high = high
        super().__init__(f"Index {name}={index} outside [{low}, {high}]")


class DegenerateOpError(ReconError):
    """Raised when deletion and substitution target the same index."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Deletion and substitution both target index {index}")


class PreconditionViolatedError(ReconError):
    """Raised when a closed form is requested outside the case it covers."""

    def __init__(self, condition: str):
        self.condition = condition
        super().__init__(f"Precondition violated: {condition}")


class ParamOutOfRangeError(ReconError):
    """Raised when a residue or structural parameter is out of range."""

    def __init__(self, name: str, value, low=None, high=None):
        self.name = name
        self.value = value
        self.low = low
        self.high = high
        if low is None and high is None:
            msg = f"Parameter {name}={value} is not valid"
        else:
            msg = f"Parameter {name}={value} outside [{low}, {high}]"
        super().__init__(msg)


class TooLargeError(ReconError):
    """Raised when an exhaustive operation is asked for n above the cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the exhaustive cap of {cap}")


class NotConfusableError(ReconError):
    """Raised when x(d_x,e_x) and y(d_y,e_y) are different sequences."""

    def __init__(self, message: str = "x(d_x,e_x) != y(d_y,e_y)"):
        super().__init__(message)


class DegenerateOrderError(ReconError):
    """Raised when both deletions sit at the same index."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"d_x = d_y = {index}; decomposition needs a strict order")


class BallTooSmallError(ReconError):
    """Raised when more distinct reads are requested than the ball holds."""

    def __init__(self, size: int, requested: int):
        self.size = size
        self.requested = requested
        super().__init__(f"Ball holds {size} sequences, {requested} reads requested")


class NoCandidateError(ReconError):
    """Raised when no codeword is consistent with the reads."""

    def __init__(self, message: str = "No codeword is consistent with the reads"):
        super().__init__(message)


class AmbiguousError(ReconError):
    """Raised when several codewords are consistent with the reads."""

    def __init__(self, candidates: Iterable):
        self.candidates = list(candidates)
        shown = ", ".join(str(c) for c in self.candidates[:4])
        super().__init__(f"{len(self.candidates)} codewords consistent with the reads: {shown}")


class UsageError(ReconError):
    """Raised for malformed command-line input."""

    def __init__(self, flag: str, message: str):
        self.flag = flag
        super().__init__(f"{flag}: {message}")


class ReconErrorHandler:
    """Centralized error handling for the command line."""

    USAGE_ERRORS = (UsageError, ParamOutOfRangeError, IndexOutOfRangeError,
                    LengthMismatchError, IdenticalInputsError, DegenerateOpError,
                    DegenerateOrderError, TooLargeError)

    @staticmethod
    def get_error_message(error: Exception) -> str:
        """Get user-friendly error message"""
        if isinstance(error, UsageError):
            return f"❌ Invalid usage: {error.message}"

        if isinstance(error, ParamOutOfRangeError):
            if error.low is None and error.high is None:
                return f"❌ Invalid value for {error.name}: {error.value}"
            return f"❌ {error.name}={error.value} is out of range; valid range is [{error.low}, {error.high}]"

        if isinstance(error, TooLargeError):
            return f"❌ n={error.n} is too large for exhaustive work (cap {error.cap}; raise RECON_DS_MAX_N to lift it)"

        if isinstance(error, IndexOutOfRangeError):
            return f"❌ {error.name}={error.index} is out of range; valid range is [{error.low}, {error.high}]"

        if isinstance(error, BallTooSmallError):
            return f"❌ Only {error.size} distinct reads exist, {error.requested} requested"

        if isinstance(error, AmbiguousError):
            return f"❌ Reads are ambiguous between {len(error.candidates)} codewords"

        if isinstance(error, NoCandidateError):
            return "❌ No codeword matches the reads"

        if isinstance(error, ReconError):
            return f"❌ {error}"

        return f"❌ Unexpected error: {error}"

    @classmethod
    def exit_code(cls, error: Exception) -> int:
        """Exit code for an error: 2 for usage problems, 1 otherwise."""
        if isinstance(error, cls.USAGE_ERRORS):
            return 2
        return 1

    @staticmethod
    def log_error(error: Exception, context: Optional[str] = None) -> None:
        """Log error with context"""
        if context:
            logger.error(f"Error in {context}: {error}")
        else:
            logger.error(f"Error: {error}")
