"""Core module - Framework-independent logic."""

from .config import ReconConfig, get_config, reload_config
from .exceptions import (
    ReconError,
    LengthMismatchError,
    IdenticalInputsError,
    IndexOutOfRangeError,
    DegenerateOpError,
    PreconditionViolatedError,
    ParamOutOfRangeError,
    TooLargeError,
    NotConfusableError,
    DegenerateOrderError,
    BallTooSmallError,
    NoCandidateError,
    AmbiguousError,
    UsageError,
    ReconErrorHandler,
)

__all__ = [
    'ReconConfig',
    'get_config',
    'reload_config',
    'ReconError',
    'LengthMismatchError',
    'IdenticalInputsError',
    'IndexOutOfRangeError',
    'DegenerateOpError',
    'PreconditionViolatedError',
    'ParamOutOfRangeError',
    'TooLargeError',
    'NotConfusableError',
    'DegenerateOrderError',
    'BallTooSmallError',
    'NoCandidateError',
    'AmbiguousError',
    'UsageError',
    'ReconErrorHandler',
]
