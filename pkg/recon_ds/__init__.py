"""
recon-ds
========

Reconstruction codes for the channel that applies one deletion and at
most one substitution: error balls, the case split of B(x) ∩ B(y), the
code families with their residue classes, the Δψ syndrome tools, a
reconstruction decoder, and the verification campaigns behind them.
"""

from .core import ReconError, get_config
from .models import BinSeq, CodeFamily, CodeSpec, VerifyReport

__version__ = "1.0.0"

__all__ = [
    'ReconError',
    'get_config',
    'BinSeq',
    'CodeFamily',
    'CodeSpec',
    'VerifyReport',
]
