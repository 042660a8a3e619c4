"""Models module - Data structures."""

from .sequence import BinSeq, ErrorOp, DiffProfile
from .ball import BallView, SubstitutionIntersection
from .partition import SubsetPartition, TupleClass, SUBSET_IDS
from .code import CodeFamily, CodeSpec, RedundancyRow, RECONSTRUCTION_N
from .delta import EffectClass, DeltaBreakdown
from .channel import ReadSet, SimulationSummary
from .report import VerifyReport
from .command import CommandConfig

__all__ = [
    'BinSeq',
    'ErrorOp',
    'DiffProfile',
    'BallView',
    'SubstitutionIntersection',
    'SubsetPartition',
    'TupleClass',
    'SUBSET_IDS',
    'CodeFamily',
    'CodeSpec',
    'RedundancyRow',
    'RECONSTRUCTION_N',
    'EffectClass',
    'DeltaBreakdown',
    'ReadSet',
    'SimulationSummary',
    'VerifyReport',
    'CommandConfig',
]
