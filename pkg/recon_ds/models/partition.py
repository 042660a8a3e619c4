"""Models for the case decomposition of B(x) ∩ B(y)."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from .ball import BallView
from .sequence import BinSeq

SUBSET_IDS = tuple(range(1, 19))

# (z, d_x, e_x, d_y, e_y) with None for an absent substitution
Witness = Tuple[BinSeq, int, Optional[int], int, Optional[int]]


@dataclass(frozen=True)
class TupleClass:
    """Segment distances (d1, d2, d3) of x(d_x,0) against y(d_y,0)."""

    d1: int
    d2: int
    d3: int
    side: str  # "x-first" when d_x <= d_y, else "y-first"

    @property
    def total(self) -> int:
        return self.d1 + self.d2 + self.d3

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    def to_dict(self) -> Dict:
        return {"d1": self.d1, "d2": self.d2, "d3": self.d3, "side": self.side}


@dataclass
class SubsetPartition:
    """B_1..B_18 (overlapping), E_1..E_18 and their union for one pair."""

    subsets: Dict[int, FrozenSet[BinSeq]] = field(default_factory=dict)
    epairs: Dict[int, FrozenSet[Tuple[int, int]]] = field(default_factory=dict)
    union: BallView = field(default_factory=BallView)
    witnesses: Dict[int, Dict[BinSeq, Witness]] = field(default_factory=dict)

    def union_of(self, ids) -> FrozenSet[BinSeq]:
        out = set()
        for k in ids:
            out |= self.subsets.get(k, frozenset())
        return frozenset(out)

    def nonempty(self, k: int) -> bool:
        return bool(self.subsets.get(k))

    def to_dict(self) -> Dict:
        return {
            "B": {str(k): [z.bits for z in sorted(self.subsets.get(k, ()))] for k in SUBSET_IDS},
            "E": {str(k): [list(p) for p in sorted(self.epairs.get(k, ()))] for k in SUBSET_IDS},
            "union_size": len(self.union),
        }
