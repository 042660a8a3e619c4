"""Channel models."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional

from ..core.exceptions import LengthMismatchError
from .sequence import BinSeq


@dataclass(frozen=True)
class ReadSet:
    """N distinct channel outputs of one length-n sequence."""

    reads: FrozenSet[BinSeq] = field(default_factory=frozenset)
    n: int = 0
    seed: Optional[int] = None

    @classmethod
    def of(cls, reads: Iterable[BinSeq], n: int, seed: Optional[int] = None) -> "ReadSet":
        items = frozenset(reads)
        for r in items:
            if len(r) != n - 1:
                raise LengthMismatchError(len(r), n - 1)
        return cls(items, n, seed)

    @property
    def claimed_N(self) -> int:
        return len(self.reads)

    def sorted(self) -> List[BinSeq]:
        return sorted(self.reads)

    def to_dict(self) -> Dict:
        return {"n": self.n, "N": self.claimed_N, "seed": self.seed,
                "reads": [r.bits for r in self.sorted()]}


@dataclass
class SimulationSummary:
    """Outcome counts of repeated sample-and-decode trials."""

    family: str
    n: int
    N: int
    trials: int = 0
    decoded: int = 0
    ambiguous: int = 0
    no_candidate: int = 0
    wrong: int = 0
    skipped: int = 0
    seed: int = 0

    @property
    def success_rate(self) -> float:
        attempted = self.trials - self.skipped
        return self.decoded / attempted if attempted else 0.0

    def to_dict(self) -> Dict:
        return {
            "family": self.family,
            "n": self.n,
            "N": self.N,
            "trials": self.trials,
            "decoded": self.decoded,
            "ambiguous": self.ambiguous,
            "no_candidate": self.no_candidate,
            "wrong": self.wrong,
            "skipped": self.skipped,
            "success_rate": round(self.success_rate, 6),
            "seed": self.seed,
        }
