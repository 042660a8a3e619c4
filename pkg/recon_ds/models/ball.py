"""Error-ball models."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from .sequence import BinSeq


@dataclass(frozen=True)
class BallView:
    """A finite set of equal-length sequences: D(x), S(x), B(x) or an intersection."""

    elements: FrozenSet[BinSeq] = field(default_factory=frozenset)
    source_len: int = 0
    kind: str = "ds"

    @classmethod
    def from_bits(cls, items: Iterable[str], source_len: int, kind: str) -> "BallView":
        return cls(frozenset(BinSeq.trusted(s) for s in items), source_len, kind)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BinSeq]:
        return iter(self.sorted())

    def __contains__(self, item) -> bool:
        return item in self.elements

    def sorted(self) -> List[BinSeq]:
        return sorted(self.elements)

    def bit_strings(self) -> FrozenSet[str]:
        return frozenset(e.bits for e in self.elements)

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind,
            "source_len": self.source_len,
            "size": len(self.elements),
            "elements": [e.bits for e in self.sorted()],
        }


@dataclass(frozen=True)
class SubstitutionIntersection:
    """S(x) ∩ S(y); its size is always 0 or 2."""

    elements: Tuple[BinSeq, ...] = ()

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_dict(self) -> Dict:
        return {"size": self.size, "elements": [e.bits for e in sorted(self.elements)]}
