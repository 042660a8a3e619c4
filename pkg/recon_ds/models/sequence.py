"""Sequence models: binary sequences, error operations, disagreement profiles."""

from dataclasses import dataclass
from functools import total_ordering
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from ..core.exceptions import IndexOutOfRangeError, ParamOutOfRangeError


@total_ordering
class BinSeq:
    """
    Binary sequence over {0, 1}.

    Stored as a '0'/'1' string; every public index is 1-based. Ordering is
    lexicographic on the bit string, which matches numeric order for
    sequences of equal length.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: Union[str, Iterable[int], "BinSeq"]):
        if isinstance(bits, BinSeq):
            text = bits.bits
        elif isinstance(bits, str):
            text = bits.strip()
        else:
            text = "".join(str(int(b)) for b in bits)
        if text.strip("01"):
            raise ParamOutOfRangeError("bits", bits)
        object.__setattr__(self, "bits", text)

    @classmethod
    def trusted(cls, bits: str) -> "BinSeq":
        """Wrap a string already known to be over '0'/'1'."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "bits", bits)
        return obj

    @classmethod
    def from_int(cls, value: int, n: int) -> "BinSeq":
        """Sequence whose first symbol is the most significant bit of value."""
        return cls.trusted(format(value, f"0{n}b") if n else "")

    def __setattr__(self, name, value):
        raise AttributeError("BinSeq is immutable")

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self.bits)

    def __eq__(self, other) -> bool:
        if isinstance(other, BinSeq):
            return self.bits == other.bits
        return NotImplemented

    def __lt__(self, other) -> bool:
        if isinstance(other, BinSeq):
            return self.bits < other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __repr__(self) -> str:
        return f"BinSeq('{self.bits}')"

    def __reduce__(self):
        return (BinSeq.trusted, (self.bits,))

    def bit(self, i: int) -> int:
        """Symbol x_i (1-based)."""
        if not 1 <= i <= len(self.bits):
            raise IndexOutOfRangeError("i", i, 1, len(self.bits))
        return 1 if self.bits[i - 1] == "1" else 0

    def segment(self, i: int, j: int) -> str:
        """x_{[i,j]} as a bit string; empty when i > j."""
        if i > j:
            return ""
        return self.bits[i - 1:j]

    @property
    def weight(self) -> int:
        return self.bits.count("1")


@dataclass(frozen=True)
class ErrorOp:
    """
    One deletion and one substitution, both optional.

    Indices refer to the original sequence; None plays the role of index 0.
    """

    deletion: Optional[int] = None
    substitution: Optional[int] = None

    def to_dict(self) -> Dict:
        return {"del": self.deletion, "sub": self.substitution}


@dataclass(frozen=True)
class DiffProfile:
    """Disagreement indices j_1 < ... < j_dH of a pair and the common prefix/suffix."""

    n: int
    j: Tuple[int, ...] = ()

    @property
    def dh(self) -> int:
        return len(self.j)

    @property
    def prefix_len(self) -> int:
        return self.j[0] - 1

    @property
    def suffix_len(self) -> int:
        return self.n - self.j[-1]

    @property
    def window_len(self) -> int:
        """|x~|: length of the middle part between prefix a and suffix b."""
        return self.j[-1] - self.j[0] + 1

    def to_dict(self) -> Dict:
        return {
            "dh": self.dh,
            "j": list(self.j),
            "prefix_len": self.prefix_len,
            "suffix_len": self.suffix_len,
        }
