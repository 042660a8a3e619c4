"""
Sequence Core
=============

Binary-sequence primitives: VT syndromes, the differential sequence,
runs, periods, disagreement profiles and error application.

Conventions:
    * every index is 1-based;
    * psi(x)_i = x_{i-1} XOR x_i for i in [1, n+1] with x_0 = x_{n+1} = 0,
      so a deletion at d merges the psi pair (d, d+1) and a substitution
      at e flips psi_e and psi_{e+1};
    * syndromes are returned unreduced, each code family applies its modulus.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import bits
from .exceptions import (
    DegenerateOpError,
    IdenticalInputsError,
    IndexOutOfRangeError,
    LengthMismatchError,
    ParamOutOfRangeError,
)
from ..models.sequence import BinSeq, DiffProfile, ErrorOp

logger = logging.getLogger(__name__)


def _check_same_length(x: BinSeq, y: BinSeq) -> None:
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))


def _check_index(name: str, index: int, n: int) -> None:
    if not 1 <= index <= n:
        raise IndexOutOfRangeError(name, index, 1, n)


def complement(x: BinSeq) -> BinSeq:
    return BinSeq.trusted(x.bits.translate(str.maketrans("01", "10")))


def reverse(x: BinSeq) -> BinSeq:
    return BinSeq.trusted(x.bits[::-1])


def hamming(x: BinSeq, y: BinSeq) -> int:
    _check_same_length(x, y)
    return bits.hamming(x.bits, y.bits)


def segment(x: BinSeq, i: int, j: int) -> BinSeq:
    """x_{[i,j]}; the empty sequence when i > j."""
    if i > j:
        return BinSeq.trusted("")
    _check_index("i", i, len(x))
    _check_index("j", j, len(x))
    return BinSeq.trusted(x.segment(i, j))


def runs(x: BinSeq) -> Tuple[int, List[Tuple[int, int]]]:
    """Number of runs r(x) and the 1-based inclusive interval of each run."""
    starts = bits.run_starts(x.bits)
    ends = [s - 1 for s in starts[1:]] + [len(x)]
    intervals = list(zip(starts, ends))
    return len(intervals), intervals


def run_of(x: BinSeq, i: int) -> int:
    """Index of the run that contains position i."""
    _check_index("i", i, len(x))
    return bits.run_labels(x.bits)[i - 1]


def period(x: BinSeq) -> int:
    return bits.period(x.bits)


def is_alternating(x: BinSeq) -> bool:
    """True for sequences of period at most two."""
    return bits.period(x.bits) <= 2


def vt_syndrome(x: Union[BinSeq, str], k: int) -> int:
    """
    k-th order VT syndrome.

    VT^0 is the Hamming weight; for k >= 1 position i carries the weight
    1^{k-1} + 2^{k-1} + ... + i^{k-1}.
    """
    if k < 0:
        raise ParamOutOfRangeError("k", k, 0, None)
    s = x.bits if isinstance(x, BinSeq) else x
    if k == 0:
        return s.count("1")
    total = 0
    weight = 0
    for i, c in enumerate(s, start=1):
        weight += i ** (k - 1)
        if c == "1":
            total += weight
    return total


def differential_bits(s: str) -> str:
    padded = "0" + s + "0"
    return "".join("1" if padded[i] != padded[i + 1] else "0" for i in range(len(s) + 1))


def differential(x: BinSeq) -> BinSeq:
    """psi(x) of length n+1."""
    return BinSeq.trusted(differential_bits(x.bits))


def apply_error_bits(s: str, deletion: Optional[int], substitution: Optional[int]) -> str:
    if substitution is not None:
        s = bits.flip(s, substitution)
    if deletion is not None:
        s = bits.delete(s, deletion)
    return s


def apply_error(x: BinSeq, op: ErrorOp) -> BinSeq:
    """
    x(d, e): substitute at e, then delete at d, both on the original indices.

    Raises DegenerateOpError when d = e.
    """
    n = len(x)
    if op.deletion is not None:
        _check_index("del", op.deletion, n)
    if op.substitution is not None:
        _check_index("sub", op.substitution, n)
    if op.deletion is not None and op.deletion == op.substitution:
        raise DegenerateOpError(op.deletion)
    return BinSeq.trusted(apply_error_bits(x.bits, op.deletion, op.substitution))


def diff_profile(x: BinSeq, y: BinSeq) -> DiffProfile:
    _check_same_length(x, y)
    if x == y:
        raise IdenticalInputsError()
    return DiffProfile(n=len(x), j=tuple(bits.diff_indices(x.bits, y.bits)))


def shifted_distances(x: BinSeq, y: BinSeq, lo: int, hi: int) -> Tuple[int, int]:
    """
    Shifted segment distances over [lo, hi].

    Returns (d_H(x_[lo+1,hi], y_[lo,hi-1]), d_H(x_[lo,hi-1], y_[lo+1,hi])).
    Both are 0 when lo >= hi.
    """
    _check_same_length(x, y)
    if lo >= hi:
        return 0, 0
    return (bits.hamming(x.bits[lo:hi], y.bits[lo - 1:hi - 1]),
            bits.hamming(x.bits[lo - 1:hi - 1], y.bits[lo:hi]))


def max_periodic_run(x: BinSeq, tmax: int) -> int:
    if tmax < 1:
        raise ParamOutOfRangeError("tmax", tmax, 1, None)
    return bits.max_periodic_run(x.bits, tmax)


def is_strong_locally_balanced(x: Union[BinSeq, str], l: int, eps: Fraction) -> bool:
    """
    Every window of length l' >= l has weight in [(1/2 - eps) l', (1/2 + eps) l'].
    """
    eps = Fraction(eps)
    if l < 1:
        raise ParamOutOfRangeError("l", l, 1, None)
    if not 0 <= eps <= Fraction(1, 2):
        raise ParamOutOfRangeError("eps", eps, 0, Fraction(1, 2))
    s = x.bits if isinstance(x, BinSeq) else x
    n = len(s)
    prefix = [0]
    for c in s:
        prefix.append(prefix[-1] + (c == "1"))
    low_ratio = Fraction(1, 2) - eps
    high_ratio = Fraction(1, 2) + eps
    for length in range(l, n + 1):
        low = low_ratio * length
        high = high_ratio * length
        for start in range(0, n - length + 1):
            w = prefix[start + length] - prefix[start]
            if w < low or w > high:
                return False
    return True


def blocks(x: Union[BinSeq, str], P: int) -> List[str]:
    """
    Split into x^{(P,1)}, ..., x^{(P, floor(n/P)+1)}.

    The last block holds the remaining n mod P symbols and is empty when P divides n.
    """
    if P < 1:
        raise ParamOutOfRangeError("P", P, 1, None)
    s = x.bits if isinstance(x, BinSeq) else x
    count = len(s) // P + 1
    return [s[i * P:(i + 1) * P] for i in range(count)]


def r_lower_bound(n: int, t_prime: int, t: int) -> float:
    """Counting bound 2^n (1 - n 2^{-(t - t')}) on |R(n, t', t)|."""
    return 2 ** n * (1 - n * 2.0 ** (-(t - t_prime)))
