"""
Confusability Structure
=======================

Splits B(x) ∩ B(y) into the eighteen (overlapping) subsets B_1..B_18 by
the relative order of the deletion and substitution indices, collects the
deletion-index pairs E_1..E_18, evaluates the closed forms for E_k, and
provides the segment-distance and periodic-decomposition tools the
structural bounds are phrased in.

Absent substitution indices never satisfy an inequality, so B_7..B_18
need both substitutions and B_1..B_6 need exactly one.
"""

import logging
from typing import Callable, Dict, FrozenSet, List, Optional, Set, Tuple

from . import bits
from .balls import witness_bits
from .exceptions import (
    IdenticalInputsError,
    IndexOutOfRangeError,
    LengthMismatchError,
    ParamOutOfRangeError,
    PreconditionViolatedError,
)
from ..models.ball import BallView
from ..models.partition import SUBSET_IDS, SubsetPartition, TupleClass
from ..models.sequence import BinSeq

logger = logging.getLogger(__name__)

Predicate = Callable[[int, Optional[int], int, Optional[int]], bool]

# Rows (d1, d2, d3) that a pair x(d_x,0), y(d_y,0) at distance 1 or 2 can realize
TUPLE_ROWS = frozenset({
    (1, 0, 0), (0, 0, 1), (0, 1, 0),
    (2, 0, 0), (0, 0, 2), (1, 0, 1),
    (1, 1, 0), (0, 1, 1), (0, 2, 0),
})

# (periodic pieces, extra symbols) allowed for x~ once |B(x,y)| > 10
BUDGET_B5_B6 = (4, 0)
BUDGET_B11_B12 = (5, 2)
BUDGET_B7_TO_B10 = (6, 4)


def _one(dx, ex, dy, ey) -> bool:
    return (ex is None) != (ey is None)


def _both(dx, ex, dy, ey) -> bool:
    return ex is not None and ey is not None


PREDICATES: Dict[int, Predicate] = {
    1: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and ex < dx < dy) or (ex is None and ey < dx < dy)),
    2: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and ex < dy < dx) or (ex is None and ey < dy < dx)),
    3: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and dx < dy < ex) or (ex is None and dx < dy < ey)),
    4: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and dy < dx < ex) or (ex is None and dy < dx < ey)),
    5: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and dx < ex <= dy) or (ex is None and dx <= ey < dy)),
    6: lambda dx, ex, dy, ey: _one(dx, ex, dy, ey) and (
        (ey is None and dy <= ex < dx) or (ex is None and dy < ey <= dx)),
    7: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and ex < dx <= dy and ey < dx <= dy,
    8: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and ex < dy <= dx and ey < dy <= dx,
    9: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and dx <= dy < ex and dx <= dy < ey,
    10: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and dy <= dx < ex and dy <= dx < ey,
    11: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        ex < dx <= dy < ey or ey < dx <= dy < ex),
    12: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        ex < dy <= dx < ey or ey < dy <= dx < ex),
    13: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        ex < dx <= ey < dy or ey < dx < ex <= dy),
    14: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        ex < dy < ey <= dx or ey < dy <= ex < dx),
    15: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        dx < ex <= dy < ey or dx <= ey < dy < ex),
    16: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and (
        dy <= ex < dx < ey or dy < ey <= dx < ex),
    17: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and dx < ex <= dy and dx <= ey < dy,
    18: lambda dx, ex, dy, ey: _both(dx, ex, dy, ey) and dy <= ex < dx and dy < ey <= dx,
}


def _check_pair(x: BinSeq, y: BinSeq) -> None:
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    if x == y:
        raise IdenticalInputsError()


def classify_tuple(x: BinSeq, y: BinSeq, d_x: int, d_y: int) -> TupleClass:
    """Split d_H(x(d_x,0), y(d_y,0)) into prefix, shifted middle and suffix parts."""
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    n = len(x)
    for name, d in (("d_x", d_x), ("d_y", d_y)):
        if not 1 <= d <= n:
            raise IndexOutOfRangeError(name, d, 1, n)
    d1, d2, d3 = tuple_bits(x.bits, y.bits, d_x, d_y)
    return TupleClass(d1, d2, d3, "x-first" if d_x <= d_y else "y-first")


def tuple_bits(a: str, b: str, d_x: int, d_y: int) -> Tuple[int, int, int]:
    lo, hi = min(d_x, d_y), max(d_x, d_y)
    d1 = bits.hamming(a[:lo - 1], b[:lo - 1])
    if d_x <= d_y:
        d2 = bits.hamming(a[lo:hi], b[lo - 1:hi - 1])
    else:
        d2 = bits.hamming(a[lo - 1:hi - 1], b[lo:hi])
    d3 = bits.hamming(a[hi:], b[hi:])
    return d1, d2, d3


class RawPartition:
    """B_k / E_k over bit strings with one witness per (k, z); used by the sweeps."""

    __slots__ = ("subsets", "epairs", "witnesses")

    def __init__(self):
        self.subsets: List[Set[str]] = [set() for _ in range(19)]
        self.epairs: List[Set[Tuple[int, int]]] = [set() for _ in range(19)]
        self.witnesses: List[Dict[str, tuple]] = [dict() for _ in range(19)]

    def union_of(self, ids) -> Set[str]:
        out: Set[str] = set()
        for k in ids:
            out |= self.subsets[k]
        return out

    def size(self, k: int) -> int:
        return len(self.subsets[k])


def partition_bits(a: str, b: str) -> RawPartition:
    part = RawPartition()
    for z, dx, ex, dy, ey in witness_bits(a, b):
        for k in SUBSET_IDS:
            if PREDICATES[k](dx, ex, dy, ey):
                part.subsets[k].add(z)
                part.epairs[k].add((dx, dy))
                part.witnesses[k].setdefault(z, (dx, ex, dy, ey))
    return part


def subset_partition(x: BinSeq, y: BinSeq) -> SubsetPartition:
    """Brute-force B_1..B_18 and E_1..E_18 for a pair."""
    _check_pair(x, y)
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    raw = partition_bits(x.bits, y.bits)
    subsets = {k: frozenset(BinSeq.trusted(z) for z in raw.subsets[k]) for k in SUBSET_IDS}
    union = set()
    for k in SUBSET_IDS:
        union |= raw.subsets[k]
    witnesses = {
        k: {BinSeq.trusted(z): (BinSeq.trusted(z),) + w for z, w in raw.witnesses[k].items()}
        for k in SUBSET_IDS
    }
    return SubsetPartition(
        subsets=subsets,
        epairs={k: frozenset(raw.epairs[k]) for k in SUBSET_IDS},
        union=BallView.from_bits(union, len(x), "partition-union"),
        witnesses=witnesses,
    )


# -------------------------------------------------------------------------
# Closed forms for E_k
# -------------------------------------------------------------------------

# k -> (shift direction, first j rank, last j rank counted from the end, target distance,
#       whether the pair is reported as (d_x, d_y) = (first, last) or swapped, minimum d_H)
# Ranks: first j_r with r >= 1; last j_{dH - s} with s >= 0.
_CLOSED_FORMS = {
    1: ("left", 2, 0, 0, False, 2),
    3: ("left", 1, 1, 0, False, 2),
    5: ("left", 1, 0, 1, False, 1),
    7: ("left", 3, 0, 0, False, 3),
    9: ("left", 1, 2, 0, False, 3),
    11: ("left", 2, 1, 0, False, 3),
    13: ("left", 2, 0, 1, False, 2),
    15: ("left", 1, 1, 1, False, 2),
    2: ("right", 2, 0, 0, True, 2),
    4: ("right", 1, 1, 0, True, 2),
    6: ("right", 1, 0, 1, True, 1),
    8: ("right", 3, 0, 0, True, 3),
    10: ("right", 1, 2, 0, True, 3),
    12: ("right", 2, 1, 0, True, 3),
    14: ("right", 2, 0, 1, True, 2),
    16: ("right", 1, 1, 1, True, 2),
}


def shift_distance(a: str, b: str, lo: int, hi: int, direction: str) -> int:
    if lo >= hi:
        return 0
    if direction == "left":
        return bits.hamming(a[lo:hi], b[lo - 1:hi - 1])
    return bits.hamming(a[lo - 1:hi - 1], b[lo:hi])


def closed_form_E_bits(a: str, b: str, k: int) -> FrozenSet[Tuple[int, int]]:
    j = bits.diff_indices(a, b)
    if not j:
        raise IdenticalInputsError()
    dh = len(j)
    if k in (17, 18):
        return _closed_form_boundary(a, b, k, j)
    if k not in _CLOSED_FORMS:
        raise ParamOutOfRangeError("k", k, 1, 18)
    direction, first, last, target, swapped, min_dh = _CLOSED_FORMS[k]
    if dh < min_dh:
        raise PreconditionViolatedError(f"E_{k} needs d_H >= {min_dh}, got {dh}")
    lo, hi = j[first - 1], j[dh - 1 - last]
    if lo > hi:
        raise PreconditionViolatedError(f"E_{k} index window is empty at d_H = {dh}")
    dist = shift_distance(a, b, lo, hi, direction)
    if target == 1 and dist == 0:
        raise PreconditionViolatedError(f"E_{k} is determined only for shifted distance >= 1")
    if dist != target:
        return frozenset()
    return frozenset({(hi, lo) if swapped else (lo, hi)})


def _closed_form_boundary(a: str, b: str, k: int, j: List[int]) -> FrozenSet[Tuple[int, int]]:
    n = len(a)
    j1, jd = j[0], j[-1]
    direction = "left" if k == 17 else "right"
    dist = shift_distance(a, b, j1, jd, direction)
    if dist == 0:
        raise PreconditionViolatedError(f"E_{k} is determined only for shifted distance >= 1")
    if dist >= 3:
        return frozenset()
    if dist == 2:
        return frozenset({(j1, jd) if k == 17 else (jd, j1)})
    # dist == 1: resolve the outer boundary indices by scanning, one per run
    out = set()
    if k == 17:
        fixed_y = bits.delete(b, jd)
        out |= _scan_outer(a, range(1, j1), lambda d: (d, jd), fixed_y, side="x")
        fixed_x = bits.delete(a, j1)
        out |= _scan_outer(b, range(jd + 1, n + 1), lambda d: (j1, d), fixed_x, side="y")
    else:
        fixed_x = bits.delete(a, jd)
        out |= _scan_outer(b, range(1, j1), lambda d: (jd, d), fixed_x, side="y")
        fixed_y = bits.delete(b, j1)
        out |= _scan_outer(a, range(jd + 1, n + 1), lambda d: (d, j1), fixed_y, side="x")
    return frozenset(out)


def _scan_outer(s: str, candidates, make_pair, other: str, side: str) -> Set[Tuple[int, int]]:
    labels = bits.run_labels(s)
    seen = set()
    out = set()
    for d in candidates:
        if labels[d - 1] in seen:
            continue
        if bits.hamming(bits.delete(s, d), other) <= 2:
            seen.add(labels[d - 1])
            out.add(make_pair(d))
    return out


def closed_form_E(x: BinSeq, y: BinSeq, k: int) -> FrozenSet[Tuple[int, int]]:
    """
    Candidate (d_x, d_y) pairs for E_k from the shifted-distance tests.

    Raises PreconditionViolatedError when the d_H guard fails or the
    shifted distance falls in a case the closed form does not decide.
    """
    _check_pair(x, y)
    if not 1 <= k <= 18:
        raise ParamOutOfRangeError("k", k, 1, 18)
    return closed_form_E_bits(x.bits, y.bits, k)


def run_classes(a: str, b: str, pairs) -> Set[Tuple[int, int]]:
    """Map (d_x, d_y) pairs to (run of d_x in x, run of d_y in y)."""
    la, lb = bits.run_labels(a), bits.run_labels(b)
    return {(la[dx - 1], lb[dy - 1]) for dx, dy in pairs}


# -------------------------------------------------------------------------
# Periodic decompositions
# -------------------------------------------------------------------------

def _piece_ok(s: str, i: int, j: int) -> bool:
    return bits.period(s[i:j]) <= 2


def min_p2_decomposition(s) -> Tuple[int, int]:
    """
    Split s into substrings of period <= 2 using the fewest pieces, then the
    fewest single symbols. Returns (pieces of length >= 2, pieces of length 1).
    """
    text = s.bits if isinstance(s, BinSeq) else s
    m = len(text)
    # best[i] = (total pieces, singles) for text[:i]
    best: List[Optional[Tuple[int, int]]] = [None] * (m + 1)
    best[0] = (0, 0)
    for j in range(1, m + 1):
        for i in range(j):
            if best[i] is None or not _piece_ok(text, i, j):
                continue
            single = 1 if j - i == 1 else 0
            cand = (best[i][0] + 1, best[i][1] + single)
            if best[j] is None or cand < best[j]:
                best[j] = cand
    total, singles = best[m]
    return total - singles, singles


def fits_p2_budget(s, periodic: int, extra: int) -> bool:
    """
    True when s splits into at most `periodic` pieces of length >= 2 and at
    most `periodic + extra` pieces in total, every piece of period <= 2.
    """
    text = s.bits if isinstance(s, BinSeq) else s
    m = len(text)
    # frontier[i]: long-piece count -> fewest singles for text[:i]
    frontier: List[Dict[int, int]] = [dict() for _ in range(m + 1)]
    frontier[0][0] = 0
    for j in range(1, m + 1):
        for i in range(j):
            if not frontier[i] or not _piece_ok(text, i, j):
                continue
            is_long = j - i >= 2
            for longs, singles in frontier[i].items():
                key = longs + is_long
                value = singles + (not is_long)
                if key > periodic:
                    continue
                if value < frontier[j].get(key, value + 1):
                    frontier[j][key] = value
    return any(longs + singles <= periodic + extra for longs, singles in frontier[m].items())


# -------------------------------------------------------------------------
# Run-parity tools
# -------------------------------------------------------------------------

def run_parity_distances(alpha: int, w: str, beta: int) -> Tuple[int, int]:
    """(d_H(w beta, ~alpha w), d_H(alpha w, w ~beta)) for symbols alpha, beta."""
    a, b = str(alpha), str(beta)
    na, nb = bits.FLIP[a], bits.FLIP[b]
    return bits.hamming(w + b, na + w), bits.hamming(a + w, w + nb)


def run_count(s: str) -> int:
    return len(bits.run_starts(s))


def remark_case_holds(alpha: int, w: str, beta: int) -> bool:
    """The subcase split of the run-parity distances by r(w)."""
    d1, d2 = run_parity_distances(alpha, w, beta)
    r = run_count(w)
    if alpha == beta:
        checks = [
            (d1 == d2 == 1, r <= 1),
            (d1 >= 3 and d2 >= 3, r >= 3),
            (d1 != d2 and {d1, d2} == {1, 3}, r == 2),
        ]
    else:
        checks = [
            (d1 == d2 == 0, r == 0),
            (d1 == d2 == 2, r == 2),
            (d1 >= 4 and d2 >= 4, r >= 4),
            (d1 != d2 and {d1, d2} == {0, 2}, r == 1),
            (d1 != d2 and {d1, d2} == {2, 4}, r == 3),
        ]
    return all(lhs == rhs for lhs, rhs in checks)


def block_parities(a: str, b: str) -> List[Tuple[int, int]]:
    """Left/right shifted distances between every pair of consecutive disagreements."""
    j = bits.diff_indices(a, b)
    return [
        (shift_distance(a, b, lo, hi, "left"), shift_distance(a, b, lo, hi, "right"))
        for lo, hi in zip(j, j[1:])
    ]


def is_shift_alternating_pair(a: str, b: str) -> bool:
    """x_[1,m-1] = y_[2,m] and x_[2,m] = y_[1,m-1]."""
    return a[:-1] == b[1:] and a[1:] == b[:-1]
