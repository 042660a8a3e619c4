"""
Error Balls
===========

Exact single-deletion, single-substitution and combined balls, their
pairwise intersections, and the witness enumeration that explains every
element of B(x) ∩ B(y).
"""

import logging
from typing import Iterator, Optional, Tuple

from . import bits
from .exceptions import IdenticalInputsError, LengthMismatchError, ParamOutOfRangeError
from .seqcore import diff_profile, shifted_distances
from ..models.ball import BallView, SubstitutionIntersection
from ..models.sequence import BinSeq

logger = logging.getLogger(__name__)

BitWitness = Tuple[str, int, Optional[int], int, Optional[int]]


def _check_pair(x: BinSeq, y: BinSeq) -> None:
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    if x == y:
        raise IdenticalInputsError()


def deletion_ball(x: BinSeq) -> BallView:
    """D(x): one deletion per run, so |D(x)| = r(x)."""
    if len(x) < 1:
        raise ParamOutOfRangeError("n", len(x), 1, None)
    return BallView.from_bits(bits.deletion_ball(x.bits), len(x), "deletion")


def substitution_ball(x: BinSeq) -> BallView:
    return BallView.from_bits(bits.substitution_ball(x.bits), len(x), "substitution")


def ds_ball(x: BinSeq) -> BallView:
    """B(x) = union of S(w) over w in D(x); contains D(x) itself."""
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    return BallView.from_bits(bits.ds_ball(x.bits), len(x), "ds")


def ds_ball_all_indices(x: BinSeq) -> BallView:
    """B(x) built from every (d, e) pair instead of run representatives."""
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    s = x.bits
    n = len(s)
    out = set()
    for d in range(1, n + 1):
        out.add(bits.delete(s, d))
        for e in range(1, n + 1):
            if e != d:
                out.add(bits.delete(bits.flip(s, e), d))
    return BallView.from_bits(out, n, "ds")


def deletion_intersection(x: BinSeq, y: BinSeq) -> BallView:
    _check_pair(x, y)
    common = bits.deletion_ball(x.bits) & bits.deletion_ball(y.bits)
    return BallView.from_bits(common, len(x), "deletion-intersection")


def is_deletion_intersection_empty(x: BinSeq, y: BinSeq) -> bool:
    """D(x) ∩ D(y) is empty iff both shifted middle distances are at least one."""
    profile = diff_profile(x, y)
    left, right = shifted_distances(x, y, profile.j[0], profile.j[-1])
    return left >= 1 and right >= 1


def substitution_intersection(x: BinSeq, y: BinSeq) -> SubstitutionIntersection:
    _check_pair(x, y)
    points = bits.substitution_midpoints(x.bits, y.bits)
    return SubstitutionIntersection(tuple(BinSeq.trusted(p) for p in points))


def ds_intersection_bits(a: str, b: str) -> frozenset:
    left, right = bits.ds_ball(a), bits.ds_ball(b)
    if len(left) > len(right):
        left, right = right, left
    return frozenset(z for z in left if z in right)


def ds_intersection(x: BinSeq, y: BinSeq) -> BallView:
    """B(x) ∩ B(y)."""
    _check_pair(x, y)
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    return BallView.from_bits(ds_intersection_bits(x.bits, y.bits), len(x), "ds-intersection")


def is_qualifying_pair_bits(a: str, b: str) -> bool:
    """D(x,y) and S(x,y) both empty."""
    if bits.hamming(a, b) <= 2:
        return False
    return not (bits.deletion_ball(a) & bits.deletion_ball(b))


def witness_bits(a: str, b: str) -> Iterator[BitWitness]:
    """
    Every (z, d_x, e_x, d_y, e_y) with a(d_x, e_x) = b(d_y, e_y) = z.

    Substitution indices are positions in the original sequences; None
    stands for no substitution.
    """
    n = len(a)
    dels_a = [bits.delete(a, d) for d in range(1, n + 1)]
    dels_b = [bits.delete(b, d) for d in range(1, n + 1)]
    for dx in range(1, n + 1):
        u = dels_a[dx - 1]
        for dy in range(1, n + 1):
            v = dels_b[dy - 1]
            dh = bits.hamming(u, v)
            if dh > 2:
                continue
            if dh == 0:
                yield u, dx, None, dy, None
                for p in range(1, n):
                    yield (bits.flip(u, p), dx, _lift(p, dx), dy, _lift(p, dy))
            elif dh == 1:
                (p,) = bits.diff_indices(u, v)
                yield u, dx, None, dy, _lift(p, dy)
                yield v, dx, _lift(p, dx), dy, None
            else:
                p1, p2 = bits.diff_indices(u, v)
                # u flipped at p1 equals v flipped at p2, and the other way round
                yield bits.flip(u, p1), dx, _lift(p1, dx), dy, _lift(p2, dy)
                yield bits.flip(u, p2), dx, _lift(p2, dx), dy, _lift(p1, dy)


def _lift(p: int, d: int) -> int:
    """Original index of position p in a sequence after deleting index d."""
    return p if p < d else p + 1


def witnesses(x: BinSeq, y: BinSeq) -> Iterator[Tuple[BinSeq, int, Optional[int], int, Optional[int]]]:
    _check_pair(x, y)
    for z, dx, ex, dy, ey in witness_bits(x.bits, y.bits):
        yield BinSeq.trusted(z), dx, ex, dy, ey
