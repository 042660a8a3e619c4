"""
Differential Syndrome Deltas
============================

Classifies how a deletion or substitution acts on psi(x), evaluates the
eta terms of a substitution, and splits VT^1(psi(x)) - VT^1(psi(y)) for
a confusable quadruple x(d_x,e_x) = y(d_y,e_y) into substitution terms,
deletion boundary terms and the sum over the window between the two
deletions. Table lookups give the value each term must take for its
error kind.
"""

import logging
from typing import Optional, Tuple

from .exceptions import (
    DegenerateOpError,
    DegenerateOrderError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NotConfusableError,
    ParamOutOfRangeError,
)
from .seqcore import apply_error_bits, differential_bits, vt_syndrome
from ..models.delta import DELETION_KINDS, SUBSTITUTION_KINDS, DeltaBreakdown, EffectClass
from ..models.sequence import BinSeq

logger = logging.getLogger(__name__)

_MERGE = {"00": "00→0", "01": "01→1", "10": "10→1", "11": "11→0"}
_FLIP = {"11": "11→00", "01": "01→10", "10": "10→01", "00": "00→11"}


def _check_index(name: str, index: int, n: int) -> None:
    if not 1 <= index <= n:
        raise IndexOutOfRangeError(name, index, 1, n)


def _psi_at(psi: str, i: int) -> int:
    return 1 if psi[i - 1] == "1" else 0


def deletion_kind_bits(psi: str, d: int) -> str:
    return _MERGE[psi[d - 1:d + 1]]


def substitution_kind_bits(psi: str, e: int) -> str:
    return _FLIP[psi[e - 1:e + 1]]


def classify_deletion_effect(x: BinSeq, d: int) -> EffectClass:
    """Deletion at d merges (psi_d, psi_{d+1}) into their XOR."""
    _check_index("d", d, len(x))
    kind = deletion_kind_bits(differential_bits(x.bits), d)
    return EffectClass(kind=kind, delta_weight=2 if kind == "11→0" else 0, index=d, op="deletion")


def classify_substitution_effect(x: BinSeq, e: int) -> EffectClass:
    """Substitution at e complements (psi_e, psi_{e+1})."""
    _check_index("e", e, len(x))
    kind = substitution_kind_bits(differential_bits(x.bits), e)
    delta = {"11→00": 2, "00→11": -2}.get(kind, 0)
    return EffectClass(kind=kind, delta_weight=delta, index=e, op="substitution")


def eta_bits(psi: str, e: Optional[int]) -> int:
    """VT^1(psi) minus VT^1 of psi after a substitution at e; 0 without one."""
    if e is None:
        return 0
    return e * (2 * _psi_at(psi, e) - 1) + (e + 1) * (2 * _psi_at(psi, e + 1) - 1)


def eta_terms(x: BinSeq, e_x: Optional[int], y: BinSeq, e_y: Optional[int]) -> Tuple[int, int]:
    """(eta_x, eta_y); eta_y carries the opposite sign and is evaluated on y."""
    if e_x is not None:
        _check_index("e_x", e_x, len(x))
    if e_y is not None:
        _check_index("e_y", e_y, len(y))
    return eta_bits(differential_bits(x.bits), e_x), -eta_bits(differential_bits(y.bits), e_y)


def deletion_table_cell(kind: str, side: str, order: str, d: int) -> int:
    """
    Boundary-term value for a deletion kind.

    side is "x" or "y"; order is "x-later" (d_x > d_y, zeta terms) or
    "x-earlier" (d_x < d_y, xi terms).
    """
    if kind not in DELETION_KINDS:
        raise ParamOutOfRangeError("kind", kind)
    if kind == "00→0":
        return 0
    if kind == "11→0":
        return 2 * d + 1 if side == "x" else -2 * d - 1
    table = {
        ("x", "x-later"): {"01→1": 0, "10→1": -1},
        ("y", "x-later"): {"01→1": -1, "10→1": 0},
        ("x", "x-earlier"): {"01→1": 1, "10→1": 0},
        ("y", "x-earlier"): {"01→1": 0, "10→1": 1},
    }
    try:
        return table[(side, order)][kind]
    except KeyError:
        raise ParamOutOfRangeError("side/order", f"{side}/{order}")


def substitution_table_cell(kind: str, side: str, e: int) -> int:
    """eta value for a substitution kind; the y side is the negation."""
    if kind not in SUBSTITUTION_KINDS:
        raise ParamOutOfRangeError("kind", kind)
    value = {"11→00": 2 * e + 1, "01→10": 1, "10→01": -1, "00→11": -2 * e - 1}[kind]
    return value if side == "x" else -value


def decompose_bits(a: str, b: str, dx: int, ex: Optional[int], dy: int,
                   ey: Optional[int]) -> DeltaBreakdown:
    """Unchecked decomposition; callers guarantee a(dx,ex) = b(dy,ey) and dx != dy."""
    psi_a, psi_b = differential_bits(a), differential_bits(b)
    xp = differential_bits(apply_error_bits(a, None, ex))  # psi(x(0,e_x))
    yp = differential_bits(apply_error_bits(b, None, ey))  # psi(y(0,e_y))

    def px(i):
        return _psi_at(xp, i)

    def py(i):
        return _psi_at(yp, i)

    if dx > dy:
        boundary_x = dx * px(dx) + (dx + 1) * px(dx + 1) - (dx + 1) * py(dx + 1)
        boundary_y = dy * px(dy) - dy * py(dy) - (dy + 1) * py(dy + 1)
        middle = sum(px(i) for i in range(dy + 1, dx))
        sign = -1
    else:
        boundary_x = dx * px(dx) + (dx + 1) * px(dx + 1) - dx * py(dx)
        boundary_y = (dy + 1) * px(dy + 1) - dy * py(dy) - (dy + 1) * py(dy + 1)
        middle = sum(px(i) for i in range(dx + 2, dy + 1))
        sign = 1

    return DeltaBreakdown(
        eta_x=eta_bits(psi_a, ex),
        eta_y=-eta_bits(psi_b, ey),
        boundary_x=boundary_x,
        boundary_y=boundary_y,
        middle_sum=middle,
        middle_sign=sign,
        direct=vt_syndrome(psi_a, 1) - vt_syndrome(psi_b, 1),
        deletion_kind_x=deletion_kind_bits(xp, dx),
        deletion_kind_y=deletion_kind_bits(yp, dy),
        substitution_kind_x=substitution_kind_bits(psi_a, ex) if ex is not None else None,
        substitution_kind_y=substitution_kind_bits(psi_b, ey) if ey is not None else None,
    )


def delta_psi_decomposition(x: BinSeq, y: BinSeq, d_x: int, e_x: Optional[int],
                            d_y: int, e_y: Optional[int]) -> DeltaBreakdown:
    """
    Decompose VT^1(psi(x)) - VT^1(psi(y)).

    Raises NotConfusableError when x(d_x,e_x) != y(d_y,e_y) and
    DegenerateOrderError when d_x = d_y.
    """
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    n = len(x)
    for name, value in (("d_x", d_x), ("d_y", d_y), ("e_x", e_x), ("e_y", e_y)):
        if value is not None:
            _check_index(name, value, n)
    if e_x is not None and e_x == d_x:
        raise DegenerateOpError(d_x)
    if e_y is not None and e_y == d_y:
        raise DegenerateOpError(d_y)
    if d_x == d_y:
        raise DegenerateOrderError(d_x)
    if apply_error_bits(x.bits, d_x, e_x) != apply_error_bits(y.bits, d_y, e_y):
        raise NotConfusableError()
    return decompose_bits(x.bits, y.bits, d_x, e_x, d_y, e_y)


def table_consistent(bd: DeltaBreakdown, dx: int, ex: Optional[int], dy: int,
                     ey: Optional[int]) -> bool:
    """Every term equals the table value selected by its independently read kind."""
    if bd.boundary_x != deletion_table_cell(bd.deletion_kind_x, "x", bd.order, dx):
        return False
    if bd.boundary_y != deletion_table_cell(bd.deletion_kind_y, "y", bd.order, dy):
        return False
    if ex is not None and bd.eta_x != substitution_table_cell(bd.substitution_kind_x, "x", ex):
        return False
    if ey is not None and bd.eta_y != substitution_table_cell(bd.substitution_kind_y, "y", ey):
        return False
    return True


def n_xy(x: BinSeq, y: BinSeq, d_x: int, e_x: Optional[int], d_y: int,
         e_y: Optional[int]) -> int:
    """
    wt(psi(x)) - wt(psi(y)) assembled from the four per-error weight changes.

    The two substitution changes and the two deletion changes are read
    from the psi pairs; the result is checked against the direct weights.
    """
    bd = delta_psi_decomposition(x, y, d_x, e_x, d_y, e_y)
    sub = {"11→00": 2, "00→11": -2}
    total = 0
    if bd.substitution_kind_x:
        total += sub.get(bd.substitution_kind_x, 0)
    if bd.substitution_kind_y:
        total -= sub.get(bd.substitution_kind_y, 0)
    total += 2 if bd.deletion_kind_x == "11→0" else 0
    total -= 2 if bd.deletion_kind_y == "11→0" else 0
    direct = differential_bits(x.bits).count("1") - differential_bits(y.bits).count("1")
    if total != direct:
        raise NotConfusableError(f"psi-weight change {total} disagrees with direct value {direct}")
    return total
