"""Models for differential-syndrome deltas."""

from dataclasses import dataclass
from typing import Dict, Optional

DELETION_KINDS = ("00→0", "01→1", "10→1", "11→0")
SUBSTITUTION_KINDS = ("11→00", "01→10", "10→01", "00→11")


@dataclass(frozen=True)
class EffectClass:
    """How one error changes the differential sequence psi(x)."""

    kind: str
    delta_weight: int  # wt(psi before) - wt(psi after)
    index: int
    op: str  # "deletion" or "substitution"

    def to_dict(self) -> Dict:
        return {"op": self.op, "index": self.index, "kind": self.kind,
                "delta_weight": self.delta_weight}


@dataclass(frozen=True)
class DeltaBreakdown:
    """
    Terms of VT^1(psi(x)) - VT^1(psi(y)) for a confusable quadruple.

    The boundary terms are the zeta pair when d_x > d_y and the xi pair
    when d_x < d_y; middle_sign is -1 and +1 respectively.
    """

    eta_x: int
    eta_y: int
    boundary_x: int
    boundary_y: int
    middle_sum: int
    middle_sign: int
    direct: int
    deletion_kind_x: str
    deletion_kind_y: str
    substitution_kind_x: Optional[str] = None
    substitution_kind_y: Optional[str] = None

    @property
    def total(self) -> int:
        return (self.eta_x + self.eta_y + self.boundary_x + self.boundary_y
                + self.middle_sign * self.middle_sum)

    @property
    def order(self) -> str:
        return "x-later" if self.middle_sign < 0 else "x-earlier"

    @property
    def consistent(self) -> bool:
        return self.total == self.direct

    def to_dict(self) -> Dict:
        return {
            "eta_x": self.eta_x,
            "eta_y": self.eta_y,
            "boundary_x": self.boundary_x,
            "boundary_y": self.boundary_y,
            "boundary_terms": "zeta" if self.middle_sign < 0 else "xi",
            "middle_sum": self.middle_sum,
            "middle_sign": self.middle_sign,
            "total": self.total,
            "direct": self.direct,
            "deletion_kind_x": self.deletion_kind_x,
            "deletion_kind_y": self.deletion_kind_y,
            "substitution_kind_x": self.substitution_kind_x,
            "substitution_kind_y": self.substitution_kind_y,
        }
