"""Verification report model."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class VerifyReport:
    """
    Result of one verification check.

    passed is True when max_observed <= bound for bound checks, or when the
    check's predicate held for every scanned case (bound is then 0 and
    max_observed counts violations).
    Advisory reports are shown but never decide the exit status.
    """

    check_id: str
    n_range: Tuple[int, int]
    params: Dict[str, Any] = field(default_factory=dict)
    pairs_scanned: int = 0
    max_observed: int = 0
    bound: int = 0
    passed: bool = True
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0
    regime: str = "alphabet"
    note: Optional[str] = None
    advisory: bool = False

    @property
    def failed(self) -> bool:
        return not self.passed and not self.advisory

    def to_dict(self, include_time: bool = True) -> Dict:
        out = {
            "check_id": self.check_id,
            "n_range": list(self.n_range),
            "params": self.params,
            "regime": self.regime,
            "pairs_scanned": self.pairs_scanned,
            "max_observed": self.max_observed,
            "bound": self.bound,
            "passed": self.passed,
            "witnesses": self.witnesses,
        }
        if self.note:
            out["note"] = self.note
        if self.advisory:
            out["advisory"] = True
        if include_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out
