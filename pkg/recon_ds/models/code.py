"""Code family models."""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple


class CodeFamily(str, Enum):
    """Code construction tags."""

    VT = "vt"
    C1 = "c1"
    CL = "cl"
    RCONSTRAINED = "r"
    LOCBAL = "locbal"
    CDSP = "cdsp"
    C14 = "c14"
    C11 = "c11"
    C9 = "c9"
    C5 = "c5"

    @property
    def base(self) -> "CodeFamily":
        """C14 is C1 and C5 is CL under another name."""
        return {CodeFamily.C14: CodeFamily.C1, CodeFamily.C5: CodeFamily.CL}.get(self, self)

    @classmethod
    def parse(cls, value: str) -> "CodeFamily":
        return cls(value.strip().lower())


BLOCK_KEYS = ("g1", "g2", "g3", "g1p", "g2p", "g3p")

RESIDUE_KEYS: Dict[CodeFamily, Tuple[str, ...]] = {
    CodeFamily.VT: ("s1",),
    CodeFamily.C1: ("s0", "s1"),
    CodeFamily.CL: ("s0", "s1", "s2"),
    CodeFamily.RCONSTRAINED: (),
    CodeFamily.LOCBAL: (),
    CodeFamily.CDSP: BLOCK_KEYS,
    CodeFamily.C11: ("s0", "s1") + BLOCK_KEYS,
    CodeFamily.C9: ("s0", "s1", "h0", "h1") + BLOCK_KEYS,
}

STRUCTURAL_KEYS: Dict[CodeFamily, Tuple[str, ...]] = {
    CodeFamily.VT: (),
    CodeFamily.C1: (),
    CodeFamily.CL: (),
    CodeFamily.RCONSTRAINED: ("t_prime", "t"),
    CodeFamily.LOCBAL: ("l", "eps"),
    CodeFamily.CDSP: ("P",),
    CodeFamily.C11: ("t", "P"),
    CodeFamily.C9: ("l", "eps", "t", "P"),
}

# The reconstruction guarantee N for each family that has one
RECONSTRUCTION_N: Dict[CodeFamily, int] = {
    CodeFamily.C1: 14,
    CodeFamily.C11: 11,
    CodeFamily.C9: 9,
    CodeFamily.CL: 5,
}


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n > 1 else 0


def default_structural(family: CodeFamily, n: int) -> Dict[str, Any]:
    """Structural parameters exactly as the constructions set them."""
    family = family.base
    t = ceil_log2(n) + 3
    if family == CodeFamily.RCONSTRAINED:
        return {"t_prime": 2, "t": ceil_log2(n) + 3}
    if family in (CodeFamily.LOCBAL, CodeFamily.C9):
        l = math.ceil(1296 * math.log2(max(n, 2)))
        out: Dict[str, Any] = {"l": l, "eps": Fraction(1, 18)}
        if family == CodeFamily.C9:
            out.update({"t": t, "P": 4 * l})
        return out
    if family == CodeFamily.C11:
        return {"t": t, "P": 6 * t + 4}
    return {}


@dataclass(frozen=True)
class CodeSpec:
    """A code family with its residues and structural parameters."""

    family: CodeFamily
    n: int
    residues: Tuple[Tuple[str, int], ...] = ()
    structural: Tuple[Tuple[str, Any], ...] = ()
    overridden: bool = False

    @classmethod
    def build(cls, family, n: int, residues: Optional[Dict[str, int]] = None,
              structural: Optional[Dict[str, Any]] = None) -> "CodeSpec":
        """
        Fill missing residues with 0 and missing structural values with the
        construction defaults. Any structural value that differs from those
        defaults marks the spec overridden.
        """
        if isinstance(family, str):
            family = CodeFamily.parse(family)
        base = family.base
        given = dict(residues or {})
        if base == CodeFamily.VT and "s" in given:
            given["s1"] = given.pop("s")
        res = tuple((k, int(given.get(k, 0))) for k in RESIDUE_KEYS[base])
        defaults = default_structural(base, n)
        chosen = dict(defaults)
        for key, value in (structural or {}).items():
            if value is None:
                continue
            chosen[key] = Fraction(value) if key == "eps" else int(value)
        overridden = any(chosen.get(k) != defaults.get(k) for k in chosen)
        struct = tuple((k, chosen.get(k)) for k in STRUCTURAL_KEYS[base])
        return cls(family=family, n=n, residues=res, structural=struct, overridden=overridden)

    @property
    def base(self) -> CodeFamily:
        return self.family.base

    def residue(self, key: str) -> int:
        return dict(self.residues)[key]

    def param(self, key: str, default=None):
        return dict(self.structural).get(key, default)

    def residue_tuple(self) -> Tuple[int, ...]:
        return tuple(v for _, v in self.residues)

    def with_residues(self, values: Tuple[int, ...]) -> "CodeSpec":
        keys = RESIDUE_KEYS[self.base]
        return CodeSpec(self.family, self.n, tuple(zip(keys, values)), self.structural, self.overridden)

    @property
    def regime(self) -> str:
        return "override" if self.overridden else "nominal"

    def to_dict(self) -> Dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "residues": dict(self.residues),
            "structural": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.structural},
            "regime": self.regime,
        }


@dataclass
class RedundancyRow:
    """Best residue choice for one n and the resulting redundancy."""

    family: CodeFamily
    n: int
    best_residues: Dict[str, int] = field(default_factory=dict)
    code_size: int = 0
    redundancy: float = math.inf

    def to_dict(self) -> Dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "best_residues": dict(self.best_residues),
            "code_size": self.code_size,
            "redundancy": round(self.redundancy, 6),
        }
