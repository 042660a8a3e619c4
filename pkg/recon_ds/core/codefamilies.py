"""
Code Families
=============

Membership predicates, enumeration and residue search for the VT code,
C1 (alias C14), the list-decodable CL (alias C5), the period-constrained
set R(n, t', t), the locally-balanced set, the P-bounded CDSP code, and
the composite constructions C11 and C9.

Every family is described by a signature: the tuple of reduced
syndromes that its residues pin down. Membership compares a sequence's
signature with the spec's residues after the structural constraints
pass, and residue search groups all of {0,1}^n by signature.
"""

import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import bits
from .config import get_config
from .balls import ds_intersection_bits
from .exceptions import (
    IdenticalInputsError,
    LengthMismatchError,
    ParamOutOfRangeError,
    TooLargeError,
)
from .seqcore import blocks, differential_bits, is_strong_locally_balanced, vt_syndrome
from ..models.code import (
    RESIDUE_KEYS,
    STRUCTURAL_KEYS,
    CodeFamily,
    CodeSpec,
    RedundancyRow,
)
from ..models.sequence import BinSeq

logger = logging.getLogger(__name__)


def _cap(max_n: Optional[int]) -> int:
    return max_n if max_n is not None else get_config().max_n


def check_exhaustive(n: int, max_n: Optional[int] = None) -> None:
    cap = _cap(max_n)
    if n > cap:
        raise TooLargeError(n, cap)


# -------------------------------------------------------------------------
# Ranges and validation
# -------------------------------------------------------------------------

def residue_moduli(spec: CodeSpec) -> Dict[str, int]:
    """Modulus of every residue of the spec's family."""
    n = spec.n
    base = spec.base
    out: Dict[str, int] = {}
    if base == CodeFamily.VT:
        out["s1"] = 2 * n
    if base in (CodeFamily.C1, CodeFamily.CL, CodeFamily.C11):
        out["s0"] = 4
        out["s1"] = 2 * n
    if base == CodeFamily.CL:
        out["s2"] = 2 * n * n
    if base == CodeFamily.C9:
        out.update({"s0": 4, "s1": 3 * n + 1, "h0": 7, "h1": 6 * (n + 1) + 1})
    if base in (CodeFamily.CDSP, CodeFamily.C11, CodeFamily.C9):
        P = spec.param("P")
        for k in (1, 2, 3):
            out[f"g{k}"] = 3 * (2 * P) ** k
            out[f"g{k}p"] = 3 * (2 * P) ** k
    return out


def validate(spec: CodeSpec) -> None:
    """Raise ParamOutOfRangeError for any out-of-range parameter."""
    if spec.n < 1:
        raise ParamOutOfRangeError("n", spec.n, 1, None)
    base = spec.base
    for key in STRUCTURAL_KEYS[base]:
        value = spec.param(key)
        if value is None:
            raise ParamOutOfRangeError(key, value)
        if key == "eps":
            if not 0 <= value <= Fraction(1, 2):
                raise ParamOutOfRangeError(key, value, 0, Fraction(1, 2))
        elif value < 1:
            raise ParamOutOfRangeError(key, value, 1, None)
    if base == CodeFamily.RCONSTRAINED and spec.param("t") < spec.param("t_prime"):
        raise ParamOutOfRangeError("t", spec.param("t"), spec.param("t_prime"), None)
    moduli = residue_moduli(spec)
    for key, value in spec.residues:
        if not 0 <= value < moduli[key]:
            raise ParamOutOfRangeError(key, value, 0, moduli[key] - 1)


# -------------------------------------------------------------------------
# Signatures
# -------------------------------------------------------------------------

def paired_block_syndromes(x, P: int, k: int) -> Tuple[int, int]:
    """
    Unreduced sums of VT^k over consecutive block pairs.

    Returns (sum over (x^(P,2i-1) x^(P,2i)), sum over (x^(P,2i) x^(P,2i+1))).
    A missing partner block counts as empty and an empty sum is 0.
    """
    parts = blocks(x, P)
    m = len(parts)
    odd = 0
    for i in range(0, m, 2):
        pair = parts[i] + (parts[i + 1] if i + 1 < m else "")
        odd += vt_syndrome(pair, k)
    even = 0
    for i in range(1, m, 2):
        pair = parts[i] + (parts[i + 1] if i + 1 < m else "")
        even += vt_syndrome(pair, k)
    return odd, even


def _block_signature(s: str, P: int) -> Tuple[int, ...]:
    odds, evens = [], []
    for k in (1, 2, 3):
        modulus = 3 * (2 * P) ** k
        odd, even = paired_block_syndromes(s, P, k)
        odds.append(odd % modulus)
        evens.append(even % modulus)
    return tuple(odds + evens)


def signature_bits(s: str, spec: CodeSpec) -> Tuple[int, ...]:
    n = len(s)
    base = spec.base
    if base == CodeFamily.VT:
        return (vt_syndrome(s, 1) % (2 * n),)
    if base in (CodeFamily.RCONSTRAINED, CodeFamily.LOCBAL):
        return ()
    if base == CodeFamily.CDSP:
        return _block_signature(s, spec.param("P"))
    head: Tuple[int, ...]
    if base == CodeFamily.C9:
        psi = differential_bits(s)
        head = (s.count("1") % 4, vt_syndrome(s, 1) % (3 * n + 1),
                psi.count("1") % 7, vt_syndrome(psi, 1) % (6 * (n + 1) + 1))
    else:
        head = (s.count("1") % 4, vt_syndrome(s, 1) % (2 * n))
        if base == CodeFamily.CL:
            head += (vt_syndrome(s, 2) % (2 * n * n),)
    if base in (CodeFamily.C11, CodeFamily.C9):
        head += _block_signature(s, spec.param("P"))
    return head


def structural_ok_bits(s: str, spec: CodeSpec) -> bool:
    base = spec.base
    if base == CodeFamily.RCONSTRAINED:
        return bits.max_periodic_run(s, spec.param("t_prime")) <= spec.param("t")
    if base in (CodeFamily.C11, CodeFamily.C9):
        if bits.max_periodic_run(s, 2) > spec.param("t"):
            return False
    if base in (CodeFamily.LOCBAL, CodeFamily.C9):
        l, eps = spec.param("l"), spec.param("eps")
        return (is_strong_locally_balanced(s, l, eps)
                and is_strong_locally_balanced(differential_bits(s), l, eps))
    return True


def signature(x: BinSeq, spec: CodeSpec) -> Tuple[int, ...]:
    """The residue tuple x would need for membership, in RESIDUE_KEYS order."""
    if len(x) != spec.n:
        raise LengthMismatchError(len(x), spec.n)
    return signature_bits(x.bits, spec)


def member_bits(s: str, spec: CodeSpec) -> bool:
    return structural_ok_bits(s, spec) and signature_bits(s, spec) == spec.residue_tuple()


def member(x: BinSeq, spec: CodeSpec) -> bool:
    validate(spec)
    if len(x) != spec.n:
        raise LengthMismatchError(len(x), spec.n)
    return member_bits(x.bits, spec)


# -------------------------------------------------------------------------
# Enumeration and residue search
# -------------------------------------------------------------------------

def enumerate_bits(spec: CodeSpec, max_n: Optional[int] = None) -> List[str]:
    validate(spec)
    check_exhaustive(spec.n, max_n)
    return [s for s in bits.all_sequences(spec.n) if member_bits(s, spec)]


def enumerate_code(spec: CodeSpec, max_n: Optional[int] = None) -> List[BinSeq]:
    """All members in lexicographic order."""
    return [BinSeq.trusted(s) for s in enumerate_bits(spec, max_n)]


def residue_classes(spec: CodeSpec, max_n: Optional[int] = None) -> Dict[Tuple[int, ...], List[str]]:
    """Every structurally valid sequence grouped by signature, keys sorted."""
    validate(spec.with_residues(tuple(0 for _ in spec.residues)))
    check_exhaustive(spec.n, max_n)
    groups: Dict[Tuple[int, ...], List[str]] = {}
    for s in bits.all_sequences(spec.n):
        if structural_ok_bits(s, spec):
            groups.setdefault(signature_bits(s, spec), []).append(s)
    return dict(sorted(groups.items()))


def best_residues(family, n: int, structural: Optional[Dict] = None,
                  max_n: Optional[int] = None) -> RedundancyRow:
    """Largest residue class; ties go to the lexicographically smallest tuple."""
    spec = CodeSpec.build(family, n, structural=structural)
    validate(spec)
    check_exhaustive(n, max_n)
    counts: Counter = Counter()
    for s in bits.all_sequences(n):
        if structural_ok_bits(s, spec):
            counts[signature_bits(s, spec)] += 1
    if not counts:
        return RedundancyRow(family=spec.family, n=n)
    size = max(counts.values())
    best = min(sig for sig, c in counts.items() if c == size)
    keys = RESIDUE_KEYS[spec.base]
    row = RedundancyRow(
        family=spec.family,
        n=n,
        best_residues=dict(zip(keys, best)),
        code_size=size,
        redundancy=n - math.log2(size),
    )
    logger.debug(f"best residues {spec.family.value} n={n}: {row.best_residues} size={size}")
    return row


def count_r_constrained(n: int, t_prime: int, t: int, max_n: Optional[int] = None) -> int:
    """|R(n, t', t)| by exhaustive count."""
    check_exhaustive(n, max_n)
    return sum(1 for s in bits.all_sequences(n) if bits.max_periodic_run(s, t_prime) <= t)


def is_p_bounded_pair_safe(x: BinSeq, y: BinSeq, P: int) -> bool:
    """True iff |x~| > P or B(x) ∩ B(y) is empty."""
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    if x == y:
        raise IdenticalInputsError()
    if P < 1:
        raise ParamOutOfRangeError("P", P, 1, None)
    j = bits.diff_indices(x.bits, y.bits)
    if j[-1] - j[0] + 1 > P:
        return True
    return not ds_intersection_bits(x.bits, y.bits)
