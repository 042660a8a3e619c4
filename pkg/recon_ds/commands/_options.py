"""Shared flags and helpers for the command modules."""

import argparse
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO, Tuple

from ..core.codefamilies import validate
from ..core.config import get_config
from ..core.exceptions import UsageError
from ..models.code import RESIDUE_KEYS, STRUCTURAL_KEYS, CodeFamily, CodeSpec
from ..models.command import CommandConfig
from ..models.sequence import BinSeq
from ..storage.serializers import dumps, versioned

logger = logging.getLogger(__name__)

FAMILIES = [f.value for f in CodeFamily]

RESIDUE_FLAGS = ("s", "s0", "s1", "s2", "h0", "h1", "g1", "g2", "g3", "g1p", "g2p", "g3p")

# flag -> structural key
STRUCTURAL_FLAGS = {"t": "t", "t_prime": "t_prime", "P": "P", "l": "l", "eps": "eps"}


def parse_n_range(text: str) -> Tuple[int, int]:
    """'8..14' -> (8, 14); a single number is a one-element range."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError("--n-range", f"expected LO..HI, got {text!r}")
    if lo < 1 or hi < lo:
        raise UsageError("--n-range", f"expected 1 <= LO <= HI, got {lo}..{hi}")
    return lo, hi


def add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", nargs="?", const="-", metavar="PATH",
                        help="Emit versioned JSON to stdout, or to PATH")


def add_family_flags(parser: argparse.ArgumentParser, n_range: bool = False) -> None:
    parser.add_argument("--family", required=True, choices=FAMILIES, help="Code family")
    parser.add_argument("--n", type=int, help="Sequence length")
    if n_range:
        parser.add_argument("--n-range", help="Inclusive range LO..HI")
    group = parser.add_argument_group("residues")
    for flag in RESIDUE_FLAGS:
        group.add_argument(f"--{flag}", type=int)
    group = parser.add_argument_group("structural parameters")
    group.add_argument("--t", type=int)
    group.add_argument("--t-prime", type=int, dest="t_prime")
    group.add_argument("--P", type=int)
    group.add_argument("--l", type=int)
    group.add_argument("--eps", type=Fraction, help="Balance slack, e.g. 1/4")


def residue_overrides(args: argparse.Namespace) -> Dict[str, int]:
    base = CodeFamily.parse(args.family).base
    allowed = set(RESIDUE_KEYS[base]) | ({"s"} if base == CodeFamily.VT else set())
    out: Dict[str, int] = {}
    for flag in RESIDUE_FLAGS:
        value = getattr(args, flag, None)
        if value is None:
            continue
        if flag not in allowed:
            raise UsageError(f"--{flag}", f"not a residue of {args.family}; valid: {', '.join(sorted(allowed)) or 'none'}")
        out[flag] = value
    return out


def structural_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    base = CodeFamily.parse(args.family).base
    allowed = set(STRUCTURAL_KEYS[base])
    out: Dict[str, Any] = {}
    for flag, key in STRUCTURAL_FLAGS.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        if key not in allowed:
            shown = "--" + flag.replace("_", "-")
            raise UsageError(shown, f"not a parameter of {args.family}; valid: {', '.join(sorted(allowed)) or 'none'}")
        out[key] = value
    return out


def n_values(args: argparse.Namespace) -> List[int]:
    if getattr(args, "n_range", None):
        lo, hi = parse_n_range(args.n_range)
        return list(range(lo, hi + 1))
    if args.n is None:
        raise UsageError("--n", "a length is required")
    if args.n < 1:
        raise UsageError("--n", f"expected n >= 1, got {args.n}")
    return [args.n]


def build_spec(args: argparse.Namespace, n: int) -> CodeSpec:
    """Spec for one n with overrides checked against the family first."""
    spec = CodeSpec.build(args.family, n, residue_overrides(args), structural_overrides(args) or None)
    validate(spec)
    return spec


def command_config(args: argparse.Namespace, subcommand: str) -> CommandConfig:
    n_range = parse_n_range(args.n_range) if getattr(args, "n_range", None) else None
    config = CommandConfig(
        subcommand=subcommand,
        family=getattr(args, "family", None),
        n=getattr(args, "n", None),
        n_range=n_range,
        residues=residue_overrides(args) if getattr(args, "family", None) else {},
        structural=structural_overrides(args) if getattr(args, "family", None) else {},
        seed=getattr(args, "seed", None) or 0,
        output=getattr(args, "json", None) or getattr(args, "out", None),
        jobs=args.jobs or get_config().sweeps.jobs,
        format="json" if getattr(args, "json", None) else "text",
    )
    logger.debug(f"Command: {config.to_dict()}")
    return config


def parse_seq(flag: str, text: str) -> BinSeq:
    text = text.strip()
    if not text or text.strip("01"):
        raise UsageError(flag, f"expected a non-empty 0/1 string, got {text!r}")
    return BinSeq(text)


def emit(out: TextIO, args: argparse.Namespace, kind: str, payload: Any, text: Optional[str]) -> None:
    """Write text, or the versioned JSON document when --json was given."""
    target = getattr(args, "json", None)
    if target is None:
        if text:
            out.write(text if text.endswith("\n") else text + "\n")
        return
    document = dumps(versioned(kind, payload))
    if target == "-":
        out.write(document)
        return
    with open(target, "w", encoding="utf-8") as handle:
        handle.write(document)
    logger.info(f"✅ Wrote {kind} to {target}")
