"""enumerate and stats: list code members and find the best residues."""

import argparse
import logging
from typing import TextIO

from ..core.codefamilies import best_residues, enumerate_code
from ..storage.serializers import write_sequences
from ._options import add_family_flags, add_json_flag, build_spec, command_config, emit, n_values, structural_overrides

logger = logging.getLogger(__name__)


def enumerate_command(args: argparse.Namespace, out: TextIO) -> int:
    command_config(args, "enumerate")
    results = []
    for n in n_values(args):
        spec = build_spec(args, n)
        members = enumerate_code(spec)
        logger.info(f"✅ {spec.family.value} n={n}: {len(members)} codewords")
        results.append((spec, members))

    if args.out:
        write_sequences(args.out, [m for _, members in results for m in members])
        logger.info(f"✅ Wrote codewords to {args.out}")

    payload = [dict(spec.to_dict(), size=len(members), codewords=[m.bits for m in members])
               for spec, members in results]
    text = None if args.out else "".join(m.bits + "\n" for _, members in results for m in members)
    emit(out, args, "codewords", payload, text)
    return 0


def stats_command(args: argparse.Namespace, out: TextIO) -> int:
    command_config(args, "stats")
    structural = structural_overrides(args) or None
    rows = [best_residues(args.family, n, structural) for n in n_values(args)]

    lines = [f"{'family':<8} {'n':>3} {'size':>8} {'redundancy':>11}  residues"]
    for row in rows:
        residues = " ".join(f"{k}={v}" for k, v in row.best_residues.items())
        lines.append(f"{row.family.value:<8} {row.n:>3} {row.code_size:>8} {row.redundancy:>11.4f}  {residues}")
    emit(out, args, "redundancy", [row.to_dict() for row in rows], "\n".join(lines))
    return 0


def setup(cli) -> None:
    parser = cli.add_command("enumerate", enumerate_command, "List the members of a code")
    add_family_flags(parser, n_range=True)
    parser.add_argument("--out", help="Write codewords to a line-format file")
    add_json_flag(parser)

    parser = cli.add_command("stats", stats_command, "Largest residue class and redundancy per n")
    add_family_flags(parser, n_range=True)
    add_json_flag(parser)
