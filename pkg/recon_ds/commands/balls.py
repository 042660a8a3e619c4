"""ball and intersect: error balls and their case split."""

import argparse
from typing import TextIO

from ..core.balls import (
    deletion_ball,
    deletion_intersection,
    ds_ball,
    ds_intersection,
    substitution_ball,
    substitution_intersection,
)
from ..core.confusability import subset_partition
from ..core.exceptions import LengthMismatchError
from ..models.partition import SUBSET_IDS
from ._options import add_json_flag, emit, parse_seq

BALLS = {"ds": ds_ball, "deletion": deletion_ball, "substitution": substitution_ball}


def ball_command(args: argparse.Namespace, out: TextIO) -> int:
    x = parse_seq("x", args.x)
    view = BALLS[args.kind](x)
    emit(out, args, "ball", view.to_dict(), "".join(z.bits + "\n" for z in view))
    return 0


def intersect_command(args: argparse.Namespace, out: TextIO) -> int:
    x, y = parse_seq("x", args.x), parse_seq("y", args.y)
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))

    if args.kind == "deletion":
        view = deletion_intersection(x, y)
        emit(out, args, "intersection", view.to_dict(), "".join(z.bits + "\n" for z in view))
        return 0
    if args.kind == "substitution":
        common = substitution_intersection(x, y)
        emit(out, args, "intersection", common.to_dict(),
             "".join(z.bits + "\n" for z in sorted(common.elements)))
        return 0

    view = ds_intersection(x, y)
    if not args.partition:
        emit(out, args, "intersection", view.to_dict(), "".join(z.bits + "\n" for z in view))
        return 0

    part = subset_partition(x, y)
    lines = [f"|B(x,y)| = {len(view)}"]
    for k in SUBSET_IDS:
        members = sorted(part.subsets.get(k, ()))
        if not members:
            continue
        pairs = " ".join(f"({dx},{dy})" for dx, dy in sorted(part.epairs.get(k, ())))
        lines.append(f"B{k}: {' '.join(z.bits for z in members)}  E{k}: {pairs}")
    emit(out, args, "partition", dict(view.to_dict(), partition=part.to_dict()), "\n".join(lines))
    return 0


def setup(cli) -> None:
    parser = cli.add_command("ball", ball_command, "Print an error ball, sorted, one per line")
    parser.add_argument("x", help="Bit string")
    parser.add_argument("--kind", choices=sorted(BALLS), default="ds")
    add_json_flag(parser)

    parser = cli.add_command("intersect", intersect_command, "Intersect the balls of two sequences")
    parser.add_argument("x")
    parser.add_argument("y")
    parser.add_argument("--kind", choices=["ds", "deletion", "substitution"], default="ds")
    parser.add_argument("--partition", action="store_true", help="Split B(x,y) into B1..B18")
    add_json_flag(parser)
