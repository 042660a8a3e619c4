"""delta: decompose VT^1(psi(x)) - VT^1(psi(y)) for one confusable quadruple."""

import argparse
from typing import TextIO

from ..core.syndelta import delta_psi_decomposition, n_xy, table_consistent
from ._options import add_json_flag, emit, parse_seq


def delta_command(args: argparse.Namespace, out: TextIO) -> int:
    x, y = parse_seq("x", args.x), parse_seq("y", args.y)
    bd = delta_psi_decomposition(x, y, args.dx, args.ex, args.dy, args.ey)
    weight = n_xy(x, y, args.dx, args.ex, args.dy, args.ey)
    tables = table_consistent(bd, args.dx, args.ex, args.dy, args.ey)

    payload = dict(bd.to_dict(), n_xy=weight, tables_consistent=tables)
    lines = [f"{key}: {value}" for key, value in payload.items()]
    emit(out, args, "delta", payload, "\n".join(lines))
    return 0 if bd.consistent and tables else 1


def setup(cli) -> None:
    parser = cli.add_command("delta", delta_command, "Δψ decomposition of x(d_x,e_x) = y(d_y,e_y)")
    parser.add_argument("x")
    parser.add_argument("y")
    parser.add_argument("--dx", type=int, required=True)
    parser.add_argument("--ex", type=int, help="Substitution index in x; omit for none")
    parser.add_argument("--dy", type=int, required=True)
    parser.add_argument("--ey", type=int, help="Substitution index in y; omit for none")
    add_json_flag(parser)
