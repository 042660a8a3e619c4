"""sample, simulate and decode: the reconstruction channel end to end."""

import argparse
import logging
from typing import TextIO

from ..core.config import get_config
from ..core.exceptions import UsageError
from ..models.channel import ReadSet
from ..services.reconstruct import decode, list_decode_single, sample_reads, simulate
from ..storage.serializers import read_sequences, write_sequences
from ._options import add_family_flags, add_json_flag, build_spec, command_config, emit, n_values, parse_seq

logger = logging.getLogger(__name__)


def sample_command(args: argparse.Namespace, out: TextIO) -> int:
    x = parse_seq("x", args.x)
    seed = get_config().channel.seed if args.seed is None else args.seed
    reads = sample_reads(x, args.reads, seed)
    if args.out:
        write_sequences(args.out, reads.sorted())
        logger.info(f"✅ Wrote {reads.claimed_N} reads to {args.out}")
    emit(out, args, "reads", reads.to_dict(), None if args.out else "".join(r.bits + "\n" for r in reads.sorted()))
    return 0


def simulate_command(args: argparse.Namespace, out: TextIO) -> int:
    command_config(args, "simulate")
    (n,) = n_values(args)
    spec = build_spec(args, n)
    summary = simulate(spec, args.reads, args.trials, args.seed, args.jobs)
    lines = [f"{key}: {value}" for key, value in summary.to_dict().items()]
    emit(out, args, "simulation", dict(summary.to_dict(), spec=spec.to_dict()), "\n".join(lines))
    return 0


def decode_command(args: argparse.Namespace, out: TextIO) -> int:
    command_config(args, "decode")
    (n,) = n_values(args)
    spec = build_spec(args, n)
    items = read_sequences(args.reads_file)
    if not items:
        raise UsageError("--reads-file", "no reads found")

    if args.list:
        if len(items) != 1:
            raise UsageError("--list", f"needs exactly one read, got {len(items)}")
        found = list_decode_single(items[0], spec)
        emit(out, args, "list-decoding", {"read": items[0].bits, "candidates": [w.bits for w in found]},
             "".join(w.bits + "\n" for w in found))
        return 0

    reads = ReadSet.of(items, n)
    word = decode(reads, spec, args.reads, method=args.method)
    emit(out, args, "decoded", {"codeword": word.bits, "N": reads.claimed_N}, word.bits)
    return 0


def setup(cli) -> None:
    parser = cli.add_command("sample", sample_command, "Draw N distinct reads of a sequence")
    parser.add_argument("x")
    parser.add_argument("--reads", type=int, required=True, help="Number of distinct reads N")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", help="Write reads to a line-format file")
    add_json_flag(parser)

    parser = cli.add_command("simulate", simulate_command, "Sample-and-decode trials over a code")
    add_family_flags(parser)
    parser.add_argument("--reads", type=int, help="Reads per trial; defaults to the family's N")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    add_json_flag(parser)

    parser = cli.add_command("decode", decode_command, "Recover a codeword from a file of reads")
    add_family_flags(parser)
    parser.add_argument("--reads-file", required=True, help="Line-format file of reads")
    parser.add_argument("--reads", type=int, help="Expected number of reads")
    parser.add_argument("--method", choices=["auto", "enumerate", "invert"], default="auto")
    parser.add_argument("--list", action="store_true", help="List every CL codeword matching one read")
    add_json_flag(parser)
