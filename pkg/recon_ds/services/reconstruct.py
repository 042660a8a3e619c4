"""
Reconstruction Service
======================

Simulates the single-deletion single-substitution channel, draws N
distinct reads of a codeword, and recovers the codeword from its reads
either by filtering an enumerated code or by inverting one read.

The channel takes a pure deletion with probability weight/n and
otherwise a uniform (d, e) pair with e != d, so every element of B(x)
has positive probability.
"""

import logging
import random
from typing import FrozenSet, List, Optional, Sequence, Tuple, Union

from ..core import bits
from ..core.codefamilies import member_bits, validate
from ..core.config import get_config
from ..core.exceptions import (
    AmbiguousError,
    BallTooSmallError,
    LengthMismatchError,
    NoCandidateError,
    ParamOutOfRangeError,
)
from ..core.seqcore import apply_error_bits
from ..models.channel import ReadSet, SimulationSummary
from ..models.code import RECONSTRUCTION_N, CodeFamily, CodeSpec
from ..models.sequence import BinSeq
from .codebook import Codebook
from .sweeps import run_sharded

logger = logging.getLogger(__name__)

Seed = Union[int, None, random.Random]

_codebook = Codebook()


def _rng(seed: Seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


# -------------------------------------------------------------------------
# Channel
# -------------------------------------------------------------------------

def emit_bits(s: str, rng: random.Random, weight: float) -> str:
    n = len(s)
    d = rng.randint(1, n)
    if rng.random() < min(1.0, weight / n):
        return bits.delete(s, d)
    e = rng.randint(1, n - 1)
    if e >= d:
        e += 1
    return apply_error_bits(s, d, e)


def channel_emit(x: BinSeq, seed: Seed = None, pure_deletion_weight: Optional[float] = None) -> BinSeq:
    """One channel output x(d, e); deterministic for a fixed seed."""
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    weight = get_config().channel.pure_deletion_weight if pure_deletion_weight is None else pure_deletion_weight
    if weight < 0:
        raise ParamOutOfRangeError("pure_deletion_weight", weight, 0, None)
    return BinSeq.trusted(emit_bits(x.bits, _rng(seed), weight))


def sample_reads(x: BinSeq, N: int, seed: Seed = None) -> ReadSet:
    """N distinct elements of B(x), uniform without replacement."""
    if len(x) < 2:
        raise ParamOutOfRangeError("n", len(x), 2, None)
    if N < 1:
        raise ParamOutOfRangeError("N", N, 1, None)
    ball = sorted(bits.ds_ball(x.bits))
    if N > len(ball):
        raise BallTooSmallError(len(ball), N)
    picks = _rng(seed).sample(ball, N)
    return ReadSet.of((BinSeq.trusted(r) for r in picks), len(x),
                      seed if isinstance(seed, int) else None)


# -------------------------------------------------------------------------
# Decoding
# -------------------------------------------------------------------------

def inverse_bits(read: str) -> FrozenSet[str]:
    """
    Every w of length |read|+1 with read in B(w): insert a symbol, then
    optionally flip one position.
    """
    out = set()
    for p in range(len(read) + 1):
        for c in "01":
            w = read[:p] + c + read[p:]
            out.add(w)
            for i in range(1, len(w) + 1):
                out.add(bits.flip(w, i))
    return frozenset(out)


def inverse_candidates(read: BinSeq) -> List[BinSeq]:
    """All length-(n) sequences whose ball contains the length-(n-1) read."""
    return [BinSeq.trusted(w) for w in sorted(inverse_bits(read.bits))]


def candidates_by_inversion(reads: Sequence[str], spec: CodeSpec) -> List[str]:
    if not reads:
        raise ParamOutOfRangeError("N", 0, 1, None)
    first, rest = reads[0], reads[1:]
    return sorted(
        w for w in inverse_bits(first)
        if member_bits(w, spec) and all(r in bits.ds_ball(w) for r in rest)
    )


def candidates_by_codebook(reads: Sequence[str], spec: CodeSpec, codebook: Codebook) -> List[str]:
    if not reads:
        raise ParamOutOfRangeError("N", 0, 1, None)
    found = set(codebook.holders(spec, reads[0]))
    for r in reads[1:]:
        found &= codebook.holders(spec, r)
        if not found:
            break
    return sorted(found)


def _check_reads(reads: ReadSet, spec: CodeSpec, N: Optional[int]) -> List[str]:
    if reads.n != spec.n:
        raise LengthMismatchError(reads.n, spec.n)
    if N is not None and reads.claimed_N != N:
        raise ParamOutOfRangeError("reads", reads.claimed_N, N, N)
    return [r.bits for r in reads.sorted()]


def decode(reads: ReadSet, spec: CodeSpec, N: Optional[int] = None,
           codebook: Optional[Codebook] = None, method: str = "auto") -> BinSeq:
    """
    The unique codeword whose ball contains every read.

    method "enumerate" filters the enumerated code, "invert" generates
    candidates from one read; "auto" enumerates up to
    channel.enumerate_max_n and inverts above it.

    Raises NoCandidateError or AmbiguousError.
    """
    validate(spec)
    items = _check_reads(reads, spec, N)
    if method == "auto":
        method = "enumerate" if spec.n <= get_config().channel.enumerate_max_n else "invert"
    if method == "enumerate":
        found = candidates_by_codebook(items, spec, codebook or _codebook)
    elif method == "invert":
        found = candidates_by_inversion(items, spec)
    else:
        raise ParamOutOfRangeError("method", method)

    if not found:
        raise NoCandidateError()
    if len(found) > 1:
        raise AmbiguousError(BinSeq.trusted(w) for w in found)
    return BinSeq.trusted(found[0])


def list_decode_single(read: BinSeq, spec: CodeSpec) -> List[BinSeq]:
    """Every CL codeword whose ball contains the read."""
    if spec.base != CodeFamily.CL:
        raise ParamOutOfRangeError("family", spec.family.value)
    validate(spec)
    if len(read) != spec.n - 1:
        raise LengthMismatchError(len(read), spec.n - 1)
    return [BinSeq.trusted(w) for w in sorted(inverse_bits(read.bits)) if member_bits(w, spec)]


# -------------------------------------------------------------------------
# Simulation
# -------------------------------------------------------------------------

def _simulate_shard(task: Tuple[CodeSpec, int, Tuple[str, ...], Tuple[int, ...]]) -> SimulationSummary:
    spec, N, words, seeds = task
    out = SimulationSummary(family=spec.family.value, n=spec.n, N=N)
    for seed in seeds:
        rng = random.Random(seed)
        x = rng.choice(words)
        ball = sorted(bits.ds_ball(x))
        out.trials += 1
        if len(ball) < N:
            out.skipped += 1
            continue
        found = candidates_by_inversion(rng.sample(ball, N), spec)
        if not found:
            out.no_candidate += 1
        elif len(found) > 1:
            out.ambiguous += 1
        elif found[0] != x:
            out.wrong += 1
        else:
            out.decoded += 1
    return out


def simulate(spec: CodeSpec, N: Optional[int] = None, trials: Optional[int] = None,
             seed: Optional[int] = None, jobs=None, codebook: Optional[Codebook] = None) -> SimulationSummary:
    """
    Draw codewords uniformly, sample N distinct reads of each, decode, and
    count the outcomes. Trials whose ball holds fewer than N sequences are
    counted as skipped.
    """
    validate(spec)
    config = get_config()
    if N is None:
        if spec.base not in RECONSTRUCTION_N:
            raise ParamOutOfRangeError("N", None)
        N = RECONSTRUCTION_N[spec.base]
    trials = config.channel.trials if trials is None else trials
    seed = config.channel.seed if seed is None else seed
    if trials < 0:
        raise ParamOutOfRangeError("trials", trials, 0, None)

    words = (codebook or _codebook).words(spec)
    if not words:
        raise NoCandidateError(f"Code {spec.family.value} n={spec.n} {dict(spec.residues)} is empty")

    master = random.Random(seed)
    seeds = [master.randrange(1 << 32) for _ in range(trials)]
    chunk = max(1, config.sweeps.chunk_size)
    shards = [(spec, N, words, tuple(seeds[i:i + chunk])) for i in range(0, len(seeds), chunk)]

    total = SimulationSummary(family=spec.family.value, n=spec.n, N=N, seed=seed)
    for part in run_sharded(_simulate_shard, shards, jobs):
        total.trials += part.trials
        total.decoded += part.decoded
        total.ambiguous += part.ambiguous
        total.no_candidate += part.no_candidate
        total.wrong += part.wrong
        total.skipped += part.skipped

    logger.info(f"✅ Simulated {total.trials} trials for {spec.family.value} n={spec.n} N={N}: "
                f"{total.decoded} decoded, {total.ambiguous} ambiguous, {total.skipped} skipped")
    return total

