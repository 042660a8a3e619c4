import pytest

from recon_ds.core import bits
from recon_ds.core.codefamilies import enumerate_bits
from recon_ds.core.config import reload_config
from recon_ds.core.exceptions import (
    AmbiguousError,
    BallTooSmallError,
    LengthMismatchError,
    NoCandidateError,
    ParamOutOfRangeError,
)
from recon_ds.models.channel import ReadSet
from recon_ds.models.code import CodeSpec
from recon_ds.models.sequence import BinSeq
from recon_ds.services.codebook import Codebook
from recon_ds.services.reconstruct import (
    channel_emit,
    decode,
    inverse_bits,
    list_decode_single,
    sample_reads,
    simulate,
)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_inverse_is_exact(m):
    for read in bits.all_sequences(m):
        expected = {w for w in bits.all_sequences(m + 1) if read in bits.ds_ball(w)}
        assert inverse_bits(read) == expected


def test_sample_reads():
    x = BinSeq("011010")
    reads = sample_reads(x, 10, seed=3)
    assert reads.claimed_N == 10
    assert {r.bits for r in reads.reads} <= bits.ds_ball(x.bits)
    assert reads == sample_reads(x, 10, seed=3)


def test_sample_reads_ball_too_small():
    with pytest.raises(BallTooSmallError) as info:
        sample_reads(BinSeq("0000"), 5, seed=0)
    assert info.value.size == 4


def test_channel_emit_lands_in_ball():
    x = BinSeq("0110100")
    ball = bits.ds_ball(x.bits)
    for seed in range(50):
        assert channel_emit(x, seed).bits in ball
    assert channel_emit(x, 7) == channel_emit(x, 7)


def test_read_set_lengths():
    with pytest.raises(LengthMismatchError):
        ReadSet.of([BinSeq("010"), BinSeq("01")], 4)


def test_decode_c14_from_fourteen_reads():
    spec = CodeSpec.build("c14", 8)
    codebook = Codebook()
    words = [w for w in enumerate_bits(spec) if len(bits.ds_ball(w)) >= 14]
    assert words
    for i, w in enumerate(words[:8]):
        reads = sample_reads(BinSeq(w), 14, seed=i)
        assert decode(reads, spec, N=14, codebook=codebook, method="enumerate").bits == w
        assert decode(reads, spec, N=14, method="invert").bits == w


def _round_trip_every_codeword(family, n, N, subsets):
    spec = CodeSpec.build(family, n)
    codebook = Codebook()
    decoded = 0
    for w in enumerate_bits(spec):
        if len(bits.ds_ball(w)) < N:
            continue
        for seed in range(subsets):
            reads = sample_reads(BinSeq(w), N, seed=seed)
            assert decode(reads, spec, N=N, codebook=codebook, method="enumerate").bits == w, (w, seed)
            decoded += 1
    return decoded


@pytest.mark.parametrize("n", [
    8,
    9,
    pytest.param(10, marks=pytest.mark.slow),
    pytest.param(11, marks=pytest.mark.slow),
    pytest.param(12, marks=pytest.mark.slow),
])
def test_every_c14_codeword_reconstructs_from_fourteen_reads(n):
    assert _round_trip_every_codeword("c14", n, 14, subsets=4) > 0


@pytest.mark.parametrize("n", [
    8,
    9,
    pytest.param(10, marks=pytest.mark.slow),
    pytest.param(11, marks=pytest.mark.slow),
    pytest.param(12, marks=pytest.mark.slow),
])
def test_every_cl_codeword_reconstructs_from_five_reads(n):
    assert _round_trip_every_codeword("cl", n, 5, subsets=4) > 0


def test_decode_cl_by_inversion():
    spec = CodeSpec.build("cl", 8)
    for i, w in enumerate(enumerate_bits(spec)):
        if len(bits.ds_ball(w)) < 5:
            continue
        reads = sample_reads(BinSeq(w), 5, seed=i)
        assert decode(reads, spec, N=5, method="invert").bits == w


def test_decode_rejects_wrong_read_count():
    spec = CodeSpec.build("c14", 8)
    reads = sample_reads(BinSeq("00000000"), 3, seed=0)
    with pytest.raises(ParamOutOfRangeError):
        decode(reads, spec, N=14)


def test_decode_ambiguous():
    spec = CodeSpec.build("r", 6, structural={"t": 6})
    reads = ReadSet.of([BinSeq("00000")], 6)
    with pytest.raises(AmbiguousError) as info:
        decode(reads, spec)
    assert BinSeq("000000") in info.value.candidates


def test_decode_no_candidate():
    spec = CodeSpec.build("r", 6, structural={"t": 6})
    reads = ReadSet.of([BinSeq("00000"), BinSeq("11111")], 6)
    with pytest.raises(NoCandidateError):
        decode(reads, spec)
    with pytest.raises(NoCandidateError):
        decode(reads, spec, method="invert")


def test_simulate_c14():
    spec = CodeSpec.build("c14", 8)
    summary = simulate(spec, trials=30, seed=5)
    assert summary.N == 14
    assert summary.trials == 30
    assert summary.decoded + summary.skipped == 30
    assert summary.ambiguous == summary.wrong == summary.no_candidate == 0
    assert simulate(spec, trials=30, seed=5).to_dict() == summary.to_dict()


def test_simulate_needs_a_guarantee():
    with pytest.raises(ParamOutOfRangeError):
        simulate(CodeSpec.build("vt", 6), trials=2)


def test_list_decode_single():
    spec = CodeSpec.build("cl", 6)
    x = BinSeq("000000")
    read = channel_emit(x, 1)
    found = list_decode_single(read, spec)
    assert x in found
    with pytest.raises(ParamOutOfRangeError):
        list_decode_single(read, CodeSpec.build("c14", 6))


def test_codebook_drops_least_recently_used_spec():
    codebook = Codebook(capacity=2)
    specs = [CodeSpec.build("c14", n) for n in (5, 6, 7)]
    codebook.words(specs[0])
    codebook.holders(specs[1], "00000")
    codebook.words(specs[0])
    codebook.words(specs[2])
    assert len(codebook) == 2
    assert specs[0] in codebook and specs[2] in codebook
    assert specs[1] not in codebook


def test_codebook_capacity_comes_from_config(write_ini):
    reload_config(write_ini("[channel]\ncodebook_specs = 1\n"))
    codebook = Codebook()
    codebook.words(CodeSpec.build("c14", 5))
    codebook.words(CodeSpec.build("c14", 6))
    assert len(codebook) == 1
