from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from recon_ds.core import bits
from recon_ds.core.exceptions import (
    DegenerateOpError,
    IdenticalInputsError,
    IndexOutOfRangeError,
    LengthMismatchError,
    ParamOutOfRangeError,
)
from recon_ds.core.seqcore import (
    apply_error,
    blocks,
    complement,
    diff_profile,
    differential,
    is_alternating,
    is_strong_locally_balanced,
    max_periodic_run,
    period,
    r_lower_bound,
    reverse,
    run_of,
    runs,
    segment,
    shifted_distances,
    vt_syndrome,
)
from recon_ds.models.sequence import BinSeq, ErrorOp
from strategies import binseqs, bit_strings


def test_binseq_rejects_other_symbols():
    with pytest.raises(ParamOutOfRangeError):
        BinSeq("0120")


def test_binseq_is_immutable_and_ordered():
    x = BinSeq("0110")
    with pytest.raises(AttributeError):
        x.bits = "1111"
    assert BinSeq("0011") < x
    assert BinSeq.from_int(6, 4) == x
    assert x.weight == 2
    assert x.bit(2) == 1


@pytest.mark.parametrize("k,expected", [(0, 2), (1, 5), (2, 9)])
def test_vt_syndrome(k, expected):
    assert vt_syndrome(BinSeq("0110"), k) == expected


def test_vt_syndrome_negative_order():
    with pytest.raises(ParamOutOfRangeError):
        vt_syndrome("0110", -1)


def test_differential():
    assert differential(BinSeq("0110")) == BinSeq("01010")
    assert differential(BinSeq("")) == BinSeq("0")


@given(binseqs(max_size=16))
def test_differential_has_even_weight(x):
    psi = differential(x)
    assert len(psi) == len(x) + 1
    assert psi.weight % 2 == 0


def test_apply_error_substitutes_then_deletes():
    assert apply_error(BinSeq("0110"), ErrorOp(1, 4)) == BinSeq("111")
    assert apply_error(BinSeq("0110"), ErrorOp(2, None)) == BinSeq("010")
    assert apply_error(BinSeq("0110"), ErrorOp(None, 1)) == BinSeq("1110")


def test_apply_error_rejects_same_index():
    with pytest.raises(DegenerateOpError):
        apply_error(BinSeq("0110"), ErrorOp(2, 2))


def test_apply_error_index_range():
    with pytest.raises(IndexOutOfRangeError):
        apply_error(BinSeq("0110"), ErrorOp(5, None))


def test_runs():
    count, intervals = runs(BinSeq("0011101"))
    assert count == 4
    assert intervals == [(1, 2), (3, 5), (6, 6), (7, 7)]
    assert run_of(BinSeq("0011101"), 4) == 2


@pytest.mark.parametrize("text,expected", [("0101", 2), ("0110", 3), ("0000", 1), ("01", 2)])
def test_period(text, expected):
    assert period(BinSeq(text)) == expected


def test_is_alternating():
    assert is_alternating(BinSeq("010101"))
    assert is_alternating(BinSeq("1111"))
    assert not is_alternating(BinSeq("0110"))


def test_complement_and_reverse():
    assert complement(BinSeq("0011")) == BinSeq("1100")
    assert reverse(BinSeq("0011")) == BinSeq("1100")
    assert reverse(BinSeq("0110")) == BinSeq("0110")


def test_segment():
    x = BinSeq("011010")
    assert segment(x, 2, 4) == BinSeq("110")
    assert segment(x, 4, 3) == BinSeq("")
    with pytest.raises(IndexOutOfRangeError):
        segment(x, 0, 3)


def test_diff_profile():
    profile = diff_profile(BinSeq("0000"), BinSeq("0101"))
    assert profile.j == (2, 4)
    assert profile.dh == 2
    assert profile.prefix_len == 1
    assert profile.suffix_len == 0
    assert profile.window_len == 3


def test_diff_profile_errors():
    with pytest.raises(IdenticalInputsError):
        diff_profile(BinSeq("0101"), BinSeq("0101"))
    with pytest.raises(LengthMismatchError):
        diff_profile(BinSeq("0101"), BinSeq("010"))


def test_shifted_distances():
    assert shifted_distances(BinSeq("0000"), BinSeq("0101"), 2, 4) == (1, 1)
    assert shifted_distances(BinSeq("0000"), BinSeq("0101"), 3, 3) == (0, 0)


def test_blocks():
    assert blocks("0110101", 3) == ["011", "010", "1"]
    assert blocks("011010", 3) == ["011", "010", ""]
    with pytest.raises(ParamOutOfRangeError):
        blocks("0110", 0)


def test_max_periodic_run():
    assert max_periodic_run(BinSeq("010101"), 2) == 6
    assert max_periodic_run(BinSeq("011011"), 2) == 3
    assert max_periodic_run(BinSeq("011011"), 3) == 6


def _longest_periodic_substring(s, tmax):
    best = 0
    for i in range(len(s)):
        for j in range(i + 1, len(s) + 1):
            piece = s[i:j]
            if len(piece) <= tmax or any(
                all(piece[k] == piece[k + p] for k in range(len(piece) - p)) for p in range(1, tmax + 1)
            ):
                best = max(best, len(piece))
    return best


def test_max_periodic_run_on_mixed_word():
    # "1010" at positions 3..6
    assert max_periodic_run(BinSeq("0110100"), 2) == 4


@pytest.mark.parametrize("tmax", [1, 2, 3])
def test_max_periodic_run_matches_quadratic_scan(tmax):
    for m in range(1, 11):
        for s in bits.all_sequences(m):
            assert max_periodic_run(BinSeq(s), tmax) == _longest_periodic_substring(s, tmax), s


@given(bit_strings(min_size=1, max_size=16), st.integers(min_value=1, max_value=4))
def test_max_periodic_run_matches_quadratic_scan_long(s, tmax):
    assert max_periodic_run(BinSeq(s), tmax) == _longest_periodic_substring(s, tmax)


def test_first_order_syndrome_is_position_weighted_sum():
    for m in range(1, 11):
        for s in bits.all_sequences(m):
            assert vt_syndrome(s, 1) == sum(i for i, c in enumerate(s, start=1) if c == "1")


@given(bit_strings(min_size=11, max_size=16))
def test_first_order_syndrome_long_words(s):
    total = 0
    for i in range(1, len(s) + 1):
        if s[i - 1] == "1":
            total += i
    assert vt_syndrome(BinSeq(s), 1) == total


def test_strong_local_balance():
    assert is_strong_locally_balanced("0101", 2, Fraction(1, 4))
    assert not is_strong_locally_balanced("0011", 2, Fraction(1, 4))
    with pytest.raises(ParamOutOfRangeError):
        is_strong_locally_balanced("0101", 2, Fraction(3, 4))


def test_r_lower_bound():
    assert r_lower_bound(16, 2, 7) == 32768


@given(bit_strings(min_size=1, max_size=12))
def test_deletion_ball_size_is_run_count(s):
    assert len(bits.deletion_ball(s)) == runs(BinSeq(s))[0]
