import pytest
from hypothesis import given

from recon_ds.core import bits
from recon_ds.core.balls import (
    deletion_ball,
    deletion_intersection,
    ds_ball,
    ds_ball_all_indices,
    ds_intersection,
    is_deletion_intersection_empty,
    is_qualifying_pair_bits,
    substitution_ball,
    substitution_intersection,
    witness_bits,
    witnesses,
)
from recon_ds.core.exceptions import IdenticalInputsError, LengthMismatchError, ParamOutOfRangeError
from recon_ds.core.seqcore import apply_error_bits
from recon_ds.models.sequence import BinSeq
from strategies import binseqs, pairs


def test_ds_ball_of_0110():
    ball = ds_ball(BinSeq("0110"))
    assert [z.bits for z in ball] == ["000", "001", "010", "011", "100", "110", "111"]
    assert BinSeq("101") not in ball


def test_deletion_and_substitution_balls():
    assert deletion_ball(BinSeq("0110")).bit_strings() == {"110", "010", "011"}
    assert len(substitution_ball(BinSeq("0110"))) == 5


def test_ds_ball_needs_two_symbols():
    with pytest.raises(ParamOutOfRangeError):
        ds_ball(BinSeq("1"))


@given(binseqs(min_size=2, max_size=9))
def test_run_representatives_give_the_full_ball(x):
    assert ds_ball(x).bit_strings() == ds_ball_all_indices(x).bit_strings()


@given(binseqs(min_size=2, max_size=9))
def test_ds_ball_contains_deletion_ball(x):
    assert deletion_ball(x).bit_strings() <= ds_ball(x).bit_strings()


@given(pairs())
def test_substitution_intersection_has_zero_or_two_points(pair):
    a, b = pair
    result = substitution_intersection(BinSeq(a), BinSeq(b))
    assert result.size in (0, 2)
    assert result.size == (2 if bits.hamming(a, b) <= 2 else 0)


@given(pairs())
def test_deletion_criterion(pair):
    x, y = BinSeq(pair[0]), BinSeq(pair[1])
    empty = len(deletion_intersection(x, y)) == 0
    assert is_deletion_intersection_empty(x, y) == empty


@given(pairs(min_size=2, max_size=8))
def test_witnesses_explain_the_intersection(pair):
    a, b = pair
    seen = set()
    for z, dx, ex, dy, ey in witness_bits(a, b):
        assert apply_error_bits(a, dx, ex) == z
        assert apply_error_bits(b, dy, ey) == z
        assert ex != dx and ey != dy
        seen.add(z)
    assert seen == set(ds_intersection(BinSeq(a), BinSeq(b)).bit_strings())


def test_witnesses_wrap_sequences():
    found = list(witnesses(BinSeq("0000"), BinSeq("0001")))
    assert found
    assert all(isinstance(w[0], BinSeq) for w in found)


def test_pair_errors():
    with pytest.raises(IdenticalInputsError):
        ds_intersection(BinSeq("0110"), BinSeq("0110"))
    with pytest.raises(LengthMismatchError):
        ds_intersection(BinSeq("0110"), BinSeq("011"))


def test_qualifying_pair():
    assert is_qualifying_pair_bits("0000", "1111")
    # distance two is too close
    assert not is_qualifying_pair_bits("0000", "0011")
    # both reach 1010 by one deletion
    assert not is_qualifying_pair_bits("01010", "10101")
