import pytest
from hypothesis import given

from recon_ds.core.exceptions import (
    DegenerateOpError,
    DegenerateOrderError,
    NotConfusableError,
    ParamOutOfRangeError,
)
from recon_ds.core.seqcore import differential_bits
from recon_ds.core.syndelta import (
    classify_deletion_effect,
    classify_substitution_effect,
    delta_psi_decomposition,
    deletion_table_cell,
    eta_terms,
    n_xy,
    substitution_table_cell,
    table_consistent,
)
from recon_ds.models.sequence import BinSeq
from strategies import quadruples


def test_deletion_effects():
    merge = classify_deletion_effect(BinSeq("010"), 2)
    assert merge.kind == "11→0"
    assert merge.delta_weight == 2
    keep = classify_deletion_effect(BinSeq("0110"), 2)
    assert keep.kind == "10→1"
    assert keep.delta_weight == 0


def test_substitution_effect():
    effect = classify_substitution_effect(BinSeq("000"), 2)
    assert effect.kind == "00→11"
    assert effect.delta_weight == -2
    assert effect.op == "substitution"


def test_table_cells():
    assert deletion_table_cell("11→0", "y", "x-earlier", 4) == -9
    assert deletion_table_cell("01→1", "x", "x-earlier", 1) == 1
    assert deletion_table_cell("00→0", "x", "x-later", 3) == 0
    assert substitution_table_cell("00→11", "x", 2) == -5
    assert substitution_table_cell("01→10", "y", 2) == -1
    with pytest.raises(ParamOutOfRangeError):
        deletion_table_cell("11→00", "x", "x-later", 1)


def test_decomposition_of_a_known_quadruple():
    bd = delta_psi_decomposition(BinSeq("0110"), BinSeq("1101"), 1, None, 4, None)
    assert bd.direct == -7
    assert bd.total == -7
    assert (bd.boundary_x, bd.boundary_y, bd.middle_sum) == (1, -9, 1)
    assert bd.order == "x-earlier"
    assert table_consistent(bd, 1, None, 4, None)


@given(quadruples())
def test_decomposition_matches_direct_value(quad):
    x, dx, ex, y, dy, ey = quad
    bd = delta_psi_decomposition(BinSeq(x), BinSeq(y), dx, ex, dy, ey)
    assert bd.consistent
    assert table_consistent(bd, dx, ex, dy, ey)


@given(quadruples())
def test_psi_weight_change(quad):
    x, dx, ex, y, dy, ey = quad
    direct = differential_bits(x).count("1") - differential_bits(y).count("1")
    assert n_xy(BinSeq(x), BinSeq(y), dx, ex, dy, ey) == direct


def test_eta_terms_without_substitutions():
    assert eta_terms(BinSeq("0110"), None, BinSeq("1101"), None) == (0, 0)


def test_decomposition_errors():
    with pytest.raises(NotConfusableError):
        delta_psi_decomposition(BinSeq("0110"), BinSeq("0000"), 1, None, 4, None)
    with pytest.raises(DegenerateOrderError):
        delta_psi_decomposition(BinSeq("0110"), BinSeq("0111"), 4, None, 4, None)
    with pytest.raises(DegenerateOpError):
        delta_psi_decomposition(BinSeq("0110"), BinSeq("1101"), 1, 1, 4, None)
