import math
from fractions import Fraction
from itertools import combinations

import pytest

from recon_ds.core import bits
from recon_ds.core.codefamilies import (
    best_residues,
    count_r_constrained,
    enumerate_code,
    is_p_bounded_pair_safe,
    member,
    paired_block_syndromes,
    residue_classes,
    residue_moduli,
    signature,
    validate,
)
from recon_ds.core.exceptions import (
    IdenticalInputsError,
    LengthMismatchError,
    ParamOutOfRangeError,
    TooLargeError,
)
from recon_ds.models.code import CodeFamily, CodeSpec, ceil_log2
from recon_ds.models.sequence import BinSeq


def test_c1_smallest_class():
    spec = CodeSpec.build("c1", 4, {"s0": 0, "s1": 0})
    assert [x.bits for x in enumerate_code(spec)] == ["0000"]


def test_aliases_share_a_base():
    assert CodeFamily.parse("C14").base == CodeFamily.C1
    assert CodeFamily.C5.base == CodeFamily.CL
    assert CodeSpec.build("c14", 6).residues == CodeSpec.build("c1", 6).residues


@pytest.mark.parametrize("family", ["vt", "c1", "cl"])
def test_residue_classes_partition_the_space(family):
    n = 7
    classes = residue_classes(CodeSpec.build(family, n))
    assert sum(len(words) for words in classes.values()) == 2 ** n
    assert list(classes) == sorted(classes)


def test_signature_and_member():
    spec = CodeSpec.build("c1", 4)
    assert signature(BinSeq("0110"), spec) == (2, 5)
    assert member(BinSeq("0000"), spec)
    assert not member(BinSeq("0110"), spec)
    with pytest.raises(LengthMismatchError):
        member(BinSeq("011"), spec)


def test_residue_moduli():
    spec = CodeSpec.build("cl", 5)
    assert residue_moduli(spec) == {"s0": 4, "s1": 10, "s2": 50}


def test_validate_rejects_out_of_range_residue():
    with pytest.raises(ParamOutOfRangeError) as info:
        validate(CodeSpec.build("c1", 6, {"s0": 4}))
    assert info.value.high == 3


def test_validate_rejects_bad_structural_values():
    with pytest.raises(ParamOutOfRangeError):
        validate(CodeSpec.build("locbal", 8, structural={"l": 4, "eps": Fraction(3, 4)}))
    with pytest.raises(ParamOutOfRangeError):
        validate(CodeSpec.build("r", 8, structural={"t_prime": 3, "t": 2}))


def test_enumeration_cap():
    with pytest.raises(TooLargeError):
        enumerate_code(CodeSpec.build("vt", 30))


@pytest.mark.parametrize("family,factor", [("c14", lambda n: 8 * n), ("cl", lambda n: 16 * n ** 3),
                                           ("vt", lambda n: 2 * n)])
def test_best_residues_meet_pigeonhole(family, factor):
    for n in range(4, 10):
        row = best_residues(family, n)
        assert row.code_size * factor(n) >= 2 ** n
        assert row.redundancy == pytest.approx(n - math.log2(row.code_size))


def test_vt_classes_correct_one_deletion():
    for words in residue_classes(CodeSpec.build("vt", 6)).values():
        for a, b in combinations(words, 2):
            assert not bits.deletion_ball(a) & bits.deletion_ball(b)


def test_c1_classes_have_distance_four():
    for words in residue_classes(CodeSpec.build("c1", 7)).values():
        for a, b in combinations(words, 2):
            assert bits.hamming(a, b) >= 4


def test_r_constrained_count():
    t = ceil_log2(10) + 3
    assert t == 7
    assert count_r_constrained(10, 2, t) >= 2 ** 9


@pytest.mark.slow
def test_r_constrained_count_at_sixteen():
    assert count_r_constrained(16, 2, 7) >= 2 ** 15


def test_paired_block_syndromes():
    assert paired_block_syndromes("0110", 2, 1) == (5, 1)
    assert paired_block_syndromes("", 2, 1) == (0, 0)


def test_c11_structural_defaults():
    nominal = CodeSpec.build("c11", 8)
    assert nominal.param("t") == 6
    assert nominal.param("P") == 40
    assert nominal.regime == "nominal"
    desk = CodeSpec.build("c11", 8, structural={"P": 4})
    assert desk.param("P") == 4
    assert desk.regime == "override"


def test_c9_default_parameters():
    spec = CodeSpec.build("c9", 8)
    assert spec.param("eps") == Fraction(1, 18)
    assert spec.param("P") == 4 * spec.param("l")


def test_p_bounded_pair_safety():
    assert is_p_bounded_pair_safe(BinSeq("000000"), BinSeq("100001"), 4)
    assert not is_p_bounded_pair_safe(BinSeq("000000"), BinSeq("000001"), 4)
    with pytest.raises(IdenticalInputsError):
        is_p_bounded_pair_safe(BinSeq("0101"), BinSeq("0101"), 4)


@pytest.mark.parametrize("P", [4, 6])
def test_confusable_short_window_pairs_are_split_by_cdsp(P):
    spec = CodeSpec.build("cdsp", 8, structural={"P": P})
    confusable = 0
    for a, b in combinations(list(bits.all_sequences(8)), 2):
        x, y = BinSeq(a), BinSeq(b)
        j = bits.diff_indices(a, b)
        if j[-1] - j[0] + 1 > P or is_p_bounded_pair_safe(x, y, P):
            continue
        confusable += 1
        assert signature(x, spec) != signature(y, spec), (a, b)
    assert confusable > 0
