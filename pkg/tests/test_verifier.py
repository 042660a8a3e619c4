import pytest

from recon_ds.core.exceptions import ParamOutOfRangeError, TooLargeError
from recon_ds.models.code import CodeSpec
from recon_ds.models.report import VerifyReport
from recon_ds.services.sweeps import ShardResult, int_ranges, merge
from recon_ds.services.verifier import (
    ADVISORY_CHECKS,
    ALPHABET_CHECKS,
    C1_CHECKS,
    GLOBAL_BOUND,
    SEQUENCE_CHECKS,
    VACUOUS_NOTE,
    alternating_ok,
    c1_checks,
    c9_window_ok,
    observation_checks,
    replay,
    run_deletion_ok,
    run_parity_ok,
    run_suite,
    verify_bound,
    verify_c9_long_windows,
    verify_counts,
    verify_delta,
    verify_global_bound,
    verify_list_decoding,
    verify_observations,
    verify_p_bounded,
    verify_structure,
)

STRUCTURE_CHECKS = ALPHABET_CHECKS + SEQUENCE_CHECKS + C1_CHECKS


def test_int_ranges():
    assert int_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert int_ranges(0, 4) == []


def test_observe_keeps_extremal_witnesses():
    part = ShardResult()
    part.observe(3, {"x": "a"}, 2)
    part.observe(5, {"x": "b"}, 2)
    part.observe(5, {"x": "c"}, 2)
    part.observe(5, {"x": "d"}, 2)
    assert part.max_observed == 5
    assert [w["x"] for w in part.witnesses] == ["b", "c"]


def test_merge_sorts_and_truncates():
    left, right = ShardResult(scanned=2), ShardResult(scanned=3)
    left.observe(4, {"x": "z"}, 5)
    right.observe(4, {"x": "a"}, 5)
    right.observe(2, {"x": "b"}, 5)
    merged = merge([left, right], 5)
    assert merged.scanned == 5
    assert merged.max_observed == 4
    assert [w["x"] for w in merged.witnesses] == ["a", "z"]


def test_bound_c14_small_lengths():
    report = verify_bound(CodeSpec.build("c14", 6), 14, (6, 7))
    assert report.check_id == "bound-c14"
    assert report.bound == 13
    assert report.passed
    assert report.pairs_scanned > 0
    assert report.regime == "nominal"


def test_bound_with_singleton_classes():
    report = verify_bound(CodeSpec.build("c14", 2), 14, (2, 2))
    assert report.pairs_scanned == 0
    assert report.passed


def test_bound_range_cap():
    with pytest.raises(TooLargeError):
        verify_bound(CodeSpec.build("c14", 6), 14, (6, 15))
    with pytest.raises(ParamOutOfRangeError):
        verify_bound(CodeSpec.build("c14", 6), 14, (7, 6))


def test_structure_battery():
    reports = {r.check_id: r for r in verify_structure((5, 6))}
    assert set(reports) == set(STRUCTURE_CHECKS)
    for check in STRUCTURE_CHECKS:
        if check in ADVISORY_CHECKS:
            continue
        assert reports[check].passed, (check, reports[check].witnesses)
        assert not reports[check].advisory
    assert reports["deletion-criterion"].pairs_scanned == 32 * 31 // 2 + 64 * 63 // 2
    for check in ("tuple-rows", "e-containment", "e-equality", "c1-set-size", "i-family-size", "remark-structure"):
        assert reports[check].pairs_scanned > 0, check


def test_i_family_nonempty_is_advisory():
    reports = {r.check_id: r for r in verify_structure((5, 5))}
    sized, nonempty = reports["i-family-size"], reports["i-family-nonempty"]
    assert sized.passed and not sized.advisory
    assert not nonempty.passed
    assert nonempty.advisory
    assert not nonempty.failed
    assert nonempty.note == ADVISORY_CHECKS["i-family-nonempty"]
    assert nonempty.witnesses
    assert not any(r.failed for r in reports.values())


def test_b5_without_b17():
    outcomes = {}
    for check, ok, detail in c1_checks("00110", "01001"):
        outcomes.setdefault(check, []).append((ok, detail))
    assert all(ok for ok, _ in outcomes["i-family-size"])
    assert not all(ok for ok, _ in outcomes["i-family-nonempty"])
    lead5 = [d for _, d in outcomes["i-family-nonempty"] if d["lead"] == 5]
    assert 17 in lead5[0]["empty"]
    assert all(ok for ok, _ in outcomes["c1-bound"])


def test_c9_window_check():
    ok, detail = c9_window_ok("00110", "01001", 2)
    assert ok
    assert detail["span"] == 4
    assert 5 in detail["subsets"]
    assert detail["delta_psi"] == 8 - 16
    assert c9_window_ok("00110", "01001", 4) is None


def test_p_bounded_suite():
    reports = verify_p_bounded((8, 8))
    assert [r.params["P"] for r in reports] == [4, 6]
    for r in reports:
        assert r.passed
        assert r.regime == "override"
        if r.pairs_scanned == 0:
            assert r.note == VACUOUS_NOTE


def test_c9_long_windows_suite():
    report = verify_c9_long_windows((8, 8))
    assert report.check_id == "c9-long-windows"
    assert report.passed
    if report.pairs_scanned == 0:
        assert report.note == VACUOUS_NOTE


def test_list_decoding_suite():
    reports = verify_list_decoding((6, 7))
    assert [r.check_id for r in reports] == ["cl-list-size", "cl-interval"]
    assert all(r.passed for r in reports)
    assert reports[0].pairs_scanned > 0


def test_vacuous_report_is_flagged():
    report = verify_bound(CodeSpec.build("c14", 2), 14, (2, 2))
    assert report.note == VACUOUS_NOTE


def test_sequence_level_checks():
    assert run_deletion_ok("0011101")[0]
    assert run_parity_ok(1, "0110", 1)[0]
    assert alternating_ok("0101", "1010")[0]
    assert not alternating_ok("0110", "0011")[0]


def test_delta_suite():
    report = verify_delta((4, 5), samples=200, seed=1)
    assert report.check_id == "delta"
    assert report.passed
    assert report.params["random_scanned"] == 200
    assert report.params["exhaustive_scanned"] > 0


def test_counts():
    reports = {r.check_id: r for r in verify_counts((8, 10))}
    assert set(reports) == {"r-size", "redundancy-c14", "redundancy-cl", "redundancy-vt"}
    assert all(r.passed for r in reports.values())


def test_global_bound():
    report = verify_global_bound((5, 6))
    assert report.bound == GLOBAL_BOUND == 17
    assert report.pairs_scanned > 0


def test_observations():
    assert all(ok for _, ok, _ in observation_checks("0110"))
    reports = verify_observations((3, 5))
    assert [r.check_id for r in reports] == ["observation-deletion", "observation-substitution"]
    assert all(r.passed for r in reports)


def test_replay_bound_witness():
    witness = {"x": "00000", "y": "00001"}
    assert replay(VerifyReport("global-bound", (5, 5), bound=0), witness)
    assert not replay(VerifyReport("global-bound", (5, 5), bound=100), witness)


def test_unknown_suite():
    with pytest.raises(ParamOutOfRangeError):
        run_suite("nope")


def test_job_count_does_not_change_reports():
    one = verify_bound(CodeSpec.build("c14", 7), 14, (7, 7), jobs=1)
    two = verify_bound(CodeSpec.build("c14", 7), 14, (7, 7), jobs=2)
    assert one.to_dict(include_time=False) == two.to_dict(include_time=False)
