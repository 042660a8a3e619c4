import io
import json

import pytest

from recon_ds.cli import ReconCLI, run
from recon_ds.core import bits


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_commands_are_loaded():
    cli = ReconCLI(io.StringIO(), io.StringIO())
    assert set(cli.loaded_commands) == {"balls", "channel", "codes", "delta", "verify"}


def test_ball():
    code, out, _ = invoke("ball", "0110")
    assert code == 0
    assert out == "000\n001\n010\n011\n100\n110\n111\n"


def test_ball_json_is_versioned():
    code, out, _ = invoke("ball", "0110", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["schema"] == "recon-ds/v1"
    assert document["kind"] == "ball"
    assert document["data"]["size"] == 7


def test_intersect_partition():
    code, out, _ = invoke("intersect", "0000", "1111", "--partition")
    assert code == 0
    assert out.startswith("|B(x,y)| = ")


def test_verify_bounds_passes():
    code, out, _ = invoke("verify", "--suite", "bounds", "--family", "c14", "--n", "6")
    assert code == 0
    assert out.startswith("PASS bound-c14")


def test_verify_json_is_stable():
    argv = ("verify", "--suite", "bounds", "--family", "c14", "--n", "6", "--json")
    first = invoke(*argv)
    second = invoke(*argv)
    assert first == second
    document = json.loads(first[1])
    assert document["kind"] == "verify"
    assert "wall_time" not in document["data"][0]


def test_verify_structural_exits_zero_with_advisory_warning():
    code, out, _ = invoke("verify", "--suite", "structural", "--n-range", "5..5")
    assert code == 0
    assert "WARN i-family-nonempty" in out
    assert "FAIL" not in out


def test_verify_json_file(tmp_path):
    target = tmp_path / "reports" / "bounds.json"
    code, out, _ = invoke("verify", "--suite", "bounds", "--family", "c14", "--n", "6", "--json", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["data"][0]["check_id"] == "bound-c14"


def test_stats_header():
    code, out, _ = invoke("stats", "--family", "c14", "--n", "6")
    assert code == 0
    assert out.splitlines()[0].split() == ["family", "n", "size", "redundancy", "residues"]


def test_enumerate():
    code, out, _ = invoke("enumerate", "--family", "c1", "--n", "4")
    assert code == 0
    assert out == "0000\n"


def test_residue_of_another_family_is_a_usage_error():
    code, _, err = invoke("enumerate", "--family", "c14", "--n", "6", "--s2", "1")
    assert code == 2
    assert "--s2" in err


def test_residue_out_of_range():
    code, _, err = invoke("enumerate", "--family", "c14", "--n", "6", "--s0", "7")
    assert code == 2
    assert "[0, 3]" in err


def test_bad_n_range():
    code, _, err = invoke("stats", "--family", "c14", "--n-range", "9..3")
    assert code == 2
    assert "--n-range" in err


def test_no_command():
    code, _, err = invoke()
    assert code == 2
    assert "usage" in err


def test_unknown_flag_exits_two():
    assert invoke("ball", "0110", "--bogus")[0] == 2


def test_enumeration_cap_is_a_usage_error():
    code, _, err = invoke("enumerate", "--family", "vt", "--n", "30")
    assert code == 2
    assert "RECON_DS_MAX_N" in err


def test_delta():
    code, out, _ = invoke("delta", "0110", "1101", "--dx", "1", "--dy", "4")
    assert code == 0
    assert "total: -7" in out.splitlines()


def test_delta_not_confusable():
    code, _, _ = invoke("delta", "0110", "0000", "--dx", "1", "--dy", "4")
    assert code == 1


def test_sample_then_decode(tmp_path):
    x = "11001001"
    assert len(bits.ds_ball(x)) >= 14
    reads = tmp_path / "reads.txt"
    code, out, _ = invoke("sample", x, "--reads", "14", "--seed", "2", "--out", str(reads))
    assert code == 0
    assert len(reads.read_text().splitlines()) == 14

    code, out, _ = invoke("decode", "--family", "c14", "--n", "8", "--reads-file", str(reads),
                          "--reads", "14", "--method", "invert")
    assert code == 0
    assert out.strip() == x


def test_decode_missing_file(tmp_path):
    code, _, err = invoke("decode", "--family", "c14", "--n", "8", "--reads-file", str(tmp_path / "none.txt"))
    assert code == 1
    assert "Cannot read" in err


def test_simulate():
    code, out, _ = invoke("simulate", "--family", "c14", "--n", "7", "--trials", "5", "--seed", "1")
    assert code == 0
    assert "trials: 5" in out.splitlines()


@pytest.mark.parametrize("argv", [("--jobs", "0", "ball", "0110")])
def test_bad_jobs(argv):
    assert invoke(*argv)[0] == 2
