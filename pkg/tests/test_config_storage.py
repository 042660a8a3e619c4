from fractions import Fraction

import pytest

from recon_ds.core.config import ReconConfig, get_config, reload_config
from recon_ds.core.exceptions import (
    AmbiguousError,
    NoCandidateError,
    ParamOutOfRangeError,
    ReconError,
    ReconErrorHandler,
    TooLargeError,
    UsageError,
)
from recon_ds.models.report import VerifyReport
from recon_ds.models.sequence import BinSeq
from recon_ds.storage.report_storage import ReportStorage
from recon_ds.storage.serializers import check_schema, format_sequences, parse_sequences, read_sequences


def test_error_carries_its_cause():
    error = ReconError("Cannot write out.json", OSError("disk full"))
    assert str(error) == "Cannot write out.json (Caused by: disk full)"
    assert str(ReconError("plain")) == "plain"


@pytest.mark.parametrize("error,code", [
    (UsageError("--n", "missing"), 2),
    (ParamOutOfRangeError("s0", 4, 0, 3), 2),
    (TooLargeError(30, 24), 2),
    (NoCandidateError(), 1),
    (AmbiguousError(["0000", "1111"]), 1),
    (ReconError("io"), 1),
])
def test_exit_codes(error, code):
    assert ReconErrorHandler.exit_code(error) == code


def test_error_messages():
    assert ReconErrorHandler.get_error_message(UsageError("--n", "missing")) == "❌ Invalid usage: --n: missing"
    assert "[0, 3]" in ReconErrorHandler.get_error_message(ParamOutOfRangeError("s0", 4, 0, 3))
    assert "2 codewords" in ReconErrorHandler.get_error_message(AmbiguousError(["0000", "1111"]))
    assert ReconErrorHandler.get_error_message(ValueError("boom")) == "❌ Unexpected error: boom"


def test_repository_config(config):
    assert config.max_n == 24
    assert config.schema == "recon-ds/v1"
    assert config.overrides.locbal_eps == Fraction(1, 4)
    assert config.channel.enumerate_max_n == 16
    assert config.channel.codebook_specs == 8
    assert get_config() is config


def test_ini_file(write_ini):
    path = write_ini(
        "[general]\nmax_n = 12\n"
        "[sweeps]\njobs = 3\nbound_max_n = 9\n"
        "[overrides]\nlocbal_eps = 1/18\n"
        "[logging]\nlog_level = DEBUG\n"
    )
    config = ReconConfig(path)
    assert config.max_n == 12
    assert config.sweeps.jobs == 3
    assert config.sweeps.bound_max_n == 9
    assert config.sweeps.structure_max_n == 12
    assert config.overrides.locbal_eps == Fraction(1, 18)
    assert config.logging.log_level == "DEBUG"


def test_bad_values_fall_back(write_ini):
    config = ReconConfig(write_ini("[sweeps]\njobs = many\n[overrides]\nlocbal_eps = 1/0\n"))
    assert config.sweeps.jobs == 1
    assert config.overrides.locbal_eps == Fraction(1, 4)


def test_missing_file_uses_defaults(tmp_path):
    config = ReconConfig(str(tmp_path / "absent.ini"))
    assert config.max_n == 24
    assert config.sweeps.witness_limit == 10


def test_environment_overrides(monkeypatch, write_ini):
    path = write_ini("[general]\nmax_n = 12\n")
    monkeypatch.setenv("RECON_DS_MAX_N", "18")
    monkeypatch.setenv("RECON_DS_JOBS", "0")
    monkeypatch.setenv("RECON_DS_LOG_LEVEL", "WARNING")
    config = reload_config(path)
    assert config.max_n == 18
    assert config.sweeps.jobs == 1
    assert config.logging.log_level == "WARNING"


def test_parse_sequences():
    text = "# reads\n0110\n\n  1010  \n"
    assert parse_sequences(text) == [BinSeq("0110"), BinSeq("1010")]
    assert format_sequences([BinSeq("0110")]) == "0110\n"


def test_parse_sequences_rejects_mixed_lengths():
    with pytest.raises(ReconError):
        parse_sequences("0110\n101\n")


def test_read_sequences_missing_file(tmp_path):
    with pytest.raises(ReconError) as info:
        read_sequences(tmp_path / "absent.txt")
    assert info.value.original_error is not None


def test_report_storage(tmp_path):
    storage = ReportStorage(tmp_path / "out" / "reports.json")
    report = VerifyReport("bound-c14", (6, 7), params={"N": 14}, pairs_scanned=12,
                          max_observed=9, bound=13, witnesses=[{"x": "0000", "y": "1111", "observed": 9}],
                          regime="nominal", note="checked")
    storage.save([report])
    (loaded,) = storage.load()
    assert loaded.to_dict(include_time=False) == report.to_dict(include_time=False)


def test_report_storage_schema(tmp_path):
    path = tmp_path / "other.json"
    path.write_text('{"schema": "other/v9", "data": []}', encoding="utf-8")
    with pytest.raises(ReconError):
        ReportStorage(path).load()
    with pytest.raises(ReconError):
        check_schema([])


def test_report_storage_keeps_advisory_flag(tmp_path):
    storage = ReportStorage(tmp_path / "advisory.json")
    report = VerifyReport("i-family-nonempty", (5, 5), pairs_scanned=3, max_observed=1,
                          passed=False, regime="nominal", advisory=True)
    storage.save([report])
    (loaded,) = storage.load()
    assert loaded.advisory
    assert not loaded.failed
