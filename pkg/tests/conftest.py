import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, Verbosity, errors, settings

from recon_ds.core.config import reload_config

ROOT = Path(__file__).resolve().parent.parent
CONFIG_PATH = ROOT / "config" / "recon_config.ini"

settings.register_profile("ci", settings(max_examples=200, deadline=None,
                                         suppress_health_check=[HealthCheck.filter_too_much]))
settings.register_profile("dev", settings(max_examples=40, deadline=None,
                                          suppress_health_check=[HealthCheck.filter_too_much]))
settings.register_profile("debug", settings(max_examples=10, verbosity=Verbosity.verbose, deadline=None))
try:
    env = os.getenv('HYPOTHESIS_PROFILE', 'dev')
    settings.load_profile(env)
except errors.InvalidArgument:
    sys.exit('Unknown hypothesis profile: %s.' % env)


@pytest.fixture(autouse=True)
def config(monkeypatch):
    """Fresh configuration from the repository INI for every test."""
    for key in ("RECON_DS_MAX_N", "RECON_DS_JOBS", "RECON_DS_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    yield reload_config(str(CONFIG_PATH))
    reload_config(str(CONFIG_PATH))


@pytest.fixture
def write_ini(tmp_path):
    """Write an INI file and return its path."""
    def _write(text: str) -> str:
        path = tmp_path / "recon_config.ini"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
