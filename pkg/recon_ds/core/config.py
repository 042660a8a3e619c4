"""
Configuration Management for recon-ds
=====================================

Loads sweep limits, channel defaults, desk-scale overrides and logging
settings from an INI file, with environment variables taking precedence.
"""

import os
import configparser
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional
import logging


logger = logging.getLogger('recon.config')

DEFAULT_MAX_N = 24
SCHEMA = "recon-ds/v1"


@dataclass
class SweepConfig:
    """Limits and worker settings for exhaustive sweeps."""
    jobs: int = 1
    witness_limit: int = 10
    chunk_size: int = 256
    structure_max_n: int = 12
    bound_max_n: int = 14
    delta_exhaustive_max_n: int = 10
    delta_random_max_n: int = 20
    count_max_n: int = 20
    residue_scan_max_n: int = 16


@dataclass
class ChannelConfig:
    """Defaults for the simulated deletion-substitution channel."""
    seed: int = 0
    trials: int = 100
    pure_deletion_weight: float = 1.0
    enumerate_max_n: int = 16
    codebook_specs: int = 8


@dataclass
class OverrideConfig:
    """Desk-scale structural parameters (specs built from them are marked overridden)."""
    cdsp_p: int = 4
    locbal_l: int = 4
    locbal_eps: Fraction = Fraction(1, 4)
    c9_p: int = 4


@dataclass
class LoggingConfig:
    """Logging configuration."""
    log_level: str = "INFO"
    log_file: str = "recon.log"


class ReconConfig:
    """
    Main configuration class.

    Loads configuration from INI file and environment variables.
    Provides typed access to all configuration values.
    """

    DEFAULT_CONFIG_PATH = "config/recon_config.ini"

    def __init__(self, config_path: str = None):
        self.config_path = config_path or self.DEFAULT_CONFIG_PATH
        self._config = configparser.ConfigParser()

        self.max_n: int = DEFAULT_MAX_N
        self.schema: str = SCHEMA

        self.sweeps = SweepConfig()
        self.channel = ChannelConfig()
        self.overrides = OverrideConfig()
        self.logging = LoggingConfig()

        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from file and environment."""
        config_file = Path(self.config_path)

        if config_file.exists():
            self._config.read(config_file, encoding='utf-8')
            logger.info(f"Loaded configuration from {self.config_path}")
        else:
            logger.warning(f"Configuration file not found: {self.config_path}. Using defaults.")

        self._load_general_config()
        self._load_sweep_config()
        self._load_channel_config()
        self._load_override_config()
        self._load_logging_config()

    def _load_general_config(self) -> None:
        """Load general configuration."""
        section = 'general'

        self.max_n = self._getint(section, 'max_n', DEFAULT_MAX_N)
        self.schema = self._get(section, 'schema', SCHEMA)

        env_max_n = os.getenv('RECON_DS_MAX_N')
        if env_max_n:
            try:
                self.max_n = int(env_max_n)
            except ValueError:
                logger.error(f"Ignoring non-integer RECON_DS_MAX_N={env_max_n!r}")

    def _load_sweep_config(self) -> None:
        """Load sweep limits."""
        section = 'sweeps'

        self.sweeps = SweepConfig(
            jobs=self._getint(section, 'jobs', 1),
            witness_limit=self._getint(section, 'witness_limit', 10),
            chunk_size=self._getint(section, 'chunk_size', 256),
            structure_max_n=self._getint(section, 'structure_max_n', 12),
            bound_max_n=self._getint(section, 'bound_max_n', 14),
            delta_exhaustive_max_n=self._getint(section, 'delta_exhaustive_max_n', 10),
            delta_random_max_n=self._getint(section, 'delta_random_max_n', 20),
            count_max_n=self._getint(section, 'count_max_n', 20),
            residue_scan_max_n=self._getint(section, 'residue_scan_max_n', 16),
        )

        env_jobs = os.getenv('RECON_DS_JOBS')
        if env_jobs:
            try:
                self.sweeps.jobs = max(1, int(env_jobs))
            except ValueError:
                logger.error(f"Ignoring non-integer RECON_DS_JOBS={env_jobs!r}")

    def _load_channel_config(self) -> None:
        """Load channel simulation defaults."""
        section = 'channel'

        self.channel = ChannelConfig(
            seed=self._getint(section, 'seed', 0),
            trials=self._getint(section, 'trials', 100),
            pure_deletion_weight=self._getfloat(section, 'pure_deletion_weight', 1.0),
            enumerate_max_n=self._getint(section, 'enumerate_max_n', 16),
            codebook_specs=self._getint(section, 'codebook_specs', 8),
        )

    def _load_override_config(self) -> None:
        """Load desk-scale structural overrides."""
        section = 'overrides'

        self.overrides = OverrideConfig(
            cdsp_p=self._getint(section, 'cdsp_p', 4),
            locbal_l=self._getint(section, 'locbal_l', 4),
            locbal_eps=self._getfraction(section, 'locbal_eps', Fraction(1, 4)),
            c9_p=self._getint(section, 'c9_p', 4),
        )

    def _load_logging_config(self) -> None:
        """Load logging configuration."""
        section = 'logging'

        self.logging = LoggingConfig(
            log_level=os.getenv('RECON_DS_LOG_LEVEL') or self._get(section, 'log_level', 'INFO'),
            log_file=self._get(section, 'log_file', 'recon.log'),
        )

    # Helper methods for config parsing
    def _get(self, section: str, key: str, fallback: str = None) -> str:
        """Get a string value from config."""
        try:
            return self._config.get(section, key)
        except (configparser.NoSectionError, configparser.NoOptionError):
            return fallback

    def _getint(self, section: str, key: str, fallback: int = 0) -> int:
        """Get an integer value from config."""
        try:
            return self._config.getint(section, key)
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return fallback

    def _getfloat(self, section: str, key: str, fallback: float = 0.0) -> float:
        """Get a float value from config."""
        try:
            return self._config.getfloat(section, key)
        except (configparser.NoSectionError, configparser.NoOptionError, ValueError):
            return fallback

    def _getfraction(self, section: str, key: str, fallback: Fraction) -> Fraction:
        """Get an exact rational such as 1/18 from config."""
        raw = self._get(section, key)
        if raw is None:
            return fallback
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            logger.error(f"Invalid fraction for [{section}] {key}: {raw!r}")
            return fallback


_config: Optional[ReconConfig] = None


def get_config(config_path: Optional[str] = None) -> ReconConfig:
    """
    Get the global configuration instance.

    Args:
        config_path: Optional path to an INI file (used on first call only)

    Returns:
        ReconConfig instance
    """
    global _config
    if _config is None:
        _config = ReconConfig(config_path)
    return _config


def reload_config(config_path: Optional[str] = None) -> ReconConfig:
    """Reload configuration from file and environment."""
    global _config
    _config = ReconConfig(config_path)
    return _config
