"""
Command Line
============

ReconCLI builds the root argparse parser, loads every command module in
recon_ds.commands (each exposes setup(cli)), and dispatches one
invocation. run(argv) returns the process exit code: 0 on success or a
passing verification, 1 on a failed verification or library error, 2 on
usage errors.
"""

import argparse
import importlib
import logging
import pkgutil
import sys
from typing import Callable, List, Optional, Sequence, TextIO

from . import commands
from .core.config import reload_config
from .core.exceptions import ReconError, ReconErrorHandler, UsageError

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, TextIO], int]


class ReconCLI:
    """Root parser plus the command modules registered on it."""

    def __init__(self, out: Optional[TextIO] = None, err: Optional[TextIO] = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.parser = argparse.ArgumentParser(
            prog="recon",
            description="Reconstruction codes for one deletion plus one substitution",
        )
        self.parser.add_argument("--config", help="INI configuration file")
        self.parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                                 help="Override the configured log level")
        self.parser.add_argument("--jobs", type=int, help="Worker processes for sweeps")
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="command")
        self.loaded_commands: List[str] = []
        self.load_all_commands()

    def load_all_commands(self) -> None:
        """Import every public module under recon_ds.commands and call its setup."""
        for info in pkgutil.iter_modules(commands.__path__):
            if info.name.startswith("_"):
                continue
            try:
                module = importlib.import_module(f"{commands.__name__}.{info.name}")
                module.setup(self)
                self.loaded_commands.append(info.name)
                logger.debug(f"✅ Loaded command module: {info.name}")
            except Exception as e:
                logger.error(f"❌ Failed to load command module {info.name}: {e}")

    def add_command(self, name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
        parser = self.subparsers.add_parser(name, help=help, description=help)
        parser.set_defaults(handler=handler)
        return parser

    def parse(self, argv: Optional[Sequence[str]]) -> argparse.Namespace:
        return self.parser.parse_args(argv)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            args = self.parse(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        if getattr(args, "handler", None) is None:
            self.parser.print_usage(self.err)
            return 2

        try:
            if args.config:
                reload_config(args.config)
            if args.log_level:
                logging.getLogger().setLevel(args.log_level)
            if args.jobs is not None and args.jobs < 1:
                raise UsageError("--jobs", "must be at least 1")
            return args.handler(args, self.out)
        except ReconError as e:
            ReconErrorHandler.log_error(e, args.command)
            print(ReconErrorHandler.get_error_message(e), file=self.err)
            return ReconErrorHandler.exit_code(e)


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    """Parse argv, run the command, and return its exit code."""
    return ReconCLI(out, err).run(argv)
