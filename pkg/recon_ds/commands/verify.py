"""verify: run a verification suite and report pass/fail per check."""

import argparse
import json
import logging
from typing import List, TextIO

from ..core.config import get_config
from ..models.report import VerifyReport
from ..services.verifier import SUITES, replay, run_suite
from ..storage.report_storage import ReportStorage
from ._options import parse_n_range

logger = logging.getLogger(__name__)


def _text(reports: List[VerifyReport], replayed: dict) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else ("WARN" if r.advisory else "FAIL")
        lines.append(f"{status} {r.check_id:<24} n={r.n_range[0]}..{r.n_range[1]} {r.regime:<8} "
                     f"scanned={r.pairs_scanned} observed={r.max_observed} bound={r.bound}")
        if r.note:
            lines.append(f"     note: {r.note}")
        if not r.passed:
            for w in r.witnesses:
                lines.append(f"     witness: {json.dumps(w, sort_keys=True)}")
            if id(r) in replayed:
                lines.append(f"     replayed: {replayed[id(r)]}/{len(r.witnesses)} witnesses fail again")
    return "\n".join(lines) + "\n"


def verify_command(args: argparse.Namespace, out: TextIO) -> int:
    if args.n_range:
        n_range = parse_n_range(args.n_range)
    elif args.n is not None:
        n_range = parse_n_range(str(args.n))
    else:
        n_range = None

    reports = run_suite(
        args.suite,
        n_range,
        family=args.family,
        N=args.reads,
        samples=args.samples,
        seed=get_config().channel.seed if args.seed is None else args.seed,
        P_values=tuple(args.P) if args.P else (4, 6),
        jobs=args.jobs,
    )

    replayed = {}
    if args.replay:
        for r in reports:
            if not r.passed:
                replayed[id(r)] = sum(1 for w in r.witnesses if replay(r, w))

    if args.json is None:
        out.write(_text(reports, replayed))
    elif args.json == "-":
        out.write(ReportStorage.render(reports, include_time=False))
    else:
        ReportStorage(args.json).save(reports)

    failed = [r.check_id for r in reports if r.failed]
    if failed:
        logger.error(f"❌ {len(failed)} of {len(reports)} checks failed: {', '.join(failed)}")
        return 1
    logger.info(f"✅ All {len(reports)} checks passed")
    return 0


def setup(cli) -> None:
    parser = cli.add_command("verify", verify_command, "Run a verification suite")
    parser.add_argument("--suite", choices=SUITES, required=True)
    parser.add_argument("--n", type=int, help="Single length")
    parser.add_argument("--n-range", help="Inclusive range LO..HI")
    parser.add_argument("--family", choices=["vt", "c1", "c14", "cl", "c5", "c11", "c9"],
                        help="Restrict the bounds suite to one family")
    parser.add_argument("--reads", type=int, help="Reconstruction N for the bounds suite")
    parser.add_argument("--samples", type=int, default=100_000, help="Random quadruples for the delta suite")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--P", type=int, nargs="+", help="Window lengths for the pbounded suite")
    parser.add_argument("--replay", action="store_true", help="Re-run failing witnesses through the library")
    parser.add_argument("--json", nargs="?", const="-", metavar="PATH",
                        help="Write the reports as JSON to stdout, or to PATH")
