"""
Sharded Sweeps
==============

Runs a module-level worker over a list of shards, inline for one job or
on a process pool otherwise, and merges the partial results in shard
order so the outcome does not depend on the worker count.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from ..core.config import get_config

logger = logging.getLogger(__name__)


@dataclass
class ShardResult:
    """Partial outcome of one check over one shard."""

    scanned: int = 0
    max_observed: int = 0
    violations: int = 0
    witnesses: List[Dict[str, Any]] = field(default_factory=list)

    def observe(self, value: int, witness: Dict[str, Any], limit: int) -> None:
        """Track an extremal value; keeps witnesses of the largest value seen."""
        if value > self.max_observed:
            self.max_observed = value
            self.witnesses = [dict(witness, observed=value)]
        elif value == self.max_observed and len(self.witnesses) < limit:
            self.witnesses.append(dict(witness, observed=value))

    def fail(self, witness: Dict[str, Any], limit: int) -> None:
        """Record one predicate violation."""
        self.violations += 1
        if len(self.witnesses) < limit:
            self.witnesses.append(dict(witness))


def _witness_key(w: Dict[str, Any]) -> Tuple:
    return (-w.get("observed", 0), str(w.get("x", "")), str(w.get("y", "")), repr(sorted(w.items())))


def merge(results: Iterable[ShardResult], limit: int, mode: str = "max") -> ShardResult:
    """
    Combine shard results: sums of counts, the overall maximum, and the
    witnesses sorted by value then lexicographically, truncated to limit.
    In "max" mode only witnesses attaining the overall maximum are kept.
    """
    out = ShardResult()
    pool: List[Dict[str, Any]] = []
    for part in results:
        out.scanned += part.scanned
        out.violations += part.violations
        out.max_observed = max(out.max_observed, part.max_observed)
        pool.extend(part.witnesses)
    if mode == "max":
        pool = [w for w in pool if w.get("observed", 0) == out.max_observed]
    out.witnesses = sorted(pool, key=_witness_key)[:limit]
    return out


def merge_checks(results: Iterable[Dict[str, ShardResult]], limit: int,
                 modes: Dict[str, str]) -> Dict[str, ShardResult]:
    """Merge per-check dictionaries produced by battery workers."""
    buckets: Dict[str, List[ShardResult]] = {check: [] for check in modes}
    for part in results:
        for check, value in part.items():
            buckets.setdefault(check, []).append(value)
    return {check: merge(values, limit, modes.get(check, "violations"))
            for check, values in buckets.items()}


def resolve_jobs(jobs=None) -> int:
    if jobs is None:
        jobs = get_config().sweeps.jobs
    return max(1, int(jobs))


def run_sharded(func: Callable, shards: Sequence, jobs=None) -> List:
    """
    Apply func to every shard and return the results in shard order.

    func must be a module-level callable so that it can be sent to
    worker processes.
    """
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(shards) <= 1:
        return [func(shard) for shard in shards]

    logger.debug(f"Dispatching {len(shards)} shards to {jobs} workers")
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, shards))


def int_ranges(total: int, chunk: int) -> List[Tuple[int, int]]:
    """Split [0, total) into consecutive half-open ranges of at most chunk items."""
    chunk = max(1, chunk)
    return [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
