"""
Bit-string kernels
==================

Raw '0'/'1' string primitives used inside the exhaustive sweeps, where
wrapping every intermediate sequence in a BinSeq would dominate the cost.
Indices here are 1-based, like the public API.
"""

from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterator, List, Tuple

FLIP = {"0": "1", "1": "0"}


def flip(s: str, i: int) -> str:
    return s[:i - 1] + FLIP[s[i - 1]] + s[i:]


def delete(s: str, d: int) -> str:
    return s[:d - 1] + s[d:]


def hamming(a: str, b: str) -> int:
    if not a:
        return 0
    return (int(a, 2) ^ int(b, 2)).bit_count()


def diff_indices(a: str, b: str) -> List[int]:
    return [i for i, (p, q) in enumerate(zip(a, b), start=1) if p != q]


def run_starts(s: str) -> List[int]:
    """1-based start index of every run."""
    return [i for i in range(1, len(s) + 1) if i == 1 or s[i - 1] != s[i - 2]]


def run_labels(s: str) -> List[int]:
    """run_labels(s)[i-1] is the 1-based index of the run containing position i."""
    labels = []
    run = 0
    for i, c in enumerate(s):
        if i == 0 or c != s[i - 1]:
            run += 1
        labels.append(run)
    return labels


def all_sequences(n: int) -> Iterator[str]:
    """Every length-n bit string in lexicographic order."""
    for bits in product("01", repeat=n):
        yield "".join(bits)


@lru_cache(maxsize=1 << 16)
def deletion_ball(s: str) -> FrozenSet[str]:
    return frozenset(delete(s, d) for d in run_starts(s))


def substitution_ball(s: str) -> FrozenSet[str]:
    return frozenset([s] + [flip(s, i) for i in range(1, len(s) + 1)])


@lru_cache(maxsize=1 << 16)
def ds_ball(s: str) -> FrozenSet[str]:
    out = set()
    for w in deletion_ball(s):
        out.add(w)
        for i in range(1, len(w) + 1):
            out.add(flip(w, i))
    return frozenset(out)


def substitution_midpoints(u: str, v: str) -> Tuple[str, ...]:
    """S(u) ∩ S(v) for u != v: {u, v} at distance 1, two midpoints at distance 2."""
    dh = hamming(u, v)
    if dh == 1:
        return (u, v)
    if dh == 2:
        j1, j2 = diff_indices(u, v)
        return (flip(u, j1), flip(u, j2))
    return ()


def period(s: str) -> int:
    n = len(s)
    for t in range(1, n):
        if s[t:] == s[:n - t]:
            return t
    return max(n, 1)


def max_periodic_run(s: str, tmax: int) -> int:
    """Longest substring whose period is at most tmax."""
    n = len(s)
    best = min(n, tmax)
    for p in range(1, min(tmax, n - 1) + 1):
        streak = 0
        for k in range(n - p):
            if s[k] == s[k + p]:
                streak += 1
                best = max(best, streak + p)
            else:
                streak = 0
    return best
