"""The six consecutive statistics on permutations.

Each statistic counts windows of adjacent positions: ascents and descents
use windows of length 2; double ascents, double descents, peaks, and
valleys use windows of length 3.  Every statistic of the empty and the
singleton permutation is 0.
"""

from __future__ import annotations

from .perms import Perm, reduce_word

STATS = ("asc", "des", "dasc", "ddes", "pk", "vl")


def asc(p: Perm) -> int:
    """Number of positions i with p[i] < p[i+1]."""
    return sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])


def des(p: Perm) -> int:
    """Number of positions i with p[i] > p[i+1]."""
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def dasc(p: Perm) -> int:
    """Number of positions i with p[i] < p[i+1] < p[i+2]."""
    return sum(1 for i in range(len(p) - 2) if p[i] < p[i + 1] < p[i + 2])


def ddes(p: Perm) -> int:
    """Number of positions i with p[i] > p[i+1] > p[i+2]."""
    return sum(1 for i in range(len(p) - 2) if p[i] > p[i + 1] > p[i + 2])


def pk(p: Perm) -> int:
    """Number of positions i with p[i] < p[i+1] > p[i+2]."""
    return sum(1 for i in range(len(p) - 2) if p[i] < p[i + 1] > p[i + 2])


def vl(p: Perm) -> int:
    """Number of positions i with p[i] > p[i+1] < p[i+2]."""
    return sum(1 for i in range(len(p) - 2) if p[i] > p[i + 1] < p[i + 2])


_FUNCS = {"asc": asc, "des": des, "dasc": dasc, "ddes": ddes, "pk": pk, "vl": vl}


def stat(kind: str, p: Perm) -> int:
    """Evaluate one of the six statistics by name."""
    try:
        return _FUNCS[kind](p)
    except KeyError:
        raise ValueError(f"unknown statistic {kind!r}; expected one of {STATS}") from None


def all_stats(p: Perm) -> dict[str, int]:
    """All six statistics in a single pass over ``p``."""
    a = d = da = dd = peaks = valleys = 0
    prev_up = None
    for i in range(len(p) - 1):
        up = p[i] < p[i + 1]
        if up:
            a += 1
        else:
            d += 1
        if prev_up is not None:
            if prev_up and up:
                da += 1
            elif prev_up and not up:
                peaks += 1
            elif not prev_up and up:
                valleys += 1
            else:
                dd += 1
        prev_up = up
    return {"asc": a, "des": d, "dasc": da, "ddes": dd, "pk": peaks, "vl": valleys}


def consec3_count(p: Perm, pattern: Perm) -> int:
    """Number of windows p[i] p[i+1] p[i+2] reducing to ``pattern``.

    >>> consec3_count((1, 2, 3, 4, 5, 6), (1, 2, 3))
    4
    """
    if len(pattern) != 3:
        raise ValueError(f"pattern must have length 3: {pattern!r}")
    return sum(1 for i in range(len(p) - 2)
               if reduce_word(p[i:i + 3]) == pattern)
