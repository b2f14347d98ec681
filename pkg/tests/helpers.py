"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive and shares no code with the package:
containment tries every subsequence, statistics apply their definitions
window by window, and classes are built by filtering itertools output.
"""

import itertools


def naive_contains(host, pattern):
    m = len(pattern)
    if m == 0:
        return True
    for idxs in itertools.combinations(range(len(host)), m):
        vals = [host[i] for i in idxs]
        if all((vals[a] < vals[b]) == (pattern[a] < pattern[b])
               for a in range(m) for b in range(m) if a != b):
            return True
    return False


def naive_class(n, patterns):
    return [p for p in itertools.permutations(range(1, n + 1))
            if not any(naive_contains(p, q) for q in patterns)]


def naive_stat(kind, p):
    n = len(p)
    if kind == "asc":
        return sum(p[i] < p[i + 1] for i in range(n - 1))
    if kind == "des":
        return sum(p[i] > p[i + 1] for i in range(n - 1))
    if kind == "dasc":
        return sum(p[i] < p[i + 1] and p[i + 1] < p[i + 2] for i in range(n - 2))
    if kind == "ddes":
        return sum(p[i] > p[i + 1] and p[i + 1] > p[i + 2] for i in range(n - 2))
    if kind == "pk":
        return sum(p[i] < p[i + 1] and p[i + 1] > p[i + 2] for i in range(n - 2))
    if kind == "vl":
        return sum(p[i] > p[i + 1] and p[i + 1] < p[i + 2] for i in range(n - 2))
    raise ValueError(kind)


def naive_dist(kind, n, patterns):
    counts = {}
    for p in naive_class(n, patterns):
        v = naive_stat(kind, p)
        counts[v] = counts.get(v, 0) + 1
    return counts
